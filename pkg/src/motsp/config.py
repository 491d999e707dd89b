from __future__ import annotations

import dataclasses
import warnings
from dataclasses import dataclass, field

LS_VARIANTS = ("off", "method_a_only", "method_b_only", "modified")

# hypervolume reference used for KroAB100-scale runs
DEFAULT_HV_REFERENCE = (200000.0, 200000.0)


@dataclass
class RunConfig:
    """Everything needed to reproduce a run. Defaults follow the KroAB100 setup."""

    instance_paths: list[str] = field(default_factory=list)
    rounding: str = "tsplib_nint"
    population: int = 400
    generations: int = 5000
    p_crossover: float = 0.9
    p_jg: float = 0.5
    p_local_search: float = 1.0
    local_search_variant: str = "modified"
    local_search_mode: str = "one_pass"
    seed: int = 0
    hv_reference: tuple[float, ...] = DEFAULT_HV_REFERENCE
    output_dir: str | None = None

    def __post_init__(self) -> None:
        self.hv_reference = tuple(float(v) for v in self.hv_reference)
        self.instance_paths = [str(p) for p in self.instance_paths]
        self.validate()

    def validate(self) -> None:
        for name in ("p_crossover", "p_jg", "p_local_search"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")
        if self.population < 1:
            raise ValueError("population must be positive")
        if self.generations < 0:
            raise ValueError("generations must be non-negative")
        if self.local_search_variant not in LS_VARIANTS:
            raise ValueError(f"unknown local search variant {self.local_search_variant!r}")
        if self.local_search_mode not in ("one_pass", "to_local_optimum"):
            raise ValueError(f"unknown local search mode {self.local_search_mode!r}")
        if self.rounding not in ("raw", "tsplib_nint"):
            raise ValueError(f"unknown rounding {self.rounding!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.population % 2:
            warnings.warn(f"odd population {self.population}: the last offspring pair contributes one child",
                          stacklevel=3)

    def replace(self, **changes) -> RunConfig:
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["hv_reference"] = list(self.hv_reference)
        return d
