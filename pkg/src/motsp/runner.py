"""Seeded end-to-end runs, variant comparison and result export."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .config import RunConfig
from .core import Individual, MotspInstance
from .metrics import FrontSummary, front_summary
from .nsga2 import initial_population, run_generation
from .tsplib import build_matrix, bundled_path, read_tsplib

log = logging.getLogger(__name__)


class InstanceError(ValueError):
    pass


def resolve_instance_path(path: str) -> Path:
    """``path`` itself if it exists, else a bundled instance of that name."""
    p = Path(path)
    if p.exists():
        return p
    bundled = bundled_path(p.stem)
    if p.parent == Path(".") and bundled.exists():
        return bundled
    raise FileNotFoundError(f"no such TSPLIB file: {path}")


def load_instance(cfg: RunConfig) -> MotspInstance:
    if not cfg.instance_paths:
        raise InstanceError("at least one instance path is required")
    files = [read_tsplib(resolve_instance_path(p)) for p in cfg.instance_paths]
    dims = {cf.dimension for cf in files}
    if len(dims) != 1:
        detail = ", ".join(f"{p}: {cf.dimension}" for p, cf in zip(cfg.instance_paths, files))
        raise InstanceError(f"instances differ in dimension ({detail})")
    return MotspInstance(tuple(build_matrix(cf, cfg.rounding) for cf in files),
                         names=tuple(cf.name for cf in files))


@dataclass
class RunRecord:
    config: RunConfig
    series: list[FrontSummary] = field(default_factory=list)
    front: list[Individual] = field(default_factory=list)
    duration: float = 0.0

    @property
    def front_fitness(self) -> list[tuple[float, ...]]:
        return [ind.fitness for ind in self.front]

    def to_json(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "hv_reference": list(self.config.hv_reference),
            "final": self.series[-1].to_dict() if self.series else None,
            "series": [s.to_dict() for s in self.series],
            "duration_seconds": self.duration,
        }


def first_front(pop: list[Individual]) -> list[Individual]:
    """Rank-1 members with one representative per distinct fitness vector."""
    seen = set()
    out = []
    for ind in pop:
        if ind.rank == 1 and ind.fitness not in seen:
            seen.add(ind.fitness)
            out.append(ind)
    return out


def _summary(front: list[Individual], cfg: RunConfig) -> FrontSummary:
    ref = cfg.hv_reference if len(front[0].fitness) == 2 else None
    return front_summary([ind.fitness for ind in front], ref)


def run(cfg: RunConfig, inst: MotspInstance | None = None, write: bool = True) -> RunRecord:
    """Initialize, run ``cfg.generations`` generations, and write the outputs
    to ``cfg.output_dir`` (when set and ``write`` is true).
    """
    if inst is None:
        inst = load_instance(cfg)
    out_dir = Path(cfg.output_dir) if cfg.output_dir and write else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)

    start = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    pop = initial_population(cfg.population, inst, rng)
    record = RunRecord(config=cfg)
    record.series.append(_summary(first_front(pop), cfg))
    for gen in range(1, cfg.generations + 1):
        pop = run_generation(pop, cfg, inst, rng)
        record.series.append(_summary(first_front(pop), cfg))
        if gen % 100 == 0:
            s = record.series[-1]
            log.info("gen %d: front size %d, hv %s, spacing %.2f", gen, s.size, s.hypervolume, s.spacing)
    record.front = first_front(pop)
    record.duration = time.perf_counter() - start

    if out_dir is not None:
        export_front_csv(record, out_dir / "front.csv")
        (out_dir / "run.json").write_text(json.dumps(record.to_json(), indent=2) + "\n")
        if inst.m == 2:
            from .plotting import export_scatter_svg

            labels = inst.names if all(inst.names) else None
            export_scatter_svg(record, out_dir / "front.svg", labels=labels)
    return record


def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


def front_csv_text(record: RunRecord) -> str:
    m = len(record.front[0].fitness) if record.front else record_objectives(record)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"f{k + 1}" for k in range(m)] + ["tour"])
    for ind in record.front:
        w.writerow([_fmt(v) for v in ind.fitness] + [" ".join(str(int(c)) for c in ind.tour)])
    return buf.getvalue()


def record_objectives(record: RunRecord) -> int:
    return max(len(record.config.instance_paths), 1)


def export_front_csv(record: RunRecord, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(front_csv_text(record))
    return path


def read_front_csv(path: str | Path) -> list[tuple[tuple[float, ...], np.ndarray]]:
    """Rows of a ``front.csv`` as ``(fitness, tour)`` pairs."""
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        m = len(header) - 1
        for row in reader:
            fitness = tuple(float(v) for v in row[:m])
            tour = np.array([int(c) for c in row[m].split()], dtype=np.int64)
            rows.append((fitness, tour))
    return rows


def _run_one(cfg: RunConfig) -> RunRecord:
    return run(cfg)


def compare_variants(base_cfg: RunConfig, variants: list[str], seeds: list[int],
                     out_dir: str | Path | None = None, workers: int = 1) -> list[dict]:
    """Run every (variant, seed) pair and tabulate final-front statistics.

    Each row holds the mean and sample standard deviation over seeds of
    spacing, hypervolume and the per-objective extent width.
    """
    if len(variants) < 2:
        raise ValueError("compare needs at least two variants")
    if not seeds:
        raise ValueError("compare needs at least one seed")
    out = Path(out_dir) if out_dir is not None else None
    jobs = []
    for vi, variant in enumerate(variants):
        for seed in seeds:
            sub = None
            if out is not None:
                sub = str(out / f"{vi}_{variant}" / f"seed_{seed}")
            jobs.append(base_cfg.replace(local_search_variant=variant, seed=seed, output_dir=sub))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            records = list(ex.map(_run_one, jobs))
    else:
        inst = load_instance(base_cfg)
        records = [run(cfg, inst) for cfg in jobs]

    rows = []
    per_variant: dict[int, list[RunRecord]] = {}
    for i, variant in enumerate(variants):
        recs = records[i * len(seeds):(i + 1) * len(seeds)]
        per_variant[i] = recs
        finals = [r.series[-1] for r in recs]
        row = {"variant": variant, "runs": len(recs)}
        row.update(_stats("spacing", [s.spacing for s in finals]))
        if all(s.hypervolume is not None for s in finals):
            row.update(_stats("hypervolume", [s.hypervolume for s in finals]))
        widths = np.array([s.widths() for s in finals])
        for k in range(widths.shape[1]):
            row.update(_stats(f"extent_f{k + 1}", list(widths[:, k])))
        rows.append(row)

    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        write_comparison_csv(rows, out / "comparison.csv")
        if all(len(recs[0].front[0].fitness) == 2 for recs in per_variant.values()):
            from .plotting import plot_comparison

            plot_comparison({f"{variants[i]}": recs[0] for i, recs in per_variant.items()},
                            out / "comparison.svg")
    return rows


def _stats(name: str, values: list[float]) -> dict:
    a = np.asarray(values, dtype=np.float64)
    std = float(a.std(ddof=1)) if len(a) > 1 else 0.0
    return {f"{name}_mean": float(a.mean()), f"{name}_std": std}


def write_comparison_csv(rows: list[dict], path: str | Path) -> Path:
    path = Path(path)
    fields = list(rows[0])
    for r in rows[1:]:
        fields.extend(k for k in r if k not in fields)
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()})
    return path
