"""Reading TSPLIB ``.tsp`` files and turning them into distance matrices.

Only the ``EUC_2D`` edge-weight type is understood. Node ids ``1..n`` are
remapped to dense indices ``0..n-1`` while parsing, so nothing downstream
ever sees the original ids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

ROUNDING_MODES = ("raw", "tsplib_nint")

_HEADER_KEYS = {"NAME", "TYPE", "COMMENT", "DIMENSION", "EDGE_WEIGHT_TYPE", "DISPLAY_DATA_TYPE"}


class TsplibParseError(ValueError):
    """Base class for problems found while reading a TSPLIB file."""

    def __init__(self, message: str, line_no: int | None = None, line: str | None = None):
        where = f"line {line_no}: {line!r}: " if line_no is not None else ""
        super().__init__(where + message)
        self.line_no = line_no
        self.line = line


class MalformedHeaderError(TsplibParseError):
    pass


class UnsupportedEdgeWeightTypeError(TsplibParseError):
    pass


class CoordinateCountError(TsplibParseError):
    pass


class DuplicateNodeError(TsplibParseError):
    pass


@dataclass(frozen=True)
class CityFile:
    name: str
    dimension: int
    edge_weight_type: str
    coords: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if self.dimension < 3:
            raise ValueError(f"dimension must be at least 3, got {self.dimension}")
        if len(self.coords) != self.dimension:
            raise ValueError(f"{len(self.coords)} coordinates for dimension {self.dimension}")


def parse_tsplib(text: str) -> CityFile:
    """Parse the text of a TSPLIB ``EUC_2D`` file.

    Every failure raises a distinct :class:`TsplibParseError` subclass whose
    message names the offending line.
    """
    header: dict[str, str] = {}
    header_lines: dict[str, int] = {}
    nodes: dict[int, tuple[float, float]] = {}
    section_line: int | None = None
    last_line = 0
    lines = text.splitlines()

    in_coords = False
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        last_line = line_no
        if line == "EOF":
            break
        if in_coords:
            parts = line.split()
            if len(parts) != 3:
                if parts and parts[0].rstrip(":").upper() in _HEADER_KEYS | {"NODE_COORD_SECTION"}:
                    raise MalformedHeaderError("keyword inside NODE_COORD_SECTION", line_no, raw)
                raise MalformedHeaderError("node line must be 'id x y'", line_no, raw)
            try:
                node_id = int(parts[0])
                x, y = float(parts[1]), float(parts[2])
            except ValueError:
                raise MalformedHeaderError("non-numeric node line", line_no, raw) from None
            if node_id in nodes:
                raise DuplicateNodeError(f"node id {node_id} appears twice", line_no, raw)
            nodes[node_id] = (x, y)
            continue
        if line.upper().startswith("NODE_COORD_SECTION"):
            in_coords = True
            section_line = line_no
            continue
        if ":" not in line:
            raise MalformedHeaderError("expected 'KEY: value'", line_no, raw)
        key, value = (s.strip() for s in line.split(":", 1))
        key = key.upper()
        header[key] = value
        header_lines[key] = line_no

    for key in ("DIMENSION", "EDGE_WEIGHT_TYPE"):
        if key not in header:
            raise MalformedHeaderError(f"missing {key} entry", last_line or None, None)
    if section_line is None:
        raise MalformedHeaderError("missing NODE_COORD_SECTION", last_line or None, None)

    dim_line = header_lines["DIMENSION"]
    try:
        dimension = int(header["DIMENSION"])
    except ValueError:
        raise MalformedHeaderError("DIMENSION is not an integer", dim_line, lines[dim_line - 1]) from None
    if dimension < 3:
        raise MalformedHeaderError("DIMENSION must be at least 3", dim_line, lines[dim_line - 1])

    ewt = header["EDGE_WEIGHT_TYPE"].upper()
    if ewt != "EUC_2D":
        ewt_line = header_lines["EDGE_WEIGHT_TYPE"]
        raise UnsupportedEdgeWeightTypeError(f"EDGE_WEIGHT_TYPE {ewt} is not supported",
                                             ewt_line, lines[ewt_line - 1])

    if len(nodes) != dimension:
        raise CoordinateCountError(
            f"DIMENSION is {dimension} but NODE_COORD_SECTION has {len(nodes)} nodes",
            dim_line, lines[dim_line - 1])
    if sorted(nodes) != list(range(1, dimension + 1)):
        bad = next(i for i in sorted(nodes) if not 1 <= i <= dimension)
        raise CoordinateCountError(f"node id {bad} outside 1..{dimension}", section_line,
                                   lines[section_line - 1])

    return CityFile(
        name=header.get("NAME", ""),
        dimension=dimension,
        edge_weight_type=ewt,
        coords=tuple(nodes[i] for i in range(1, dimension + 1)),
    )


def read_tsplib(path: str | Path) -> CityFile:
    return parse_tsplib(Path(path).read_text())


def _nint(x: float) -> float:
    # TSPLIB nint: (int)(x + 0.5); distances are non-negative.
    return float(math.floor(x + 0.5))


def euclidean_distance(a, b, rounding: str = "tsplib_nint") -> float:
    if rounding not in ROUNDING_MODES:
        raise ValueError(f"unknown rounding mode {rounding!r}")
    d = math.hypot(a[0] - b[0], a[1] - b[1])
    return _nint(d) if rounding == "tsplib_nint" else d


def build_matrix(cf: CityFile, rounding: str = "tsplib_nint") -> np.ndarray:
    """Return the ``n x n`` float64 distance matrix of a city file.

    Entries are integral in ``tsplib_nint`` mode, which keeps all tour-cost
    arithmetic exact in float64.
    """
    if rounding not in ROUNDING_MODES:
        raise ValueError(f"unknown rounding mode {rounding!r}")
    n = cf.dimension
    d = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            d[i, j] = d[j, i] = euclidean_distance(cf.coords[i], cf.coords[j], rounding)
    d.setflags(write=False)
    return d


def bundled_path(name: str) -> Path:
    """Path of a bundled instance such as ``"kroA100"``."""
    return Path(str(resources.files("motsp") / "data" / f"{name}.tsp"))


def known_optimum(name: str) -> int:
    import json

    data = json.loads((resources.files("motsp") / "data" / "optima.json").read_text())
    return data[name]
