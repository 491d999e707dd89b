"""NSGA-II with Jumping Gene mutation and multi-objective 2-opt for the MOTSP."""

from .config import RunConfig
from .core import Individual, MotspInstance, as_tour, evaluate, random_tour, tour_cost_under
from .metrics import FrontSummary, front_summary, hypervolume_2d, nondominated_filter, schott_spacing
from .runner import RunRecord, compare_variants, load_instance, run
from .tsplib import CityFile, build_matrix, euclidean_distance, parse_tsplib, read_tsplib

__all__ = [
    "CityFile", "FrontSummary", "Individual", "MotspInstance", "RunConfig", "RunRecord",
    "as_tour", "build_matrix", "compare_variants", "euclidean_distance", "evaluate",
    "front_summary", "hypervolume_2d", "load_instance", "nondominated_filter", "parse_tsplib",
    "random_tour", "read_tsplib", "run", "schott_spacing", "tour_cost_under",
]
