"""Job shop scheduling: exact solving, backbones and landscape experiments."""

from ._core import (
    Error,
    InfeasibleError,
    Instance,
    PartialResultError,
    SizeError,
    TimeoutError,
    ValidationError,
    backbone,
    backbone_experiment,
    ball_descent,
    brute_force_optimum,
    difficulty_experiment,
    distance,
    distance_experiment,
    exactness_experiment,
    is_acyclic,
    load_instance,
    lower_bound,
    makespan,
    parse_instance,
    quality_experiment,
    random_instance,
    random_schedule,
    rho_distances,
    solve,
)

__all__ = [name for name in dir() if not name.startswith("_")]
