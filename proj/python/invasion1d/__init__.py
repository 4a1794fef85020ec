"""Invasion analysis for two-species reaction-diffusion competition on
translating and time-periodic intervals."""

from ._core import (
    ClassifyResult,
    ConfigError,
    DomainMotion,
    EigenResult,
    Example3Bounds,
    Grid,
    PeriodicFunction,
    ReactionModel,
    SteadyStateResult,
    Trajectory,
    check_scenario,
    classify_invasion,
    coupled_run,
    example3_bounds,
    mu_hat,
    period_mean,
    periodic_steady_state,
    principal_eigenpair,
    validate_config,
)

__all__ = [
    "ClassifyResult",
    "ConfigError",
    "DomainMotion",
    "EigenResult",
    "Example3Bounds",
    "Grid",
    "PeriodicFunction",
    "ReactionModel",
    "SteadyStateResult",
    "Trajectory",
    "check_scenario",
    "classify_invasion",
    "coupled_run",
    "example3_bounds",
    "mu_hat",
    "period_mean",
    "periodic_steady_state",
    "principal_eigenpair",
    "validate_config",
]
