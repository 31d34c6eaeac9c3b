"""1D Keller-Segel finite-volume solver with pluggable diffusion a(u)."""

from ._core import (
    CompatibilityError,
    ConfigError,
    Criticality,
    DiffusionSpec,
    DomainError,
    RunManifest,
    Variant,
    check_regest,
    eval_D,
    eval_D0,
    eval_F,
    eval_F0,
    eval_source,
    key_identity_residual,
    load_config,
    parse_config,
    run_scenario,
    self_checks,
    simulate,
    solve_elliptic,
)

__all__ = [
    "CompatibilityError",
    "ConfigError",
    "Criticality",
    "DiffusionSpec",
    "DomainError",
    "RunManifest",
    "Variant",
    "check_regest",
    "eval_D",
    "eval_D0",
    "eval_F",
    "eval_F0",
    "eval_source",
    "key_identity_residual",
    "load_config",
    "parse_config",
    "run_scenario",
    "self_checks",
    "simulate",
    "solve_elliptic",
]
