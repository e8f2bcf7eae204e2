"""Riesz and logarithmic energies of point configurations on spheres."""

from ._core import (
    DomainError,
    Error,
    ParseError,
    PoleError,
    SingularConfigurationError,
    StagnationError,
    UnsupportedError,
    berezin_estimate,
    circle_exact,
    circle_exact_log,
    circle_expansion,
    conjectured_limit,
    constant,
    constant_catalog,
    energy,
    energy_and_gradient,
    epstein_hex,
    fit_constants,
    hurwitz_zeta,
    optimize,
    remainders,
    v_log_sphere,
    v_s_sphere,
    verify_bounds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
