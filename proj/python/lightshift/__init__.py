"""Nuclear-spin light shifts of alkaline-earth atoms on the 1S0 -> 3P1 line."""

from ._core import (
    ConfigError,
    DomainError,
    InfeasibleError,
    PoleError,
    a_coefficients,
    assemble_heff,
    asymptotic_b,
    b_coefficients,
    derive_constants,
    hf_energies,
    im_b_first_order,
    merit_scan,
    oracle_b,
    preset,
    rephasing_length,
    run,
    solve_tensor_cancellation,
    spin_operators,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "InfeasibleError",
    "PoleError",
    "a_coefficients",
    "assemble_heff",
    "asymptotic_b",
    "b_coefficients",
    "derive_constants",
    "hf_energies",
    "im_b_first_order",
    "merit_scan",
    "oracle_b",
    "preset",
    "rephasing_length",
    "run",
    "solve_tensor_cancellation",
    "spin_operators",
]
