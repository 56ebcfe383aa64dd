"""Cauchy-type integrals, jump decompositions and Faber polynomials."""

from ._core import (
    CauchyIntegral,
    Contour,
    Density,
    Error,
    ExteriorMap,
    JumpPair,
    LaurentPoly,
    __version__,
    check_holder,
    decompose,
    estimate_holder,
    faber_polynomials,
    faber_series,
    pv_cauchy,
    pv_unit,
    run_cli,
    solve_holomorphic_bvp,
    verify_cif,
    verify_vanishing,
)

__all__ = [
    "CauchyIntegral",
    "Contour",
    "Density",
    "Error",
    "ExteriorMap",
    "JumpPair",
    "LaurentPoly",
    "__version__",
    "check_holder",
    "decompose",
    "estimate_holder",
    "faber_polynomials",
    "faber_series",
    "pv_cauchy",
    "pv_unit",
    "run_cli",
    "solve_holomorphic_bvp",
    "verify_cif",
    "verify_vanishing",
]
