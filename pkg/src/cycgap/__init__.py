"""Exact computation of cyclotomic polynomials, their block structure, and
maximum exponent gaps."""

from cycgap._kernels import BACKEND
from cycgap.intpoly import IntPoly, format_poly
from cycgap.numtheory import (
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    mobius,
    psi_degree,
    radical,
)
from cycgap.cyclotomic import (
    gap_phi,
    phi_poly_oracle,
    phi_poly_radical,
    psi_poly,
)
from cycgap.blockgap import (
    BlockDecomposition,
    BlockParams,
    GapReport,
    VerificationReport,
    assemble_phi_mp,
    block_gap_report,
    decompose,
    make_params,
    max_gap_via_blocks,
    representative_block,
    theta,
    verify_instance,
    w_poly,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BlockDecomposition",
    "BlockParams",
    "GapReport",
    "IntPoly",
    "VerificationReport",
    "assemble_phi_mp",
    "block_gap_report",
    "decompose",
    "euler_phi",
    "factorize",
    "format_poly",
    "gap_phi",
    "is_prime",
    "is_squarefree",
    "make_params",
    "max_gap_via_blocks",
    "mobius",
    "phi_poly_oracle",
    "phi_poly_radical",
    "psi_degree",
    "psi_poly",
    "radical",
    "representative_block",
    "theta",
    "verify_instance",
    "w_poly",
]
