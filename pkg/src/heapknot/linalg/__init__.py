"""Exact integer linear algebra: sparse matrices, lattices, Smith normal form."""

from .lattice import RowLattice, compress_rows, lattice_rank, xgcd
from .matrix import IntMatrix
from .quotient import AbelianGroup, abelian_invariants, quotient_invariants
from .snf import (
    SnfResult,
    invariant_factors,
    kernel_basis,
    smith_normal_form,
    solve_integer,
)

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "RowLattice",
    "SnfResult",
    "abelian_invariants",
    "compress_rows",
    "invariant_factors",
    "kernel_basis",
    "lattice_rank",
    "quotient_invariants",
    "smith_normal_form",
    "solve_integer",
    "xgcd",
]
