"""Tests for exact integer linear algebra."""

import random
from itertools import combinations
from math import gcd

import pytest
from sympy import Matrix

from heapknot.linalg import (
    IntMatrix,
    RowLattice,
    abelian_invariants,
    compress_rows,
    invariant_factors,
    kernel_basis,
    lattice_rank,
    quotient_invariants,
    smith_normal_form,
    solve_integer,
    xgcd,
)


def determinantal_factors(rows: list[list[int]]) -> tuple[int, ...]:
    """Invariant factors d_k / d_(k-1) from gcds of k×k minors."""
    M = Matrix(rows)
    m, n = M.shape
    factors = []
    previous = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                g = gcd(g, int(M.extract(list(r), list(c)).det()))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return tuple(factors)


def test_snf_known_example():
    """Test the textbook 3×3 example."""
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert smith_normal_form(rows).factors == (2, 6, 12)


@pytest.mark.parametrize("seed", range(6))
def test_snf_matches_minor_gcds(seed):
    """Test SNF factors against determinantal divisors."""
    rng = random.Random(seed)
    rows = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(3)]
    assert smith_normal_form(rows).factors == determinantal_factors(rows)


def test_snf_transforms():
    """Test that U·M·V is diagonal and U⁻¹ inverts U."""
    rows = [[4, 6, 2], [2, 8, 6]]
    snf = smith_normal_form(rows, left=True, right=True, left_inverse=True)
    U, V, Ui = (IntMatrix.from_dense(t) for t in (snf.left, snf.right, snf.left_inverse))
    D = (U @ IntMatrix.from_dense(rows) @ V).to_dense()
    assert [D[i][i] for i in range(snf.rank)] == list(snf.factors)
    assert all(D[i][j] == 0 for i in range(2) for j in range(3) if i != j)
    assert (Ui @ U) == IntMatrix.identity(2)


def test_invariant_factors_of_tall_matrix():
    """Test that compression keeps the invariant factors."""
    tall = IntMatrix.from_dense([[2, 0], [0, 3], [4, 0], [2, 3]])
    assert invariant_factors(tall) == (1, 6)
    assert compress_rows(tall).rows == 2


def test_kernel_basis_over_integers():
    """Test that kernel vectors are annihilated."""
    M = IntMatrix.from_dense([[1, 2, 3], [2, 4, 6]])
    basis = kernel_basis(M)
    assert len(basis) == 2
    assert all(M.apply(v) == [0, 0] for v in basis)
    assert lattice_rank(basis, 3) == 2


def test_kernel_basis_with_modulus():
    """Test {v : 2v ≡ 0 mod 4} = 2Z."""
    assert kernel_basis(IntMatrix.from_dense([[2]]), modulus=4) == [[2]]


def test_solve_integer():
    """Test exact and modular solving."""
    M = IntMatrix.from_dense([[2, 0], [0, 3]])
    assert solve_integer(M, [4, 9]) == [2, 3]
    assert solve_integer(M, [3, 0]) is None
    one = IntMatrix.from_dense([[2]])
    assert solve_integer(one, [1], modulus=5) == [3]
    assert solve_integer(one, [1], modulus=4) is None


def test_abelian_invariants():
    """Test cokernels of relation matrices."""
    cyclic = abelian_invariants(IntMatrix.from_columns([[2, 0], [0, 3]], rows=2))
    assert (cyclic.free_rank, cyclic.torsion) == (0, (6,))
    assert cyclic.describe() == "Z_6"
    assert cyclic.order() == 6
    mixed = abelian_invariants(IntMatrix.from_columns([[2, 0, 0]], rows=3))
    assert mixed.describe() == "Z_2 ⊕ Z^2"
    assert mixed.order() is None


def test_quotient_invariants():
    """Test lattice quotients with and without a modulus."""
    kernel = [[1, 0], [0, 1]]
    plain = quotient_invariants(kernel, [[2, 0]])
    assert (plain.free_rank, plain.torsion) == (1, (2,))
    assert len(plain.generators) == 2
    reduced = quotient_invariants(kernel, [[2, 0]], modulus=3)
    assert (reduced.free_rank, reduced.torsion) == (0, (3,))


def test_quotient_of_empty_kernel():
    """Test that a zero kernel gives the trivial group."""
    assert quotient_invariants([], []).is_trivial()


def test_row_lattice():
    """Test span membership over the integers."""
    lattice = RowLattice(2)
    assert lattice.add([2, 0])
    assert not lattice.add([3, 0])
    assert lattice.rank == 1
    assert [1, 0] in lattice
    assert [0, 1] not in lattice
    assert lattice.basis() == [{0: 1}]


def test_xgcd():
    """Test the Bezout identity."""
    x, y, g = xgcd(240, 46)
    assert x * 240 + y * 46 == g
    assert abs(g) == 2


def test_int_matrix_products():
    """Test multiplication, transpose and column access."""
    A = IntMatrix.from_dense([[1, 2], [3, 4]])
    B = IntMatrix.from_dense([[0, 1], [1, 0]])
    assert (A @ B).to_dense() == [[2, 1], [4, 3]]
    assert A.transpose().to_dense() == [[1, 3], [2, 4]]
    assert A.column(1) == [2, 4]
    assert A.apply([1, 1]) == [3, 7]
    assert A.reduce(2).to_dense() == [[1, 0], [1, 0]]
    with pytest.raises(ValueError):
        A @ IntMatrix.zeros(3, 1)


def test_int_matrix_rejects_out_of_range_entries():
    """Test that entries must lie inside the shape."""
    with pytest.raises(IndexError):
        IntMatrix(1, 1, {0: {2: 1}})
