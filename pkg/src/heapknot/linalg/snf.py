"""Smith normal form of integer matrices, with optional unimodular transforms."""

import logging
from dataclasses import dataclass
from math import gcd

from .lattice import compress_rows
from .matrix import IntMatrix

logger = logging.getLogger(__name__)

Dense = list[list[int]]


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_k of a matrix and optional transforms.

    When requested, ``left`` (U) and ``right`` (V) satisfy U·M·V = diag(factors)
    padded with zeros, and ``left_inverse`` is U⁻¹.
    """

    rows: int
    cols: int
    factors: tuple[int, ...]
    left: Dense | None = None
    right: Dense | None = None
    left_inverse: Dense | None = None

    @property
    def rank(self) -> int:
        return len(self.factors)

    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d != 1)


def _eye(n: int) -> Dense:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _Reducer:
    """Pivoting elimination on a dense copy, recording the requested transforms."""

    def __init__(self, A: Dense, cols: int, left: bool, right: bool, left_inverse: bool):
        self.A = A
        self.m = len(A)
        self.n = cols
        self.U = _eye(self.m) if left else None
        self.Ui = _eye(self.m) if left_inverse else None
        self.V = _eye(self.n) if right else None

    def swap_rows(self, a: int, b: int) -> None:
        if a == b:
            return
        A = self.A
        A[a], A[b] = A[b], A[a]
        if self.U is not None:
            self.U[a], self.U[b] = self.U[b], self.U[a]
        if self.Ui is not None:
            for row in self.Ui:
                row[a], row[b] = row[b], row[a]

    def swap_cols(self, a: int, b: int) -> None:
        if a == b:
            return
        for row in self.A:
            row[a], row[b] = row[b], row[a]
        if self.V is not None:
            for row in self.V:
                row[a], row[b] = row[b], row[a]

    def add_row(self, target: int, source: int, k: int, start: int) -> None:
        """row[target] += k * row[source]."""
        dst, src = self.A[target], self.A[source]
        for c in range(start, self.n):
            if src[c]:
                dst[c] += k * src[c]
        if self.U is not None:
            dst, src = self.U[target], self.U[source]
            for c in range(self.m):
                if src[c]:
                    dst[c] += k * src[c]
        if self.Ui is not None:
            for row in self.Ui:
                if row[target]:
                    row[source] -= k * row[target]

    def add_col(self, target: int, source: int, k: int, start: int) -> None:
        """col[target] += k * col[source]."""
        for r in range(start, self.m):
            row = self.A[r]
            if row[source]:
                row[target] += k * row[source]
        if self.V is not None:
            for row in self.V:
                if row[source]:
                    row[target] += k * row[source]

    def negate_row(self, a: int) -> None:
        self.A[a] = [-v for v in self.A[a]]
        if self.U is not None:
            self.U[a] = [-v for v in self.U[a]]
        if self.Ui is not None:
            for row in self.Ui:
                row[a] = -row[a]

    def min_abs(self, s: int) -> tuple[int, int] | None:
        best: tuple[int, int, int] | None = None
        for i in range(s, self.m):
            row = self.A[i]
            for j in range(s, self.n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        return i, j
        return None if best is None else (best[1], best[2])

    def non_divisible(self, s: int) -> int | None:
        p = self.A[s][s]
        for i in range(s + 1, self.m):
            row = self.A[i]
            for j in range(s + 1, self.n):
                if row[j] % p:
                    return i
        return None

    def run(self) -> tuple[int, ...]:
        A = self.A
        s = 0
        while s < min(self.m, self.n):
            pos = self.min_abs(s)
            if pos is None:
                break
            self.swap_rows(s, pos[0])
            self.swap_cols(s, pos[1])
            while True:
                p = A[s][s]
                for i in range(s + 1, self.m):
                    if A[i][s]:
                        self.add_row(i, s, -(A[i][s] // p), s)
                for j in range(s + 1, self.n):
                    if A[s][j]:
                        self.add_col(j, s, -(A[s][j] // p), s)
                leftovers = [
                    (abs(A[i][s]), i, s) for i in range(s + 1, self.m) if A[i][s]
                ] + [(abs(A[s][j]), s, j) for j in range(s + 1, self.n) if A[s][j]]
                if leftovers:
                    _, i, j = min(leftovers)
                    self.swap_rows(s, i)
                    self.swap_cols(s, j)
                    continue
                bad = self.non_divisible(s)
                if bad is None:
                    break
                self.add_row(s, bad, 1, s)
            if A[s][s] < 0:
                self.negate_row(s)
            s += 1
        return tuple(A[k][k] for k in range(s))


def smith_normal_form(
    M: IntMatrix | Dense,
    *,
    left: bool = False,
    right: bool = False,
    left_inverse: bool = False,
) -> SnfResult:
    """Compute the Smith normal form of an integer matrix.

    Pivots are chosen by smallest absolute value, ties broken by (row, col), so
    transforms are deterministic.

    Args:
        M: Matrix as IntMatrix or dense row lists
        left: Record the row transform U
        right: Record the column transform V
        left_inverse: Record U⁻¹

    Returns:
        SnfResult with the invariant factors and the requested transforms
    """
    if isinstance(M, IntMatrix):
        A, cols = M.to_dense(), M.cols
    else:
        A = [list(map(int, row)) for row in M]
        cols = len(A[0]) if A else 0
    rows = len(A)
    reducer = _Reducer(A, cols, left, right, left_inverse)
    factors = reducer.run()
    logger.debug(f"SNF of {rows}x{cols}: rank {len(factors)}")
    return SnfResult(rows, cols, factors, reducer.U, reducer.V, reducer.Ui)


def invariant_factors(M: IntMatrix | Dense) -> tuple[int, ...]:
    """Invariant factors of M; tall sparse input is compressed first."""
    if isinstance(M, IntMatrix) and M.rows > M.cols:
        M = compress_rows(M)
    return smith_normal_form(M).factors


def _column(T: Dense, j: int) -> list[int]:
    return [row[j] for row in T]


def kernel_basis(M: IntMatrix, modulus: int | None = None) -> list[list[int]]:
    """Basis of the kernel lattice of M.

    Without a modulus this is a Z-basis of {v : Mv = 0}. With modulus m it is a
    Z-basis of the full-rank lattice {v : Mv ≡ 0 (mod m)}, which contains m·Zⁿ.
    """
    B = compress_rows(M) if M.rows > 0 else M
    snf = smith_normal_form(B, right=True)
    V = snf.right
    assert V is not None
    r = snf.rank
    basis: list[list[int]] = []
    if modulus is not None:
        for i, d in enumerate(snf.factors):
            scale = modulus // gcd(d, modulus)
            basis.append([scale * x for x in _column(V, i)])
    basis.extend(_column(V, i) for i in range(r, M.cols))
    return basis


def solve_integer(
    M: IntMatrix, b: list[int], modulus: int | None = None
) -> list[int] | None:
    """Solve M·x = b over Z, or over Z_m when a modulus is given.

    Returns:
        A solution vector, or None when the system has none
    """
    snf = smith_normal_form(M, left=True, right=True)
    U, V = snf.left, snf.right
    assert U is not None and V is not None
    t = [sum(u * x for u, x in zip(row, b, strict=True) if u) for row in U]
    y = [0] * M.cols
    for i, d in enumerate(snf.factors):
        if modulus is None:
            if t[i] % d:
                return None
            y[i] = t[i] // d
        else:
            g = gcd(d, modulus)
            if t[i] % g:
                return None
            reduced = modulus // g
            y[i] = 0 if reduced == 1 else (t[i] // g) * pow(d // g, -1, reduced) % reduced
    for i in range(snf.rank, M.rows):
        if (t[i] if modulus is None else t[i] % modulus):
            return None
    x = [sum(v * yi for v, yi in zip(row, y, strict=True)) for row in V]
    if modulus is not None:
        x = [v % modulus for v in x]
    return x
