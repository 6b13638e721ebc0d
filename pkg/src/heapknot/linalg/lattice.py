"""Integer row lattices kept in echelon form."""

import logging
from collections.abc import Iterable, Mapping, Sequence

from .matrix import IntMatrix

logger = logging.getLogger(__name__)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x·a + y·b = g = ±gcd(a, b)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def _combine(
    a: int, u: Mapping[int, int], b: int, v: Mapping[int, int]
) -> dict[int, int]:
    out: dict[int, int] = {}
    if a:
        for c, x in u.items():
            out[c] = a * x
    if b:
        for c, x in v.items():
            out[c] = out.get(c, 0) + b * x
    return {c: x for c, x in out.items() if x}


class RowLattice:
    """The Z-span of inserted integer vectors, held as an echelon basis.

    Each basis row is keyed by its pivot (leading) column and has a positive
    pivot. Inserting a vector applies unimodular row operations only, so the
    basis always spans exactly the inserted vectors and the kernel of the
    basis matrix equals the kernel of the matrix of all inserted rows.
    """

    __slots__ = ("dimension", "_rows")

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: dict[int, dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vector: Mapping[int, int] | Sequence[int]) -> bool:
        """Insert a vector; return True when the rank grew."""
        if isinstance(vector, Mapping):
            vec = {c: v for c, v in vector.items() if v}
        else:
            vec = {c: v for c, v in enumerate(vector) if v}
        while vec:
            j = min(vec)
            row = self._rows.get(j)
            if row is None:
                if vec[j] < 0:
                    vec = {c: -v for c, v in vec.items()}
                self._rows[j] = vec
                return True
            a, b = row[j], vec[j]
            if b % a == 0:
                vec = _combine(1, vec, -(b // a), row)
                continue
            x, y, g = xgcd(a, b)
            pivot_row = _combine(x, row, y, vec)
            vec = _combine(-(b // g), row, a // g, vec)
            if pivot_row[j] < 0:
                pivot_row = {c: -v for c, v in pivot_row.items()}
            self._rows[j] = pivot_row
        return False

    def extend(self, vectors: Iterable[Mapping[int, int] | Sequence[int]]) -> int:
        """Insert many vectors; return how many raised the rank."""
        return sum(1 for v in vectors if self.add(v))

    def __contains__(self, vector: Mapping[int, int] | Sequence[int]) -> bool:
        if isinstance(vector, Mapping):
            vec = {c: v for c, v in vector.items() if v}
        else:
            vec = {c: v for c, v in enumerate(vector) if v}
        while vec:
            j = min(vec)
            row = self._rows.get(j)
            if row is None or vec[j] % row[j]:
                return False
            vec = _combine(1, vec, -(vec[j] // row[j]), row)
        return True

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def basis(self) -> list[dict[int, int]]:
        return [dict(self._rows[j]) for j in sorted(self._rows)]

    def matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.basis(), self.dimension)


def lattice_rank(vectors: Iterable[Sequence[int]], dimension: int) -> int:
    """Rank of the Z-span of ``vectors``."""
    lattice = RowLattice(dimension)
    lattice.extend(vectors)
    return lattice.rank


def compress_rows(M: IntMatrix) -> IntMatrix:
    """Echelon basis of the row lattice of M (same kernel, same invariant factors)."""
    lattice = RowLattice(M.cols)
    for _, row in M.nonzero_rows():
        lattice.add(row)
    logger.debug(f"Compressed {M.rows} rows to {lattice.rank} over {M.cols} columns")
    return lattice.matrix()
