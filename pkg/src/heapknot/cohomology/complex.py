"""TSD chain and cochain complexes of a group heap.

Degree-n chains are indexed by (2n−1)-tuples, so C_1 ↔ X, C_2 ↔ X³ and
C_3 ↔ X⁵. The boundary of a (2n−1)-tuple is

    Σ_{i=1}^{n−1} (−1)^i [ (…, x̂_{2i}, x̂_{2i+1}, …)
                          − (x_1 x_{2i}⁻¹ x_{2i+1}, …, x_{2i−1} x_{2i}⁻¹ x_{2i+1},
                             x̂_{2i}, x̂_{2i+1}, x_{2i+2}, …) ].
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from ..algebra import FiniteGroup
from ..config import get_settings
from ..exceptions import BudgetExceededError, ComplexError
from ..linalg import IntMatrix, kernel_basis
from .variants import Variant

logger = logging.getLogger(__name__)


def _encode(t: tuple[int, ...], n: int) -> int:
    code = 0
    for x in t:
        code = code * n + x
    return code


def boundary_matrix(X: FiniteGroup, n: int) -> IntMatrix:
    """Matrix of d_n from (2n−1)-tuples (columns) to (2n−3)-tuples (rows).

    Args:
        X: Group heap
        n: Degree, one of 2, 3, 4

    Raises:
        BudgetExceededError: If |X|^(2n−1) exceeds the configured tuple guard
    """
    if n not in (2, 3, 4):
        raise ComplexError(f"boundary matrices are built for degrees 2..4, not {n}")
    length = 2 * n - 1
    size = X.order**length
    budget = get_settings().complex.max_tuple_count
    if size > budget:
        raise BudgetExceededError(f"d_{n} over {X.label}", size, budget)

    mul, ldiv = X.mul, X.ldiv
    data: dict[int, dict[int, int]] = {}
    for col, t in enumerate(itertools.product(range(X.order), repeat=length)):
        for i in range(1, n):
            sign = -1 if i % 2 else 1
            a, b = t[2 * i - 1], t[2 * i]
            w = ldiv[a][b]
            dropped = t[: 2 * i - 1] + t[2 * i + 1 :]
            moved = tuple(mul[x][w] for x in t[: 2 * i - 1]) + t[2 * i + 1 :]
            for tup, coeff in ((dropped, sign), (moved, -sign)):
                row = data.setdefault(_encode(tup, X.order), {})
                row[col] = row.get(col, 0) + coeff
    matrix = IntMatrix(X.order ** (length - 2), size, data)
    logger.debug(f"Built d_{n} for {X.label}: {matrix.rows}x{matrix.cols}, nnz {matrix.nnz}")
    return matrix


@dataclass(frozen=True)
class CochainComplex2:
    """The degree-2 slice of a variant's cochain complex.

    ``triples`` are the cochain coordinates (columns of ``equations`` and rows
    of ``coboundary``). ``equations`` holds one row per admitted quintuple,
    the cocycle condition

        ψ(x,y,z) − ψ(xw,yw,zw) − ψ(x,u,v) + ψ(xy⁻¹z,u,v) = 0,   w = u⁻¹v,

    with terms on non-coordinate triples dropped. ``coboundary`` is δ¹ on X
    restricted to the coordinates, ``constraint`` is δ¹ on the excluded
    triples a coboundary must vanish on.
    """

    group: FiniteGroup
    variant: Variant
    triples: tuple[tuple[int, int, int], ...]
    position: dict[int, int]
    equations: IntMatrix
    coboundary: IntMatrix | None
    constraint: IntMatrix | None

    @property
    def dimension(self) -> int:
        return len(self.triples)

    def code(self, x: int, y: int, z: int) -> int:
        n = self.group.order
        return (x * n + y) * n + z

    def column(self, x: int, y: int, z: int) -> int | None:
        return self.position.get(self.code(x, y, z))


def _delta_row(X: FiniteGroup, x: int, y: int, z: int) -> dict[int, int]:
    target = X.mul[x][X.ldiv[y][z]]
    return {} if target == x else {x: 1, target: -1}


@lru_cache(maxsize=64)
def cochain_complex(X: FiniteGroup, variant: Variant) -> CochainComplex2:
    """Assemble coordinates, cocycle equations and δ¹ for ``variant`` over X."""
    rules = variant.rules(X)
    n = X.order
    elems = range(n)
    mul, ldiv = X.mul, X.ldiv

    triples = tuple(
        (x, y, z)
        for x, y, z in itertools.product(elems, repeat=3)
        if rules.cochain_pair(y, z)
    )
    position = {(x * n + y) * n + z: i for i, (x, y, z) in enumerate(triples)}

    seen: set[tuple[tuple[int, int], ...]] = set()
    rows: list[dict[int, int]] = []
    for x, y, z, u, v in itertools.product(elems, repeat=5):
        if not rules.equation_pairs(y, z, u, v):
            continue
        w = ldiv[u][v]
        h = mul[x][ldiv[y][z]]
        row: dict[int, int] = {}
        for a, b, c, coeff in (
            (x, y, z, 1),
            (mul[x][w], mul[y][w], mul[z][w], -1),
            (x, u, v, -1),
            (h, u, v, 1),
        ):
            col = position.get((a * n + b) * n + c)
            if col is not None:
                row[col] = row.get(col, 0) + coeff
        row = {c: k for c, k in row.items() if k}
        if not row:
            continue
        key = tuple(sorted(row.items()))
        if key[0][1] < 0:
            key = tuple((c, -k) for c, k in key)
        if key in seen:
            continue
        seen.add(key)
        rows.append(row)
    equations = IntMatrix.from_rows(rows, len(triples))

    coboundary = None
    constraint = None
    if variant.has_degree_one:
        coboundary = IntMatrix.from_rows(
            [_delta_row(X, x, y, z) for x, y, z in triples], n
        )
        excluded = [
            _delta_row(X, x, y, z)
            for x, y, z in itertools.product(elems, repeat=3)
            if rules.constraint_pair(y, z)
        ]
        if excluded:
            constraint = IntMatrix.from_rows(excluded, n)

    logger.debug(
        f"Complex {variant.label} over {X.label}: {len(triples)} coordinates, "
        f"{equations.rows} distinct equations"
    )
    cx = CochainComplex2(X, variant, triples, position, equations, coboundary, constraint)
    if get_settings().complex.verify_complex:
        verify_complex(cx)
    return cx


def verify_complex(cx: CochainComplex2) -> None:
    """Check that every admissible coboundary satisfies the cocycle equations."""
    if cx.coboundary is None:
        return
    coboundary = cx.coboundary
    if cx.constraint is not None:
        admissible = kernel_basis(cx.constraint)
        coboundary = coboundary @ IntMatrix.from_columns(admissible, cx.group.order)
    product = cx.equations @ coboundary
    if not product.is_zero():
        raise ComplexError(f"δ²∘δ¹ != 0 for {cx.variant.label} over {cx.group.label}")
