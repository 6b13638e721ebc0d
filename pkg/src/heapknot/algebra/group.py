"""Finite groups given by multiplication tables, their heaps, subgroups and cosets."""

import itertools
import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from ..exceptions import GroupSpecError

logger = logging.getLogger(__name__)

_FACTOR = re.compile(r"^\s*([ZD])\s*(\d+)\s*$", re.IGNORECASE)


class FiniteGroup:
    """A finite group stored as dense tables over element indices.

    Elements are the integers ``0 .. order-1``. Every derived table (inverses,
    left quotients ``u⁻¹v``) is computed once so that the heap operation and
    the crossing maps are table lookups.
    """

    def __init__(
        self,
        mul: Sequence[Sequence[int]],
        names: Sequence[str],
        label: str = "",
        identity: int | None = None,
    ):
        order = len(mul)
        if order == 0:
            raise GroupSpecError("a group needs at least one element")
        if len(names) != order or len(set(names)) != order:
            raise GroupSpecError("element names must be unique, one per element")

        self.order = order
        self.mul: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in mul)
        self.names: tuple[str, ...] = tuple(names)
        self.label = label or f"G{order}"

        if identity is None:
            identity = next(
                (
                    e
                    for e in range(order)
                    if all(self.mul[e][x] == x == self.mul[x][e] for x in range(order))
                ),
                -1,
            )
        if identity < 0:
            raise GroupSpecError(f"table for {self.label} has no identity")
        self.identity = identity

        inv = [-1] * order
        for x in range(order):
            for y in range(order):
                if self.mul[x][y] == identity:
                    inv[x] = y
                    break
        if -1 in inv:
            raise GroupSpecError(f"table for {self.label} is missing inverses")
        self.inv: tuple[int, ...] = tuple(inv)

        # ldiv[u][v] = u⁻¹v
        self.ldiv: tuple[tuple[int, ...], ...] = tuple(
            tuple(self.mul[inv[u]][v] for v in range(order)) for u in range(order)
        )
        self._index = {name: i for i, name in enumerate(self.names)}

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def index(self, name: str) -> int:
        """Return the index of the element called ``name``."""
        try:
            return self._index[name.strip()]
        except KeyError:
            raise GroupSpecError(
                f"{name!r} is not an element of {self.label}; "
                f"known names: {', '.join(self.names)}"
            ) from None

    def name(self, x: int) -> str:
        return self.names[x]

    def product(self, *xs: int) -> int:
        """Multiply any number of elements left to right."""
        result = self.identity
        for x in xs:
            result = self.mul[result][x]
        return result

    def power(self, x: int, k: int) -> int:
        """Return x^k for any integer k."""
        base = x if k >= 0 else self.inv[x]
        result = self.identity
        for _ in range(abs(k)):
            result = self.mul[result][base]
        return result

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(
            self.mul[x][y] == self.mul[y][x]
            for x in range(self.order)
            for y in range(x + 1, self.order)
        )

    def check_associative(self) -> bool:
        """Exhaustively check associativity of the table."""
        m = self.mul
        return all(
            m[m[x][y]][z] == m[x][m[y][z]]
            for x, y, z in itertools.product(range(self.order), repeat=3)
        )

    def to_dict(self) -> dict:
        """Export as ``{order, names, mul_table}``."""
        return {
            "order": self.order,
            "names": list(self.names),
            "mul_table": [list(row) for row in self.mul],
        }


def heap(G: FiniteGroup, x: int, y: int, z: int) -> int:
    """Return the heap bracket [x,y,z] = x·y⁻¹·z."""
    return G.mul[x][G.ldiv[y][z]]


# T(x,y,z) of the ternary self-distributive structure is the heap bracket.
tsd = heap


def heap_is_para_associative(G: FiniteGroup) -> bool:
    """Check [[x,y,z],u,v] = [x,[u,z,y],v] = [x,y,[z,u,v]] on all quintuples."""
    for x, y, z, u, v in itertools.product(range(G.order), repeat=5):
        left = heap(G, heap(G, x, y, z), u, v)
        if left != heap(G, x, heap(G, u, z, y), v) or left != heap(
            G, x, y, heap(G, z, u, v)
        ):
            return False
    return True


def heap_is_tsd(G: FiniteGroup) -> bool:
    """Check T(T(x,y,z),u,v) = T(T(x,u,v),T(y,u,v),T(z,u,v)) on all quintuples."""
    for x, y, z, u, v in itertools.product(range(G.order), repeat=5):
        lhs = tsd(G, tsd(G, x, y, z), u, v)
        rhs = tsd(G, tsd(G, x, u, v), tsd(G, y, u, v), tsd(G, z, u, v))
        if lhs != rhs:
            return False
    return True


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"Z{n}: order must be at least 1")
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(mul, [str(a) for a in range(n)], label=f"Z{n}", identity=0)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group ⟨a,r | a² = rⁿ = 1, ara = r⁻¹⟩ of order 2n.

    Element ``s*n + i`` is ``a^s r^i``; names are ``r0..`` then ``ar0..``.
    """
    if n < 1:
        raise GroupSpecError(f"D{n}: n must be at least 1")

    def mult(p: int, q: int) -> int:
        s1, i1 = divmod(p, n)
        s2, i2 = divmod(q, n)
        sign = -1 if s2 else 1
        return ((s1 + s2) % 2) * n + (sign * i1 + i2) % n

    mul = [[mult(p, q) for q in range(2 * n)] for p in range(2 * n)]
    names = [f"r{i}" for i in range(n)] + [f"ar{i}" for i in range(n)]
    return FiniteGroup(mul, names, label=f"D{n}", identity=0)


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Direct product with elements ordered lexicographically in factor indices."""
    if not factors:
        raise GroupSpecError("direct product of no factors")
    if len(factors) == 1:
        return factors[0]

    tuples = list(itertools.product(*(range(f.order) for f in factors)))
    position = {t: i for i, t in enumerate(tuples)}
    mul = [
        [
            position[tuple(f.mul[a][b] for f, a, b in zip(factors, s, t, strict=True))]
            for t in tuples
        ]
        for s in tuples
    ]
    names = [
        "(" + ",".join(f.names[a] for f, a in zip(factors, t, strict=True)) + ")"
        for t in tuples
    ]
    identity = position[tuple(f.identity for f in factors)]
    label = "x".join(f.label for f in factors)
    return FiniteGroup(mul, names, label=label, identity=identity)


def make_group(spec: str) -> FiniteGroup:
    """Build a group from ``Z<n>``, ``D<n>`` or ``x``-separated products of them.

    Equal specs return the same instance.

    Args:
        spec: Group-spec text such as ``"Z4"``, ``"D3"`` or ``"Z2xZ2"``

    Returns:
        FiniteGroup with canonical element names

    Raises:
        GroupSpecError: On malformed text or n < 1
    """
    canonical = []
    for part in re.split(r"[xX×]", spec):
        match = _FACTOR.match(part)
        if not match:
            raise GroupSpecError(f"malformed group spec {spec!r} (factor {part!r})")
        canonical.append(f"{match.group(1).upper()}{int(match.group(2))}")
    return _build_group("x".join(canonical))


@lru_cache(maxsize=None)
def _build_group(canonical: str) -> FiniteGroup:
    factors = []
    for part in canonical.split("x"):
        kind, n = part[0], int(part[1:])
        factors.append(cyclic_group(n) if kind == "Z" else dihedral_group(n))
    group = direct_product(*factors)
    logger.debug(f"Built group {group.label} of order {group.order}")
    return group


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``owner`` given by its sorted member indices."""

    owner: FiniteGroup
    members: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def label(self) -> str:
        return "{" + ",".join(self.owner.names[m] for m in self.members) + "}"

    def is_valid(self) -> bool:
        G = self.owner
        members = set(self.members)
        return G.identity in members and all(
            G.mul[a][G.inv[b]] in members for a in members for b in members
        )


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Return the smallest subgroup containing ``gens``."""
    gens = list(gens)
    if not gens:
        raise GroupSpecError("generated_subgroup needs at least one generator")
    for g in gens:
        if not 0 <= g < G.order:
            raise GroupSpecError(f"element {g} out of range for {G.label}")

    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul[x][g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(sorted(members)))


def parse_subgroup(G: FiniteGroup, text: str) -> Subgroup:
    """Parse ``g1+g2+...`` (element names) into the subgroup they generate."""
    names = [t for t in text.split("+") if t.strip()]
    if not names:
        raise GroupSpecError(f"empty generator list {text!r}")
    return generated_subgroup(G, [G.index(t) for t in names])


@dataclass(frozen=True)
class CosetPartition:
    """Left cosets xH, with ``coset_of[x]`` the id of the coset containing x."""

    coset_of: tuple[int, ...]
    coset_count: int

    def same(self, x: int, y: int) -> bool:
        return self.coset_of[x] == self.coset_of[y]

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.coset_count)]
        for x, c in enumerate(self.coset_of):
            out[c].append(x)
        return out


def left_cosets(G: FiniteGroup, H: Subgroup) -> CosetPartition:
    """Partition G into left cosets of H, ids assigned in order of least element."""
    coset_of = [-1] * G.order
    count = 0
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        for h in H.members:
            coset_of[G.mul[x][h]] = count
        count += 1
    return CosetPartition(tuple(coset_of), count)


def cosets_intersect_trivially(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """True when no two distinct elements share both an H-coset and a K-coset."""
    ch, ck = left_cosets(G, H), left_cosets(G, K)
    seen = set()
    for x in range(G.order):
        key = (ch.coset_of[x], ck.coset_of[x])
        if key in seen:
            return False
        seen.add(key)
    return True
