"""Explicit 2-cocycle families and independence of their classes."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra import FiniteGroup, make_group
from ..exceptions import ComplexError, GroupSpecError
from ..linalg import RowLattice
from .cochain import Cochain2, coboundary
from .complex import cochain_complex
from .solver import cochain_vector, coboundary_generators, is_cocycle2
from .variants import Variant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NamedCocycle:
    """A cochain with its family label and the variant it is a cocycle in."""

    label: str
    cochain: Cochain2
    variant: Variant

    @property
    def group(self) -> FiniteGroup:
        return self.cochain.group

    def verify(self) -> bool:
        return is_cocycle2(self.cochain, self.variant)


def _group_for(spec: str, group: FiniteGroup | None) -> FiniteGroup:
    expected = make_group(spec)
    if group is None:
        return expected
    if group.order != expected.order or group.label != expected.label:
        raise GroupSpecError(f"this family lives on {spec}, not on {group.label}")
    return group


def degenerate_generator(X: FiniteGroup, modulus: int | None = None) -> NamedCocycle:
    """ψ = Σ_(x,y) χ_(x,y,y), generating the degenerate part of H²."""
    cochain = Cochain2.characteristic(
        X, ((x, y, y) for x in range(X.order) for y in range(X.order)), modulus
    )
    return NamedCocycle("deg", cochain, Variant.full())


def ring_cocycle(
    n: int, a: int, b: int, c: int, group: FiniteGroup | None = None
) -> NamedCocycle:
    """ψ(x,y,z) = (ax + b(z−y) + c)(z−y) on X = A = Z_n."""
    if n < 2:
        raise GroupSpecError(f"ring cocycles need n >= 2, got {n}")
    X = _group_for(f"Z{n}", group)
    cochain = Cochain2.from_function(
        X, lambda x, y, z: (a * x + b * (z - y) + c) * (z - y), modulus=n
    )
    return NamedCocycle(f"ring({a % n},{b % n},{c % n})", cochain, Variant.full())


def phi(n: int, i: int, group: FiniteGroup | None = None) -> NamedCocycle:
    """φ_i = Σ_x Σ_j χ_(x, j, j+i) on X = Z_n with integer values."""
    if not 1 <= i <= n - 1:
        raise GroupSpecError(f"phi index must be in 1..{n - 1}, got {i}")
    X = _group_for(f"Z{n}", group)
    cochain = Cochain2.characteristic(
        X, ((x, j, (j + i) % n) for x in range(n) for j in range(n))
    )
    return NamedCocycle(f"phi_{i}", cochain, Variant.nondegenerate())


def psi_dihedral(n: int, i: int, group: FiniteGroup | None = None) -> NamedCocycle:
    """ψ_i = Σ_x Σ_j [χ_(x, r^j, r^(j+i)) + χ_(x, ar^(−j), ar^(−j−i))] on D_n."""
    if not 1 <= i <= n - 1:
        raise GroupSpecError(f"psi index must be in 1..{n - 1}, got {i}")
    X = _group_for(f"D{n}", group)
    triples = []
    for x in range(2 * n):
        for j in range(n):
            triples.append((x, j, (j + i) % n))
            triples.append((x, n + (-j) % n, n + (-j - i) % n))
    cochain = Cochain2.characteristic(X, triples)
    return NamedCocycle(f"psi_{i}", cochain, Variant.nondegenerate())


def linear_combination(
    cocycles: Sequence[NamedCocycle], coefficients: Sequence[int]
) -> NamedCocycle:
    """Σ a_i·ψ_i over cocycles sharing a group, coefficients and variant."""
    if not cocycles or len(cocycles) != len(coefficients):
        raise ComplexError("need one coefficient per cocycle")
    variant = cocycles[0].variant
    total = cocycles[0].cochain.scale(coefficients[0])
    for cocycle, a in zip(cocycles[1:], coefficients[1:], strict=True):
        if cocycle.variant != variant:
            raise ComplexError("cannot combine cocycles from different variants")
        total = total + cocycle.cochain.scale(a)
    terms = "+".join(f"{a}*{c.label}" for c, a in zip(cocycles, coefficients, strict=True))
    return NamedCocycle(terms, total, variant)


def class_rank(
    cocycles: Sequence[NamedCocycle | Cochain2], variant: Variant | None = None
) -> int:
    """Rank of the span of the classes of integer cocycles in H².

    Computed as rank(cocycles ∪ B²) − rank(B²) with integer lattice ranks.

    Raises:
        ComplexError: On mixed groups, coefficients or variants, or Z_m values
    """
    if not cocycles:
        return 0
    chains = []
    variants = set()
    for item in cocycles:
        if isinstance(item, NamedCocycle):
            chains.append(item.cochain)
            variants.add(item.variant)
        else:
            chains.append(item)
    if variant is None:
        if len(variants) > 1:
            raise ComplexError("class_rank got cocycles from different variants")
        variant = variants.pop() if variants else Variant.full()
    group = chains[0].group
    if any(c.group is not group for c in chains):
        raise ComplexError("class_rank got cocycles over different groups")
    if any(c.modulus is not None for c in chains):
        raise ComplexError("class_rank works with integer coefficients")

    cx = cochain_complex(group, variant)
    lattice = RowLattice(cx.dimension)
    base = lattice.extend(coboundary_generators(cx, None))
    grown = lattice.extend(cochain_vector(cx, c) for c in chains)
    logger.debug(f"class_rank: coboundary rank {base}, classes add {grown}")
    return grown


def cocycle_from_spec(
    spec: str, X: FiniteGroup, modulus: int | None
) -> NamedCocycle:
    """Build a cocycle from CLI text.

    Forms: ``deg``, ``ring:a,b,c``, ``phi:i``, ``phi:a1,...,a_{n-1}``
    (Σ a_i φ_i), ``psi:i``, ``psi:a1,...``, ``cob:f0,f1,...`` (δ¹f).
    """
    family, _, args = spec.strip().partition(":")
    family = family.strip().lower()
    values = [int(a) for a in args.split(",") if a.strip()] if args else []

    if family == "deg":
        return degenerate_generator(X, modulus)
    if family == "ring":
        if len(values) != 3:
            raise GroupSpecError("ring cocycle needs three residues a,b,c")
        if modulus is None or modulus != X.order:
            raise GroupSpecError("ring cocycles take values in Z_n with n = |X|")
        return ring_cocycle(X.order, *values, group=X)
    if family in ("phi", "psi"):
        n = X.order if family == "phi" else X.order // 2
        build = phi if family == "phi" else psi_dihedral
        if len(values) == 1:
            named = build(n, values[0], group=X)
        else:
            if len(values) != n - 1:
                raise GroupSpecError(f"{family} vector needs {n - 1} coefficients")
            named = linear_combination(
                [build(n, i, group=X) for i in range(1, n)], values
            )
        if modulus is not None:
            named = NamedCocycle(named.label, named.cochain.reduce(modulus), named.variant)
        return named
    if family == "cob":
        if len(values) != X.order:
            raise GroupSpecError(f"coboundary needs {X.order} values of f")
        return NamedCocycle(f"cob({args})", coboundary(X, values, modulus), Variant.full())
    raise GroupSpecError(f"unknown cocycle family {family!r}")
