"""Boltzmann weights and the componentwise ribbon cocycle invariant."""

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from ..algebra import FiniteGroup
from ..cohomology import Cochain2, NamedCocycle, coefficients_label, is_cocycle2
from ..exceptions import ComplexError
from .coloring import Coloring, SiteRecord, enumerate_colorings
from .link import FramedLink

logger = logging.getLogger(__name__)

# one (B0, B1) pair of coefficients per component
Key = tuple[tuple[int, int], ...]


def _power(k: int) -> str:
    if k == 0:
        return "e"
    return "g" if k == 1 else f"g^{k}"


@dataclass(frozen=True)
class InvariantValue:
    """A multiset of per-component weight pairs, written additively.

    Coefficients are exponents of a generator g: integers when ``modulus`` is
    None, residues mod ``modulus`` otherwise. ``items`` is sorted by key.
    """

    modulus: int | None
    components: int
    items: tuple[tuple[Key, int], ...]

    @classmethod
    def from_counter(
        cls, counter: Counter[Key], modulus: int | None, components: int
    ) -> "InvariantValue":
        return cls(modulus, components, tuple(sorted(counter.items())))

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.items)

    def as_counter(self) -> Counter[Key]:
        return Counter(dict(self.items))

    def multiplicity(self, key: Key) -> int:
        return dict(self.items).get(key, 0)

    def is_trivial(self) -> bool:
        """Every coloring contributes the identity on every component."""
        return all(b0 == 0 and b1 == 0 for key, _ in self.items for b0, b1 in key)

    def describe(self) -> str:
        terms = []
        for key, mult in self.items:
            inner = ", ".join(f"{_power(b0)}⊗{_power(b1)}" for b0, b1 in key)
            if len(key) > 1:
                inner = f"({inner})"
            terms.append(f"{mult}({inner})" if len(key) == 1 else f"{mult}{inner}")
        return " + ".join(terms) or "0"

    def to_dict(self) -> dict:
        return {
            "coefficients": coefficients_label(self.modulus),
            "components": self.components,
            "total": self.total,
            "terms": [
                {"key": [list(pair) for pair in key], "mult": mult}
                for key, mult in self.items
            ],
        }


def site_weight(psi: Cochain2, record: SiteRecord, side: int) -> int:
    """B_side = ε·ψ(pre_side, over₀, over₁) at one site."""
    u, v = record.over
    value = record.site.sign * psi(record.pre[side], u, v)
    return value % psi.modulus if psi.modulus is not None else value


def coloring_key(psi: Cochain2, coloring: Coloring) -> Key:
    """Per component, the sum of weights at sites whose under arc lies on it."""
    sums = [[0, 0] for _ in range(coloring.link.component_count)]
    for record in coloring.records:
        j = record.site.under_component
        sums[j][0] += site_weight(psi, record, 0)
        sums[j][1] += site_weight(psi, record, 1)
    if psi.modulus is not None:
        return tuple((b0 % psi.modulus, b1 % psi.modulus) for b0, b1 in sums)
    return tuple((b0, b1) for b0, b1 in sums)


def invariant(
    L: FramedLink,
    X: FiniteGroup,
    psi: Cochain2 | NamedCocycle,
    colorings: Iterable[Coloring] | None = None,
    workers: int | None = None,
    check: bool = True,
) -> InvariantValue:
    """Ψ_ψ(L): the multiset of per-component weight pairs over all colorings.

    Raises:
        ComplexError: If ψ is not a 2-cocycle over ``X``
    """
    cochain = psi.cochain if isinstance(psi, NamedCocycle) else psi
    if cochain.group is not X:
        raise ComplexError(f"cocycle lives on {cochain.group.label}, not {X.label}")
    if check and not is_cocycle2(cochain):
        raise ComplexError("the invariant needs a 2-cocycle")
    if colorings is None:
        colorings = enumerate_colorings(L, X, workers=workers)
    counter: Counter[Key] = Counter(coloring_key(cochain, c) for c in colorings)
    value = InvariantValue.from_counter(counter, cochain.modulus, L.component_count)
    logger.info(f"Invariant of {L.text()}: {value.describe()}")
    return value


def cord_prediction(n: int) -> InvariantValue:
    """Ψ(Ĉ_n) over X = A = Z_n for ψ(x,y,z) = x(z − y).

    The kink weights of a coloring with x⁻¹y = α add up to (n/2)·α² on both
    sides when n is even and vanish when n is odd.
    """
    counter: Counter[Key] = Counter()
    for alpha in range(n):
        value = (n // 2) * alpha * alpha % n if n % 2 == 0 else 0
        counter[((value, value),)] += n
    return InvariantValue.from_counter(counter, n, 1)


def torus_phi_prediction(n: int, i: int) -> InvariantValue:
    """Ψ_{φ_i}(T(2,2n)) over X = Z_n with integer coefficients.

    A component picks up g^n on both sides exactly when the label difference
    of the other component is i, so the value does not depend on i.
    """
    if not 1 <= i <= n - 1:
        raise ComplexError(f"phi index must be in 1..{n - 1}, got {i}")
    g, e = (n, n), (0, 0)
    counter: Counter[Key] = Counter(
        {
            (g, g): n * n,
            (g, e): n * n * (n - 1),
            (e, g): n * n * (n - 1),
            (e, e): n * n * (n - 1) ** 2,
        }
    )
    return InvariantValue.from_counter(counter, None, 2)
