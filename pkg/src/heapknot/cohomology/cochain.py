"""2-cochains: coefficient-valued functions on triples of heap elements."""

import re
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass

from ..algebra import FiniteGroup
from ..exceptions import ComplexError, GroupSpecError

Triple = tuple[int, int, int]


def parse_coefficients(text: str) -> int | None:
    """Parse ``Z`` (integers, returns None) or ``Z<m>`` with m >= 2."""
    match = re.fullmatch(r"\s*Z\s*(\d*)\s*", text, re.IGNORECASE)
    if not match:
        raise GroupSpecError(f"malformed coefficient ring {text!r}")
    if not match.group(1):
        return None
    m = int(match.group(1))
    if m < 2:
        raise GroupSpecError(f"coefficient modulus must be at least 2, got {m}")
    return m


def coefficients_label(modulus: int | None) -> str:
    return "Z" if modulus is None else f"Z{modulus}"


@dataclass(frozen=True, eq=False)
class Cochain2:
    """A-valued function on X³, stored densely at index (x·n + y)·n + z.

    ``modulus`` None means A = Z; otherwise A = Z_m and values are residues.
    """

    group: FiniteGroup
    values: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self) -> None:
        if len(self.values) != self.group.order**3:
            raise ComplexError("cochain length does not match |X|³")
        if self.modulus is not None:
            object.__setattr__(
                self, "values", tuple(v % self.modulus for v in self.values)
            )

    @classmethod
    def zero(cls, group: FiniteGroup, modulus: int | None = None) -> "Cochain2":
        return cls(group, (0,) * group.order**3, modulus)

    @classmethod
    def from_function(
        cls,
        group: FiniteGroup,
        fn: Callable[[int, int, int], int],
        modulus: int | None = None,
    ) -> "Cochain2":
        n = group.order
        values = tuple(fn(x, y, z) for x in range(n) for y in range(n) for z in range(n))
        return cls(group, values, modulus)

    @classmethod
    def characteristic(
        cls,
        group: FiniteGroup,
        triples: Iterable[Triple],
        modulus: int | None = None,
    ) -> "Cochain2":
        """Sum of χ_(x,y,z) over ``triples`` (repeats add up)."""
        n = group.order
        values = [0] * n**3
        for x, y, z in triples:
            values[(x * n + y) * n + z] += 1
        return cls(group, tuple(values), modulus)

    def index(self, x: int, y: int, z: int) -> int:
        n = self.group.order
        return (x * n + y) * n + z

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.values[self.index(x, y, z)]

    def _check(self, other: "Cochain2") -> None:
        if other.group is not self.group or other.modulus != self.modulus:
            raise ComplexError("cochains live over different groups or coefficients")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain2):
            return NotImplemented
        return (
            other.group is self.group
            and other.modulus == self.modulus
            and other.values == self.values
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.modulus, self.values))

    def __add__(self, other: "Cochain2") -> "Cochain2":
        self._check(other)
        values = tuple(a + b for a, b in zip(self.values, other.values, strict=True))
        return Cochain2(self.group, values, self.modulus)

    def __sub__(self, other: "Cochain2") -> "Cochain2":
        return self + other.scale(-1)

    def __neg__(self) -> "Cochain2":
        return self.scale(-1)

    def scale(self, k: int) -> "Cochain2":
        return Cochain2(self.group, tuple(k * v for v in self.values), self.modulus)

    def __rmul__(self, k: int) -> "Cochain2":
        return self.scale(k)

    def reduce(self, modulus: int) -> "Cochain2":
        """View an integer cochain with Z_m coefficients."""
        return Cochain2(self.group, self.values, modulus)

    def is_zero(self) -> bool:
        return not any(self.values)

    def support(self) -> list[tuple[Triple, int]]:
        n = self.group.order
        out = []
        for i, v in enumerate(self.values):
            if v:
                x, rest = divmod(i, n * n)
                y, z = divmod(rest, n)
                out.append(((x, y, z), v))
        return out

    def to_dict(self) -> dict[str, int]:
        """Sparse export ``{"x,y,z": value}`` over element names."""
        names = self.group.names
        return {
            f"{names[x]},{names[y]},{names[z]}": v for (x, y, z), v in self.support()
        }


def coboundary(
    group: FiniteGroup, f: Mapping[int, int] | list[int], modulus: int | None = None
) -> Cochain2:
    """δ¹f(x,y,z) = f(x) − f(xy⁻¹z) for a 1-cochain f on X."""
    values = f if isinstance(f, list) else [f.get(x, 0) for x in range(group.order)]
    return Cochain2.from_function(
        group,
        lambda x, y, z: values[x] - values[group.mul[x][group.ldiv[y][z]]],
        modulus,
    )


def evaluate(psi: Cochain2, chain: Mapping[Triple, int] | Iterable[tuple[Triple, int]]) -> int:
    """Kronecker pairing of ψ with a formal sum of triples."""
    items = chain.items() if isinstance(chain, Mapping) else chain
    total = sum(mult * psi(*triple) for triple, mult in items)
    return total % psi.modulus if psi.modulus is not None else total
