"""Complex variants: full, degenerate, nondegenerate and the coset refinements."""

import logging
from dataclasses import dataclass
from enum import StrEnum

from ..algebra import CosetPartition, FiniteGroup, Subgroup, left_cosets, parse_subgroup
from ..exceptions import GroupSpecError

logger = logging.getLogger(__name__)


class VariantKind(StrEnum):
    FULL = "full"
    DEGENERATE = "dh"
    NONDEGENERATE = "ndh"
    LOCALIZED = "loc"
    RELATIVE = "rel"
    LOCALIZED_ITERATED = "loc2"
    RELATIVE_ITERATED = "rel2"


_ALIASES = {
    "sd": VariantKind.FULL,
    "degenerate": VariantKind.DEGENERATE,
    "nondegenerate": VariantKind.NONDEGENERATE,
}


@dataclass(frozen=True)
class Variant:
    """Which TSD cochain complex to use.

    ``g`` and ``f`` are the localizing subgroups (G and F). Localized kinds
    are subcomplexes of the nondegenerate complex; relative kinds and the
    iterated localization are quotients of one.
    """

    kind: VariantKind
    g: Subgroup | None = None
    f: Subgroup | None = None

    def __post_init__(self) -> None:
        needs_g = self.kind in (
            VariantKind.LOCALIZED,
            VariantKind.RELATIVE,
            VariantKind.LOCALIZED_ITERATED,
            VariantKind.RELATIVE_ITERATED,
        )
        needs_f = self.kind in (
            VariantKind.LOCALIZED_ITERATED,
            VariantKind.RELATIVE_ITERATED,
        )
        if needs_g != (self.g is not None) or needs_f != (self.f is not None):
            raise GroupSpecError(f"variant {self.kind.value} got the wrong subgroups")
        if self.g is not None and self.f is not None and self.g.owner is not self.f.owner:
            raise GroupSpecError("subgroups G and F must belong to the same group")

    @classmethod
    def full(cls) -> "Variant":
        return cls(VariantKind.FULL)

    @classmethod
    def degenerate(cls) -> "Variant":
        return cls(VariantKind.DEGENERATE)

    @classmethod
    def nondegenerate(cls) -> "Variant":
        return cls(VariantKind.NONDEGENERATE)

    @classmethod
    def localized_at(cls, g: Subgroup) -> "Variant":
        return cls(VariantKind.LOCALIZED, g)

    @classmethod
    def relative_to(cls, g: Subgroup) -> "Variant":
        return cls(VariantKind.RELATIVE, g)

    @classmethod
    def localized_iterated(cls, g: Subgroup, f: Subgroup) -> "Variant":
        return cls(VariantKind.LOCALIZED_ITERATED, g, f)

    @classmethod
    def relative_iterated(cls, g: Subgroup, f: Subgroup) -> "Variant":
        return cls(VariantKind.RELATIVE_ITERATED, g, f)

    @property
    def label(self) -> str:
        text = self.kind.value
        if self.g is not None:
            text += f":G={self.g.label}"
        if self.f is not None:
            text += f",F={self.f.label}"
        return text

    @property
    def has_degree_one(self) -> bool:
        """Whether 1-cochains (and so coboundaries) exist in this complex."""
        return self.kind != VariantKind.DEGENERATE

    def check_group(self, group: FiniteGroup) -> None:
        for sub in (self.g, self.f):
            if sub is not None and sub.owner is not group:
                raise GroupSpecError(f"subgroup {sub.label} is not a subgroup of {group.label}")

    def rules(self, group: FiniteGroup) -> "VariantRules":
        self.check_group(group)
        return VariantRules(
            self,
            left_cosets(group, self.g) if self.g is not None else None,
            left_cosets(group, self.f) if self.f is not None else None,
        )


@dataclass(frozen=True)
class VariantRules:
    """Pair predicates deciding which triples and quintuples a variant admits."""

    variant: Variant
    g_cosets: CosetPartition | None
    f_cosets: CosetPartition | None

    def _loc_g(self, y: int, z: int) -> bool:
        return self.g_cosets is not None and self.g_cosets.same(y, z)

    def _loc_f(self, y: int, z: int) -> bool:
        return self.f_cosets is not None and self.f_cosets.same(y, z)

    def cochain_pair(self, y: int, z: int) -> bool:
        """Whether triples (x,y,z) are cochain coordinates."""
        kind = self.variant.kind
        if kind == VariantKind.FULL:
            return True
        if kind == VariantKind.DEGENERATE:
            return y == z
        if y == z:
            return False
        if kind == VariantKind.NONDEGENERATE:
            return True
        if kind == VariantKind.LOCALIZED:
            return self._loc_g(y, z)
        if kind == VariantKind.RELATIVE:
            return not self._loc_g(y, z)
        if kind == VariantKind.LOCALIZED_ITERATED:
            return self._loc_f(y, z) and not self._loc_g(y, z)
        return not self._loc_g(y, z) and not self._loc_f(y, z)

    def equation_pairs(self, y: int, z: int, u: int, v: int) -> bool:
        """Whether the quintuple (x,y,z,u,v) contributes a cocycle equation."""
        kind = self.variant.kind
        if kind == VariantKind.FULL:
            return True
        if kind == VariantKind.DEGENERATE:
            return y == z or u == v
        if y == z or u == v:
            return False
        if kind == VariantKind.LOCALIZED:
            return self._loc_g(y, z) and self._loc_g(u, v)
        if kind == VariantKind.LOCALIZED_ITERATED:
            return self._loc_f(y, z) and self._loc_f(u, v)
        return True

    def constraint_pair(self, y: int, z: int) -> bool:
        """Excluded triples on which a coboundary δf must vanish.

        Only quotient complexes have these: a 1-cochain f contributes the
        coboundary δf exactly when δf is zero on the collapsed subcomplex.
        """
        kind = self.variant.kind
        if y == z:
            return False
        if kind == VariantKind.RELATIVE:
            return self._loc_g(y, z)
        if kind == VariantKind.LOCALIZED_ITERATED:
            return self._loc_f(y, z) and self._loc_g(y, z)
        if kind == VariantKind.RELATIVE_ITERATED:
            return self._loc_g(y, z) or self._loc_f(y, z)
        return False


def parse_variant(text: str, group: FiniteGroup) -> Variant:
    """Parse ``full|dh|ndh|loc:G=..|rel:G=..|loc2:G=..,F=..|rel2:G=..,F=..``.

    Subgroups are given by ``+``-separated generator names, e.g. ``rel:G=2``
    on Z4 or ``rel2:G=ar0,F=r1`` on D3.
    """
    head, _, rest = text.strip().partition(":")
    head = head.strip().lower()
    try:
        kind = _ALIASES.get(head) or VariantKind(head)
    except ValueError:
        raise GroupSpecError(f"unknown variant {head!r}") from None

    subgroups: dict[str, Subgroup] = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, gens = item.partition("=")
        key = key.strip().upper()
        if not eq or key not in ("G", "F"):
            raise GroupSpecError(f"malformed subgroup clause {item!r} in {text!r}")
        subgroups[key] = parse_subgroup(group, gens)

    variant = Variant(kind, subgroups.get("G"), subgroups.get("F"))
    logger.debug(f"Parsed variant {variant.label}")
    return variant
