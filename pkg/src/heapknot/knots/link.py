"""Framed links as closures of braids with framing kinks."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum

from ..exceptions import LinkSpecError

logger = logging.getLogger(__name__)

Letter = tuple[int, int]  # (position 1..n-1, sign ±1)


@dataclass(frozen=True)
class BraidWord:
    """An n-strand braid word; letter (i, s) is σ_i^s."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise LinkSpecError("a braid needs at least one strand")
        for i, s in self.letters:
            if not 1 <= i < self.strands or s not in (1, -1):
                raise LinkSpecError(f"letter {s * i} invalid on {self.strands} strands")

    def permutation(self) -> tuple[int, ...]:
        """perm[p] = bottom position (0-based) of the strand starting at top position p."""
        occupant = list(range(self.strands))
        for i, _ in self.letters:
            occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
        perm = [0] * self.strands
        for position, start in enumerate(occupant):
            perm[start] = position
        return tuple(perm)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Sorted top positions of each closure component, by minimal position."""
        perm = self.permutation()
        seen: set[int] = set()
        out = []
        for start in range(self.strands):
            if start in seen:
                continue
            cycle = []
            p = start
            while p not in seen:
                seen.add(p)
                cycle.append(p)
                p = perm[p]
            out.append(tuple(sorted(cycle)))
        return tuple(out)

    def text(self) -> str:
        return " ".join(str(s * i) for i, s in self.letters)


class SiteKind(StrEnum):
    LETTER = "letter"
    KINK = "kink"


@dataclass(frozen=True)
class CrossingSite:
    """A weight-carrying site: a braid letter or one framing kink.

    ``position`` is the 0-based left strand position of a letter, or the
    bottom position a kink sits on. ``source`` is the letter index, or the
    kink's ordinal within its component.
    """

    kind: SiteKind
    sign: int
    position: int
    source: int
    under_component: int


@dataclass(frozen=True)
class FramedLink:
    """Closure of a braid with per-component framing kinks.

    Components are the cycles of the braid permutation ordered by minimal
    strand index; ``framings`` is positional in that order. Kinks of a
    component sit at the bottom of ``kink_positions[j]`` (default: its minimal
    strand), i.e. on the closure arc feeding the top of that strand.
    """

    braid: BraidWord
    framings: tuple[int, ...]
    kink_positions: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        comps = self.components
        if len(self.framings) != len(comps):
            raise LinkSpecError(
                f"{len(comps)} components but {len(self.framings)} framings"
            )
        if not self.kink_positions:
            object.__setattr__(self, "kink_positions", tuple(c[0] for c in comps))
        elif len(self.kink_positions) != len(comps) or any(
            p not in c for p, c in zip(self.kink_positions, comps, strict=True)
        ):
            raise LinkSpecError("each kink position must lie on its component")

    @property
    def strands(self) -> int:
        return self.braid.strands

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self.braid.letters

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Sorted top positions of each component."""
        return self.braid.cycles()

    def component_of(self) -> tuple[int, ...]:
        """Component id of each top position."""
        out = [0] * self.strands
        for j, comp in enumerate(self.components):
            for p in comp:
                out[p] = j
        return tuple(out)

    @property
    def component_count(self) -> int:
        return len(self.components)

    def writhe(self) -> int:
        """Sum of letter signs (writhe of the zero-framed closure)."""
        return sum(s for _, s in self.letters)

    def text(self) -> str:
        return (
            f"braid [{self.braid.text()}] on {self.strands} strands, "
            f"framings {list(self.framings)}"
        )


def parse_link(
    braid_text: str, strands: int, framings: Sequence[int] | None = None
) -> FramedLink:
    """Parse whitespace-separated signed letters, e.g. ``"1 1 -2"``.

    Without framings every component gets framing 0.

    Raises:
        LinkSpecError: On a bad token or a framing-count mismatch
    """
    letters = []
    for token in braid_text.replace(",", " ").split():
        try:
            k = int(token)
        except ValueError:
            raise LinkSpecError(f"bad braid token {token!r}") from None
        if k == 0 or abs(k) >= strands:
            raise LinkSpecError(f"braid token {k} out of range for {strands} strands")
        letters.append((abs(k), 1 if k > 0 else -1))
    braid = BraidWord(strands, tuple(letters))
    if framings is None:
        framings = (0,) * len(braid.cycles())
    return FramedLink(braid, tuple(framings))


def crossing_sites(L: FramedLink) -> tuple[CrossingSite, ...]:
    """All braid letters in order, then each component's kinks.

    The under strand of a positive letter is the incoming left strand, of a
    negative letter the incoming right strand.
    """
    comp_of = L.component_of()
    occupant = list(range(L.strands))
    sites = []
    for index, (i, s) in enumerate(L.letters):
        under = occupant[i - 1] if s > 0 else occupant[i]
        sites.append(CrossingSite(SiteKind.LETTER, s, i - 1, index, comp_of[under]))
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    for j, framing in enumerate(L.framings):
        sign = 1 if framing > 0 else -1
        for k in range(abs(framing)):
            sites.append(CrossingSite(SiteKind.KINK, sign, L.kink_positions[j], k, j))
    return tuple(sites)


# Link families


def torus_link(crossings: int, framings: Sequence[int] | None = None) -> FramedLink:
    """T(2, q) as the closure of σ₁^q, optionally framed (T_(n,m)(2,2k))."""
    sign = 1 if crossings >= 0 else -1
    braid = BraidWord(2, ((1, sign),) * abs(crossings))
    comps = 2 if crossings % 2 == 0 else 1
    return FramedLink(braid, tuple(framings) if framings is not None else (0,) * comps)


def telephone_cord(n: int) -> FramedLink:
    """Ĉ_n: the unknot with n kinks."""
    return FramedLink(BraidWord(1), (n,))


# Braid moves preserving the framed link


def cyclic_rotate(L: FramedLink, steps: int = 1) -> FramedLink:
    """Conjugate by moving the first letter to the end, ``steps`` times."""
    current = L
    for _ in range(steps):
        if not current.letters:
            return current
        (i, s), rest = current.letters[0], current.letters[1:]
        comp_of = current.component_of()
        # new top position p carries the strand that was at old top tau(p)
        tau = list(range(current.strands))
        tau[i - 1], tau[i] = tau[i], tau[i - 1]
        braid = BraidWord(current.strands, (*rest, (i, s)))
        new_comps = braid.cycles()
        framings = tuple(current.framings[comp_of[tau[c[0]]]] for c in new_comps)
        current = FramedLink(braid, framings)
    return current


def insert_cancelling_pair(
    L: FramedLink, index: int, position: int, sign: int = 1
) -> FramedLink:
    """Insert σ_position^sign σ_position^-sign before letter ``index``."""
    pair = ((position, sign), (position, -sign))
    letters = (*L.letters[:index], *pair, *L.letters[index:])
    return FramedLink(BraidWord(L.strands, letters), L.framings, L.kink_positions)


def braid_relation_sites(L: FramedLink) -> list[int]:
    """Indices where σ_j σ_{j±1} σ_j with one common sign begins."""
    out = []
    letters = L.letters
    for k in range(len(letters) - 2):
        (a, s1), (b, s2), (c, s3) = letters[k : k + 3]
        if s1 == s2 == s3 and a == c and abs(a - b) == 1:
            out.append(k)
    return out


def apply_braid_relation(L: FramedLink, index: int) -> FramedLink:
    """Replace σ_j σ_k σ_j by σ_k σ_j σ_k (|j − k| = 1, equal signs) at ``index``."""
    if index not in braid_relation_sites(L):
        raise LinkSpecError(f"no braid relation starts at letter {index}")
    (a, s), (b, _), _ = L.letters[index : index + 3]
    letters = (*L.letters[:index], (b, s), (a, s), (b, s), *L.letters[index + 3 :])
    return FramedLink(BraidWord(L.strands, letters), L.framings, L.kink_positions)


def relocate_kinks(L: FramedLink, component: int, position: int) -> FramedLink:
    """Slide a component's kinks to the bottom of another of its strands."""
    positions = list(L.kink_positions)
    positions[component] = position
    return FramedLink(L.braid, L.framings, tuple(positions))


@dataclass(frozen=True)
class PretzelLink:
    """P(2k_1, …, 2k_r): r twist tangles σ^(2k_i) joined in a cycle by caps.

    Component i runs through the left strand of tangle i and the right strand
    of tangle i − 1; its framing kinks sit at the top of tangle i's left strand.
    """

    twists: tuple[int, ...]
    framings: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.twists) < 2:
            raise LinkSpecError("a pretzel link needs at least two tangles")
        if not self.framings:
            object.__setattr__(self, "framings", (0,) * len(self.twists))
        if len(self.framings) != len(self.twists):
            raise LinkSpecError(
                f"{len(self.twists)} components but {len(self.framings)} framings"
            )

    @property
    def component_count(self) -> int:
        return len(self.twists)

    def text(self) -> str:
        inner = ",".join(str(2 * k) for k in self.twists)
        return f"pretzel P({inner}), framings {list(self.framings)}"


def pretzel(twists: Sequence[int], framings: Sequence[int] | None = None) -> PretzelLink:
    """Even-twist pretzel link with tangle i twisted 2·twists[i] half turns."""
    return PretzelLink(tuple(twists), tuple(framings) if framings else ())
