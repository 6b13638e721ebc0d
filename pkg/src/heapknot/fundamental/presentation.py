"""Fundamental heap presentations of framed braid closures and pretzel links.

Top arcs carry generators (x_i, y_i). Labels are pushed through the diagram
over the free group with the coloring maps, and every closure identifies a
bottom label with a top generator. Substituting y_i = x_i·a_i turns each label
into x_j times a word in the a's, which splits off one free x per component.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..exceptions import PresentationError
from ..knots.link import CrossingSite, FramedLink, PretzelLink, SiteKind, crossing_sites
from .words import FreeWord, canonical_relator

logger = logging.getLogger(__name__)

SymbolicPair = tuple[FreeWord, FreeWord]
SymbolicState = tuple[SymbolicPair, ...]


@dataclass(frozen=True)
class Presentation:
    """⟨generators | relators⟩; ``free_generators`` span a free factor."""

    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...]
    free_generators: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "relators", tuple(r for r in self.relators if r))
        known = set(self.generators)
        for r in self.relators:
            stray = r.symbols() - known
            if stray:
                raise PresentationError(f"relator {r} uses unknown generators {sorted(stray)}")
        if not set(self.free_generators) <= known:
            raise PresentationError("free generators must be generators")

    def without_free_factor(self) -> "Presentation":
        """The presentation of the complement of the free factor."""
        free = set(self.free_generators)
        if any(r.symbols() & free for r in self.relators):
            raise PresentationError("a free generator occurs in a relator")
        return Presentation(
            tuple(g for g in self.generators if g not in free), self.relators
        )

    def text(self) -> str:
        rels = ", ".join(r.text() for r in self.relators)
        return f"⟨{', '.join(self.generators)} | {rels}⟩"

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "free_generators": list(self.free_generators),
            "relators": [r.to_list() for r in self.relators],
        }


def _gen(name: str) -> FreeWord:
    return FreeWord.generator(name)


def top_state(strands: int) -> SymbolicState:
    return tuple((_gen(f"x{i + 1}"), _gen(f"y{i + 1}")) for i in range(strands))


def apply_symbolic(state: SymbolicState, site: CrossingSite) -> SymbolicState:
    """The coloring map of one site over the free group."""
    labels = list(state)
    i = site.position
    if site.kind is SiteKind.LETTER:
        if site.sign > 0:
            (x, y), (u, v) = labels[i], labels[i + 1]
            w = u.inverse() * v
            labels[i], labels[i + 1] = (u, v), (x * w, y * w)
        else:
            (p, q), (r, s) = labels[i], labels[i + 1]
            w = q.inverse() * p
            labels[i], labels[i + 1] = (r * w, s * w), (p, q)
    else:
        labels[i] = _kink(labels[i], site.sign)
    return tuple(labels)


def _kink(pair: SymbolicPair, sign: int) -> SymbolicPair:
    p, q = pair
    alpha = p.inverse() * q
    if sign < 0:
        alpha = alpha.inverse()
    return p * alpha, q * alpha


def symbolic_propagate(
    L: FramedLink, state: SymbolicState | None = None
) -> SymbolicState:
    """Bottom labels of ``L`` as words in the top generators."""
    state = state if state is not None else top_state(L.strands)
    for site in crossing_sites(L):
        state = apply_symbolic(state, site)
    return state


def presentation(L: FramedLink) -> Presentation:
    """Generators x_i, y_i per top strand; one relator per closed label."""
    top = top_state(L.strands)
    bottom = symbolic_propagate(L, top)
    relators = []
    for (bx, by), (tx, ty) in zip(bottom, top, strict=True):
        relators.append(bx * tx.inverse())
        relators.append(by * ty.inverse())
    generators = tuple(g for i in range(L.strands) for g in (f"x{i + 1}", f"y{i + 1}"))
    p = Presentation(generators, tuple(relators))
    logger.debug(f"Presentation of {L.text()}: {len(p.relators)} relators")
    return p


def _pretzel_tangle(
    left: SymbolicPair, right: SymbolicPair, twist: int
) -> tuple[SymbolicPair, SymbolicPair]:
    sign = 1 if twist > 0 else -1
    site = CrossingSite(SiteKind.LETTER, sign, 0, 0, 0)
    state: SymbolicState = (left, right)
    for _ in range(2 * abs(twist)):
        state = apply_symbolic(state, site)
    return state[0], state[1]


def pretzel_presentation(P: PretzelLink) -> Presentation:
    """Presentation of an even-twist pretzel link.

    Tangle i has top labels (x_i, y_i) on the left and (y_{i+1}, x_{i+1}) on
    the right: the right strand of a tangle belongs to the next component and
    runs against the braid direction, which swaps its pair. The bottom caps
    identify the left output of tangle i with the swapped right output of
    tangle i − 1.
    """
    r = P.component_count
    xs = [_gen(f"x{i + 1}") for i in range(r)]
    ys = [_gen(f"y{i + 1}") for i in range(r)]
    outputs = []
    for i, twist in enumerate(P.twists):
        left: SymbolicPair = (xs[i], ys[i])
        sign = 1 if P.framings[i] > 0 else -1
        for _ in range(abs(P.framings[i])):
            left = _kink(left, sign)
        right: SymbolicPair = (ys[(i + 1) % r], xs[(i + 1) % r])
        outputs.append(_pretzel_tangle(left, right, twist))

    relators = []
    for i in range(r):
        lx, ly = outputs[i][0]
        rx, ry = outputs[i - 1][1]
        relators.append(lx * ry.inverse())
        relators.append(ly * rx.inverse())
    generators = tuple(g for i in range(r) for g in (f"x{i + 1}", f"y{i + 1}"))
    return Presentation(generators, tuple(relators))


def dedupe_relators(relators: Sequence[FreeWord]) -> list[FreeWord]:
    seen = set()
    out = []
    for r in relators:
        key = canonical_relator(r)
        if r and key not in seen:
            seen.add(key)
            out.append(r)
    return out


def _drop_commutators(relators: list[FreeWord], generators: Sequence[str]) -> list[FreeWord]:
    """Remove relators g·t·g⁻¹·t⁻¹ with t a cyclic permutation of another relator."""
    kept = list(relators)
    changed = True
    while changed:
        changed = False
        for r in kept:
            key = canonical_relator(r)
            for s in kept:
                if s is r or len(s) >= len(r):
                    continue
                if any(
                    canonical_relator(_gen(g) * t * _gen(g).inverse() * t.inverse()) == key
                    for g in generators
                    for t in s.rotations()
                ):
                    kept.remove(r)
                    changed = True
                    break
            if changed:
                break
    return kept


def _pick_elimination(
    relators: Sequence[FreeWord], xs: set[str]
) -> tuple[int, str, FreeWord] | None:
    """A relator x_a·A·x_b⁻¹ (cyclically) with A free of x's, shortest A first."""
    best: tuple[int, int, str, FreeWord] | None = None
    for index, r in enumerate(relators):
        letters = r.letters()
        hits = [k for k, (s, _) in enumerate(letters) if s in xs]
        if len(hits) != 2:
            continue
        k1, k2 = hits
        (s1, e1), (s2, e2) = letters[k1], letters[k2]
        if e1 == e2 or s1 == s2:
            continue
        start = k1 if e1 > 0 else k2
        rotated = letters[start:] + letters[:start]
        j = next(k for k in range(1, len(rotated)) if rotated[k][0] in xs)
        if j != len(rotated) - 1:
            continue
        source, target = rotated[0][0], rotated[j][0]
        A = FreeWord.from_letters(rotated[1:j])
        if best is None or (len(A), index) < (best[0], best[1]):
            best = (len(A), index, target, _gen(source) * A)
    return None if best is None else (best[1], best[2], best[3])


def alpha_form(p: Presentation) -> Presentation:
    """Split off the free factor: substitute y_i = x_i·a_i and eliminate x's.

    Raises:
        PresentationError: If some x cannot be eliminated
    """
    indices = sorted(int(g[1:]) for g in p.generators if g.startswith("x"))
    if [f"{c}{i}" for i in indices for c in "xy"] != list(p.generators):
        raise PresentationError("alpha_form expects generators x1, y1, x2, y2, ...")

    images = {f"y{i}": _gen(f"x{i}") * _gen(f"a{i}") for i in indices}
    relators = [r.substitute(images).cyclic_reduce() for r in p.relators]
    xs = {f"x{i}" for i in indices}

    while True:
        relators = [r.cyclic_reduce() for r in relators if r.cyclic_reduce()]
        if not any(r.symbols() & xs for r in relators):
            break
        pick = _pick_elimination(relators, xs)
        if pick is None:
            raise PresentationError("cannot eliminate the x generators")
        index, target, image = pick
        logger.debug(f"alpha_form: {target} = {image}")
        relators.pop(index)
        relators = [r.substitute({target: image}) for r in relators]
        xs.discard(target)

    alphas = tuple(f"a{i}" for i in indices)
    relators = _drop_commutators(dedupe_relators(relators), alphas)
    free = tuple(f"x{i}" for i in indices if f"x{i}" in xs)
    return Presentation(free + alphas, tuple(relators), free)


def heap_presentation(L: FramedLink | PretzelLink) -> Presentation:
    """Alpha-form presentation of ``L``; the free rank is the component count.

    Raises:
        PresentationError: If the free factor has the wrong rank
    """
    if isinstance(L, PretzelLink):
        p = alpha_form(pretzel_presentation(L))
    else:
        p = alpha_form(presentation(L))
    if len(p.free_generators) != L.component_count:
        raise PresentationError(
            f"free rank {len(p.free_generators)} differs from "
            f"{L.component_count} components"
        )
    logger.info(f"Heap presentation of {L.text()}: {p.text()}")
    return p


# Closed forms of the reduced heap relators


def torus_relators(k: int) -> list[FreeWord]:
    """a1^(−k)(a1a2)^k and a2^(−k)(a1a2)^k for the zero-framed T(2,2k)."""
    a1, a2 = _gen("a1"), _gen("a2")
    return [a1 ** (-k) * (a1 * a2) ** k, a2 ** (-k) * (a1 * a2) ** k]


def cord_relators(n: int) -> list[FreeWord]:
    """a1^n for the telephone cord Ĉ_n."""
    return [_gen("a1") ** n]


def pretzel_relators(twists: Sequence[int]) -> list[FreeWord]:
    """One relator per component of P(2k_1, …, 2k_r):

        a_j^(−(k_(j−1)+k_j)) (a_j a_(j+1)⁻¹)^(k_j) (a_(j−1) a_j⁻¹)^(−k_(j−1))
    """
    r = len(twists)
    a = [_gen(f"a{i + 1}") for i in range(r)]
    out = []
    for j in range(r):
        before, k = twists[j - 1], twists[j]
        out.append(
            a[j] ** (-(before + k))
            * (a[j] * a[(j + 1) % r].inverse()) ** k
            * (a[j - 1] * a[j].inverse()) ** (-before)
        )
    return out
