"""Abelianization, target groups and homomorphism checks for presentations.

Finite targets are evaluated in their multiplication table. Power-relator
targets (generators with laws a^k = 1 and word laws w^k = 1) are handled by a
rewriting procedure that only ever applies the laws, so a trivial result
proves the relator dies in the target while a non-trivial one proves nothing.
"""

import itertools
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from ..algebra import FiniteGroup, generated_subgroup
from ..config import get_settings
from ..exceptions import BudgetExceededError, PresentationError
from ..linalg import AbelianGroup, IntMatrix, abelian_invariants
from .presentation import Presentation
from .words import FreeWord, Syllable, canonical_relator

logger = logging.getLogger(__name__)


def abelianization(p: Presentation) -> AbelianGroup:
    """Z^generators modulo the exponent-sum vectors of the relators."""
    columns = [[r.exponent_sum(g) for g in p.generators] for r in p.relators]
    matrix = IntMatrix.from_columns(columns, rows=len(p.generators))
    return abelian_invariants(matrix)


@dataclass(frozen=True)
class FiniteTarget:
    """A finite group with an element image for every generator."""

    group: FiniteGroup
    images: Mapping[str, int]
    label: str = ""


@dataclass(frozen=True)
class PowerRelatorTarget:
    """⟨generators | a^e_a = 1, w^k = 1⟩ with word images for the generators.

    Generators missing from ``exponents`` have infinite order.
    """

    generators: tuple[str, ...]
    exponents: Mapping[str, int]
    laws: tuple[tuple[FreeWord, int], ...]
    images: Mapping[str, FreeWord]
    label: str = ""

    def text(self) -> str:
        parts = [f"{g}^{e}" for g, e in self.exponents.items()]
        parts += [f"({w.text()})^{k}" for w, k in self.laws]
        return f"⟨{', '.join(self.generators)} | {', '.join(parts)}⟩"


TargetGroupSpec = FiniteTarget | PowerRelatorTarget


@dataclass(frozen=True)
class RelatorTrace:
    relator: str
    image: str
    trivial: bool


@dataclass(frozen=True)
class HomomorphismCheck:
    """Outcome of check_homomorphism.

    ``surjective`` is only decided for finite targets.
    """

    holds: bool
    trace: tuple[RelatorTrace, ...] = field(default=())
    surjective: bool | None = None


def _evaluate(G: FiniteGroup, word: FreeWord, images: Mapping[str, int]) -> int:
    value = G.identity
    for symbol, exp in word.syllables:
        value = G.mul[value][G.power(images[symbol], exp)]
    return value


def _normalize_generators(word: FreeWord, exponents: Mapping[str, int]) -> FreeWord:
    """Exponents of generators with a law a^k reduced into (−k/2, k/2]."""
    syllables: list[Syllable] = []
    for symbol, exp in word.syllables:
        k = exponents.get(symbol)
        if k:
            exp %= k
            if exp > k // 2:
                exp -= k
        syllables.append((symbol, exp))
    return FreeWord(tuple(syllables))


def _collapse_run(
    letters: list[Syllable], law: list[Syllable], k: int
) -> list[Syllable] | None:
    """Shorten one maximal cyclic run of ≥ k copies of ``law`` or its inverse."""
    n, size = len(letters), len(law)
    if n < size * k:
        return None
    inverse = [(s, -e) for s, e in reversed(law)]
    for base in (law, inverse):
        for i in range(n):
            rotated = letters[i:] + letters[:i]
            copies = 0
            while (copies + 1) * size <= n:
                if rotated[copies * size : (copies + 1) * size] != base:
                    break
                copies += 1
            if copies < k:
                continue
            if copies * size < n and rotated[-size:] == base:
                continue
            return base * (copies % k) + rotated[copies * size :]
    return None


def _law_rotations(target: PowerRelatorTarget) -> list[tuple[list[Syllable], int]]:
    out = []
    seen = set()
    for word, k in target.laws:
        letters = word.cyclic_reduce().letters()
        for j in range(len(letters)):
            rotated = letters[j:] + letters[:j]
            key = (tuple(rotated), k)
            if key not in seen:
                seen.add(key)
                out.append((rotated, k))
    return out


def reduce_power_word(
    word: FreeWord, target: PowerRelatorTarget, max_steps: int = 10_000
) -> FreeWord:
    """Rewrite a word (up to conjugation) with the target's laws.

    Word laws collapse maximal runs w^m with m ≥ k to w^(m mod k), including
    every cyclic rotation of w; generator exponents are then reduced into
    (−k/2, k/2]. Both steps repeat until neither changes the word.
    """
    laws = _law_rotations(target)
    current = word.cyclic_reduce()
    seen: set[tuple[Syllable, ...]] = set()
    for _ in range(max_steps):
        if not current:
            break
        key = canonical_relator(current)
        if key in seen:
            break
        seen.add(key)
        letters = current.letters()
        collapsed = None
        for law, k in laws:
            collapsed = _collapse_run(letters, law, k)
            if collapsed is not None:
                break
        if collapsed is not None:
            current = FreeWord.from_letters(collapsed).cyclic_reduce()
            continue
        normalized = _normalize_generators(current, target.exponents).cyclic_reduce()
        if normalized == current:
            break
        current = normalized
    return current


def check_homomorphism(p: Presentation, t: TargetGroupSpec) -> HomomorphismCheck:
    """Decide whether generator images send every relator to the identity.

    Free generators of ``p`` need no image.

    Raises:
        PresentationError: If a generator has no image
    """
    free = set(p.free_generators)
    missing = [g for g in p.generators if g not in free and g not in t.images]
    if missing:
        raise PresentationError(f"no image for generators {missing}")

    trace = []
    if isinstance(t, FiniteTarget):
        G = t.group
        for r in p.relators:
            value = _evaluate(G, r, t.images)
            trace.append(RelatorTrace(r.text(), G.name(value), value == G.identity))
        used = [t.images[g] for g in p.generators if g not in free]
        surjective = (len(generated_subgroup(G, used)) if used else 1) == G.order
        holds = all(step.trivial for step in trace)
        logger.info(f"Map to {t.label or G.label}: holds={holds}, surjective={surjective}")
        return HomomorphismCheck(holds, tuple(trace), surjective)

    for r in p.relators:
        image = reduce_power_word(r.substitute(t.images), t)
        trace.append(RelatorTrace(r.text(), image.text(), image.is_identity()))
    holds = all(step.trivial for step in trace)
    logger.info(f"Map to {t.label or t.text()}: verified={holds}")
    return HomomorphismCheck(holds, tuple(trace))


def count_homomorphisms(p: Presentation, X: FiniteGroup) -> int:
    """Number of homomorphisms from the presented group to X, by brute force.

    Raises:
        BudgetExceededError: If |X|^generators exceeds the state budget
    """
    budget = get_settings().state_budget
    size = X.order ** len(p.generators)
    if size > budget:
        raise BudgetExceededError(f"homomorphisms into {X.label}", size, budget)
    position = {g: i for i, g in enumerate(p.generators)}
    words = [[(position[s], e) for s, e in r.syllables] for r in p.relators]
    mul, identity = X.mul, X.identity
    n = X.order
    # x^n = 1 for every x, so exponents reduce mod n
    powers = [[X.power(x, e) for e in range(n)] for x in range(n)]

    count = 0
    for assignment in itertools.product(range(X.order), repeat=len(p.generators)):
        for word in words:
            value = identity
            for g, e in word:
                value = mul[value][powers[assignment[g]][e % n]]
            if value != identity:
                break
        else:
            count += 1
    return count


# Target builders


def _x(name: str, exp: int = 1) -> FreeWord:
    return FreeWord.generator(name, exp)


def triangle_target(
    k: int, l: int, m: int, images: Mapping[str, FreeWord] | None = None
) -> PowerRelatorTarget:
    """⟨x, y | x^k, y^l, (xy)^m⟩, by default with a1 ↦ x and a2 ↦ y."""
    return PowerRelatorTarget(
        generators=("x", "y"),
        exponents={"x": k, "y": l},
        laws=((_x("x") * _x("y"), m),),
        images=images or {"a1": _x("x"), "a2": _x("y")},
        label=f"triangle({k},{l},{m})",
    )


def vinberg_torus_target(k: int) -> PowerRelatorTarget:
    """⟨x, y | x^k, y^(k−1), (xy)^k⟩ receiving the reduced heap of T(2,2k+1)."""
    if k < 2:
        raise PresentationError(f"the torus target needs k >= 2, got {k}")
    target = triangle_target(k, k - 1, k)
    return PowerRelatorTarget(
        target.generators, target.exponents, target.laws, target.images, f"vinberg({k})"
    )


def pretzel_vinberg_target(twists: Sequence[int]) -> PowerRelatorTarget:
    """Laws a_i^(k_(i−1)+k_i) and (a_i a_(i+1)⁻¹)^(k_i) for P(2k_1, …, 2k_r)."""
    r = len(twists)
    gens = tuple(f"a{i + 1}" for i in range(r))
    exponents = {gens[i]: abs(twists[i - 1] + twists[i]) for i in range(r)}
    laws = tuple(
        (_x(gens[i]) * _x(gens[(i + 1) % r], -1), abs(twists[i])) for i in range(r)
    )
    return PowerRelatorTarget(
        gens,
        {g: e for g, e in exponents.items() if e},
        laws,
        {g: _x(g) for g in gens},
        f"pretzel-vinberg{tuple(twists)}",
    )


def pretzel_coxeter_target(twists: Sequence[int]) -> PowerRelatorTarget:
    """Coxeter laws a_i² and (a_i a_(i+1))^(k_i), all k_i of one parity."""
    if len({k % 2 for k in twists}) > 1:
        raise PresentationError("the Coxeter target needs twists of one parity")
    r = len(twists)
    gens = tuple(f"a{i + 1}" for i in range(r))
    laws = tuple((_x(gens[i]) * _x(gens[(i + 1) % r]), abs(twists[i])) for i in range(r))
    return PowerRelatorTarget(
        gens,
        {g: 2 for g in gens},
        laws,
        {g: _x(g) for g in gens},
        f"pretzel-coxeter{tuple(twists)}",
    )


def finite_target(X: FiniteGroup, images: Mapping[str, str]) -> FiniteTarget:
    """Finite target from element names, e.g. ``{"a1": "(1,0)"}``."""
    return FiniteTarget(X, {g: X.index(name) for g, name in images.items()}, X.label)


def parse_target(text: str, X: FiniteGroup | None = None) -> TargetGroupSpec:
    """CLI target grammar.

    ``vinberg:k``, ``triangle:k,l,m``, ``pretzel-vinberg:k1,k2,...``,
    ``pretzel-coxeter:k1,...`` or, with a group, ``map:a1=g;a2=h``.
    Map items are separated by semicolons; product names contain commas.
    """
    kind, _, args = text.strip().partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "map":
            if X is None:
                raise PresentationError("a map target needs --group")
            pairs = dict(item.split("=", 1) for item in args.split(";") if item.strip())
            return finite_target(X, {g.strip(): h.strip() for g, h in pairs.items()})
        values = [int(a) for a in args.split(",") if a.strip()]
    except ValueError as e:
        raise PresentationError(f"malformed target {text!r}: {e}") from None
    if kind == "vinberg" and len(values) == 1:
        return vinberg_torus_target(values[0])
    if kind == "triangle" and len(values) == 3:
        return triangle_target(*values)
    if kind == "pretzel-vinberg" and values:
        return pretzel_vinberg_target(values)
    if kind == "pretzel-coxeter" and values:
        return pretzel_coxeter_target(values)
    raise PresentationError(f"unknown target {text!r}")
