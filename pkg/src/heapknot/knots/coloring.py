"""Heap colorings of framed braid closures.

A coloring labels every doubled arc with a pair of group elements. At a
positive letter the under pair (x, y) passing below the over pair (u, v)
becomes (x·u⁻¹v, y·u⁻¹v); a negative letter applies the inverse map, and a
kink on (p, q) multiplies both labels by (p⁻¹q)^(±1). A state on the top of
the braid is a coloring when propagating it through every site returns it.
"""

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

from ..algebra import FiniteGroup
from ..config import get_settings
from ..exceptions import BudgetExceededError, LinkSpecError
from ..utils import apply_pool, resolve_workers
from .link import CrossingSite, FramedLink, SiteKind, crossing_sites

if TYPE_CHECKING:
    from ..fundamental.presentation import Presentation

logger = logging.getLogger(__name__)

Pair = tuple[int, int]
State = tuple[Pair, ...]


@dataclass(frozen=True)
class SiteRecord:
    """Labels seen at one site.

    ``pre`` is the under pair on the source side of the over arc (incoming
    for positive sites, outgoing for negative ones) and ``post`` the other
    side; Boltzmann weights read ``pre`` and ``over``.
    """

    site: CrossingSite
    pre: Pair
    over: Pair
    post: Pair


class ComponentColor(StrEnum):
    MONOCHROMATIC = "mono"
    BICOLORED = "bi"


@dataclass(frozen=True)
class Coloring:
    """A coloring of ``link`` by ``group`` with its per-site records."""

    link: FramedLink
    group: FiniteGroup
    state: State
    records: tuple[SiteRecord, ...]


def apply_crossing(
    X: FiniteGroup, state: State, site: CrossingSite
) -> tuple[State, SiteRecord]:
    """Push a labelled state through one site."""
    mul, ldiv = X.mul, X.ldiv
    labels = list(state)
    i = site.position
    if not 0 <= i < len(labels) - (1 if site.kind is SiteKind.LETTER else 0):
        raise LinkSpecError(f"site position {i} outside a {len(labels)}-strand state")

    if site.kind is SiteKind.LETTER:
        if site.sign > 0:
            (x, y), (u, v) = labels[i], labels[i + 1]
            w = ldiv[u][v]
            out = (mul[x][w], mul[y][w])
            labels[i], labels[i + 1] = (u, v), out
            record = SiteRecord(site, (x, y), (u, v), out)
        else:
            (p, q), (r, s) = labels[i], labels[i + 1]
            w = ldiv[q][p]
            out = (mul[r][w], mul[s][w])
            labels[i], labels[i + 1] = out, (p, q)
            record = SiteRecord(site, out, (p, q), (r, s))
    else:
        p, q = labels[i]
        alpha = ldiv[p][q]
        if site.sign > 0:
            out = (mul[p][alpha], mul[q][alpha])
            record = SiteRecord(site, (p, q), out, out)
        else:
            back = X.inv[alpha]
            out = (mul[p][back], mul[q][back])
            record = SiteRecord(site, out, (p, q), (p, q))
        labels[i] = out
    return tuple(labels), record


def propagate(
    X: FiniteGroup, L: FramedLink, state: State
) -> tuple[State, tuple[SiteRecord, ...]]:
    """Run a top state through all sites of ``L``; returns the bottom state."""
    if len(state) != L.strands:
        raise LinkSpecError(f"state has {len(state)} pairs for {L.strands} strands")
    records = []
    for site in crossing_sites(L):
        state, record = apply_crossing(X, state, site)
        records.append(record)
    return state, tuple(records)


def state_from_index(index: int, order: int, strands: int) -> State:
    """Decode a state index; pair 0 holds the most significant digits."""
    digits = [0] * (2 * strands)
    for k in range(2 * strands - 1, -1, -1):
        index, digits[k] = divmod(index, order)
    return tuple((digits[2 * j], digits[2 * j + 1]) for j in range(strands))


def state_index(state: State, order: int) -> int:
    index = 0
    for p, q in state:
        index = (index * order + p) * order + q
    return index


def _closes(
    mul: tuple[tuple[int, ...], ...],
    ldiv: tuple[tuple[int, ...], ...],
    inv: tuple[int, ...],
    letters: Sequence[tuple[int, int]],
    kinks: Sequence[tuple[int, int]],
    start: list[int],
) -> bool:
    # flat [p0, q0, p1, q1, ...]
    s = list(start)
    for i, sign in letters:
        a = 2 * i
        if sign > 0:
            x, y, u, v = s[a], s[a + 1], s[a + 2], s[a + 3]
            w = ldiv[u][v]
            s[a], s[a + 1], s[a + 2], s[a + 3] = u, v, mul[x][w], mul[y][w]
        else:
            p, q, r, t = s[a], s[a + 1], s[a + 2], s[a + 3]
            w = ldiv[q][p]
            s[a], s[a + 1], s[a + 2], s[a + 3] = mul[r][w], mul[t][w], p, q
    for i, sign in kinks:
        a = 2 * i
        p, q = s[a], s[a + 1]
        alpha = ldiv[p][q] if sign > 0 else inv[ldiv[p][q]]
        s[a], s[a + 1] = mul[p][alpha], mul[q][alpha]
    return s == start


def _scan_range(
    mul: tuple[tuple[int, ...], ...],
    ldiv: tuple[tuple[int, ...], ...],
    inv: tuple[int, ...],
    letters: tuple[tuple[int, int], ...],
    kinks: tuple[tuple[int, int], ...],
    strands: int,
    start: int,
    stop: int,
) -> list[int]:
    """State indices in [start, stop) fixed by full propagation."""
    order = len(mul)
    width = 2 * strands
    digits = [0] * width
    index = start
    for k in range(width - 1, -1, -1):
        index, digits[k] = divmod(index, order)

    fixed = []
    for index in range(start, stop):
        if _closes(mul, ldiv, inv, letters, kinks, digits):
            fixed.append(index)
        k = width - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < order:
                break
            digits[k] = 0
            k -= 1
    return fixed


def fixed_state_indices(
    L: FramedLink,
    X: FiniteGroup,
    workers: int | None = None,
    progress: bool | None = None,
) -> list[int]:
    """Sorted indices of all closing initial states.

    Raises:
        BudgetExceededError: If |X|^(2·strands) exceeds the state budget
    """
    settings = get_settings()
    total = X.order ** (2 * L.strands)
    if total > settings.state_budget:
        raise BudgetExceededError(
            f"coloring {L.strands}-strand braid by {X.label}", total, settings.state_budget
        )

    letters = tuple((i - 1, s) for i, s in L.letters)
    kinks = tuple(
        (site.position, site.sign)
        for site in crossing_sites(L)
        if site.kind is SiteKind.KINK
    )
    chunk = max(1, settings.enumeration.chunk_size)
    tasks = [
        (X.mul, X.ldiv, X.inv, letters, kinks, L.strands, a, min(a + chunk, total))
        for a in range(0, total, chunk)
    ]
    n_workers = resolve_workers(workers if workers is not None else settings.workers)
    if total < settings.enumeration.parallel_threshold:
        n_workers = 1
    if progress is None:
        progress = settings.enumeration.show_progress
    logger.debug(
        f"Scanning {total} states of {L.text()} over {X.label} "
        f"in {len(tasks)} chunks, {n_workers} workers"
    )
    parts = apply_pool(
        _scan_range,
        tasks,
        workers=n_workers,
        verbose=progress and len(tasks) > 1,
        desc=f"colorings by {X.label}",
    )
    return [index for part in parts for index in part]


def enumerate_colorings(
    L: FramedLink,
    X: FiniteGroup,
    workers: int | None = None,
    progress: bool | None = None,
) -> list[Coloring]:
    """All colorings of ``L`` by ``X`` in increasing state-index order."""
    colorings = []
    for index in fixed_state_indices(L, X, workers, progress):
        state = state_from_index(index, X.order, L.strands)
        bottom, records = propagate(X, L, state)
        assert bottom == state, "fast scan and full propagation disagree"
        colorings.append(Coloring(L, X, state, records))
    logger.info(f"{len(colorings)} colorings of {L.text()} by {X.label}")
    return colorings


def count_colorings(
    L: FramedLink,
    X: FiniteGroup,
    workers: int | None = None,
    progress: bool | None = None,
) -> int:
    """Col_X(L) without building per-site records."""
    return len(fixed_state_indices(L, X, workers, progress))


def classify(c: Coloring) -> tuple[ComponentColor, ...]:
    """Mono/bicolored flag per component, read off each component's top pair."""
    flags = []
    for component in c.link.components:
        p, q = c.state[component[0]]
        flags.append(ComponentColor.MONOCHROMATIC if p == q else ComponentColor.BICOLORED)
    return tuple(flags)


def coloring_tallies(colorings: Sequence[Coloring]) -> Counter[tuple[ComponentColor, ...]]:
    """Number of colorings per mono/bicolored pattern."""
    return Counter(classify(c) for c in colorings)


@dataclass(frozen=True)
class WirtingerImages:
    """Meridian images μ(p, q) = p⁻¹q of (pre, over, post) at every site."""

    images: tuple[tuple[int, int, int], ...]
    holds: bool


def wirtinger_images(c: Coloring) -> WirtingerImages:
    """Check μ(post) = β⁻¹·μ(pre)·β with β = μ(over) at every site.

    ``pre`` sits on the source side of the over arc for either sign, so one
    conjugation covers positive and negative sites.
    """
    X = c.group
    ldiv, mul, inv = X.ldiv, X.mul, X.inv
    images = []
    holds = True
    for record in c.records:
        before = ldiv[record.pre[0]][record.pre[1]]
        beta = ldiv[record.over[0]][record.over[1]]
        after = ldiv[record.post[0]][record.post[1]]
        expected = mul[mul[inv[beta]][before]][beta]
        if expected != after:
            logger.warning(f"Wirtinger relation fails at {record.site}")
            holds = False
        images.append((before, beta, after))
    return WirtingerImages(tuple(images), holds)


def dihedral_torus_prediction(n: int, m: int, k: int) -> dict[str, int]:
    """Pairs (α, β) ∈ D_3² per case for T_(n,m)(2,2k), from the relators
    α^(n−k)(αβ)^k = β^(m−k)(αβ)^k = 1.

    Col_{D_3} is 36 times the total, one free choice of x per component.
    """
    a, b = n - k, m - k
    cases = {
        "mono/mono": 1,
        "mono/bi order 2": 3 if k % 2 == 0 and m % 2 == 0 else 0,
        "mono/bi order 3": 2 if k % 3 == 0 and m % 3 == 0 else 0,
        "bi/mono order 2": 3 if k % 2 == 0 and n % 2 == 0 else 0,
        "bi/mono order 3": 2 if k % 3 == 0 and n % 3 == 0 else 0,
        "order 2-2 equal": 3 if a % 2 == 0 and b % 2 == 0 else 0,
        "order 2-2 distinct": 6 if a % 2 == 0 and b % 2 == 0 and k % 3 == 0 else 0,
        "order 2-3": 6 if a % 2 == 0 and k % 2 == 0 and b % 3 == 0 else 0,
        "order 3-2": 6 if b % 2 == 0 and k % 2 == 0 and a % 3 == 0 else 0,
        "order 3-3 equal": 2 if (n - 2 * k) % 3 == 0 and (m - 2 * k) % 3 == 0 else 0,
        "order 3-3 inverse": 2 if a % 3 == 0 and b % 3 == 0 else 0,
    }
    return cases


def count_by_relators(p: "Presentation", X: FiniteGroup) -> int:
    """|X|^r times the number of homomorphisms from the reduced heap to X.

    ``p`` is an alpha-form presentation whose ``free_generators`` span the
    free factor.
    """
    from ..fundamental.targets import count_homomorphisms

    reduced = p.without_free_factor()
    homs = count_homomorphisms(reduced, X)
    return X.order ** len(p.free_generators) * homs
