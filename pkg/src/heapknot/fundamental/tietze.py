"""Tietze simplification by eliminating generators that occur once."""

import logging

from ..exceptions import PresentationError
from .presentation import Presentation, dedupe_relators
from .targets import abelianization
from .words import FreeWord

logger = logging.getLogger(__name__)


def _find_elimination(
    relators: list[FreeWord], generators: list[str]
) -> tuple[FreeWord, str, FreeWord] | None:
    """Shortest relator (ties by text) in which some generator occurs once.

    Returns the relator, the generator (last in generator order) and its
    image in the remaining generators.
    """
    for r in sorted(relators, key=lambda w: (len(w), w.text())):
        singles = [g for g in generators if r.occurrences(g) == 1]
        if not singles:
            continue
        g = singles[-1]
        letters = r.letters()
        k = next(k for k, (s, _) in enumerate(letters) if s == g)
        sign = letters[k][1]
        rest = FreeWord.from_letters(letters[k + 1 :] + letters[:k])
        # g^sign · rest = 1
        image = rest.inverse() if sign > 0 else rest
        return r, g, image
    return None


def tietze_simplify(p: Presentation, max_passes: int = 50) -> Presentation:
    """Eliminate generators until none occurs exactly once in a relator.

    Each pass picks the shortest relator (then lexicographic) containing a
    generator g exactly once, solves it for g and substitutes everywhere.

    Raises:
        PresentationError: If a pass changes the abelianization
    """
    reference = abelianization(p)
    generators = list(p.generators)
    relators = dedupe_relators([r.cyclic_reduce() for r in p.relators])
    for n_pass in range(max_passes):
        found = _find_elimination(relators, generators)
        if found is None:
            break
        used, g, image = found
        relators = [r for r in relators if r is not used]
        relators = dedupe_relators(
            [r.substitute({g: image}).cyclic_reduce() for r in relators]
        )
        generators.remove(g)
        free = tuple(f for f in p.free_generators if f in generators)
        current = Presentation(tuple(generators), tuple(relators), free)
        after = abelianization(current)
        if (after.free_rank, after.torsion) != (reference.free_rank, reference.torsion):
            raise PresentationError(
                f"Tietze pass {n_pass + 1} changed the abelianization "
                f"from {reference.describe()} to {after.describe()}"
            )
        logger.debug(f"Tietze pass {n_pass + 1}: {g} = {image}, {len(relators)} relators left")
    free = tuple(f for f in p.free_generators if f in generators)
    return Presentation(tuple(generators), tuple(relators), free)
