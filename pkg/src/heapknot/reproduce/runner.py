"""Runner evaluating reproduction targets and comparing them with expectations."""

import logging
import random
import time
from collections import Counter
from collections.abc import Callable
from datetime import datetime
from typing import Any

from sympy import factorint

from ..algebra import FiniteGroup, make_group, parse_subgroup
from ..cohomology import (
    CohomologyResult,
    NamedCocycle,
    Variant,
    boundary_matrix,
    class_rank,
    coboundary,
    cocycle_from_spec,
    cocycle_rank,
    degenerate_generator,
    parse_coefficients,
    parse_variant,
    phi,
    psi_dihedral,
    second_cohomology,
)
from ..exceptions import HeapknotError, LinkSpecError
from ..fundamental import (
    FreeWord,
    Presentation,
    abelianization,
    check_homomorphism,
    cord_relators,
    heap_presentation,
    parse_target,
    pretzel_relators,
    relator_equivalent,
    tietze_simplify,
    torus_relators,
)
from ..knots import (
    BraidWord,
    ComponentColor,
    FramedLink,
    InvariantValue,
    PretzelLink,
    apply_braid_relation,
    braid_relation_sites,
    classify,
    cord_prediction,
    count_by_relators,
    count_colorings,
    crossing_sites,
    cyclic_rotate,
    dihedral_torus_prediction,
    enumerate_colorings,
    insert_cancelling_pair,
    invariant,
    parse_link,
    pretzel,
    relocate_kinks,
    telephone_cord,
    torus_link,
    torus_phi_prediction,
    wirtinger_images,
)
from ..models.reproduce import CaseKind, CaseResult, ReproduceReport, TargetCase
from ..utils import pbar

logger = logging.getLogger(__name__)

Observation = dict[str, Any]


def link_from_params(spec: dict[str, Any]) -> FramedLink | PretzelLink:
    """Build a link from catalogue parameters.

    Families: ``braid`` (strands, braid, framings), ``torus`` (crossings,
    framings), ``cord`` (n) and ``pretzel`` (twists, framings).

    Raises:
        LinkSpecError: On an unknown family or missing parameters
    """
    family = spec.get("family", "braid")
    try:
        if family == "braid":
            return parse_link(spec.get("braid", ""), spec["strands"], spec.get("framings"))
        if family == "torus":
            return torus_link(spec["crossings"], spec.get("framings"))
        if family == "cord":
            return telephone_cord(spec["n"])
        if family == "pretzel":
            return pretzel(spec["twists"], spec.get("framings"))
    except KeyError as e:
        raise LinkSpecError(f"{family} link needs parameter {e}") from None
    raise LinkSpecError(f"unknown link family {family!r}")


def _framed(spec: dict[str, Any]) -> FramedLink:
    L = link_from_params(spec)
    if not isinstance(L, FramedLink):
        raise LinkSpecError("this case needs a braid closure")
    return L


def _presentation_from_params(params: dict[str, Any], reduced: bool) -> Presentation:
    if "link" in params:
        p = heap_presentation(link_from_params(params["link"]))
        return p.without_free_factor() if reduced else p
    return Presentation(
        tuple(params["generators"]),
        tuple(FreeWord.parse(text) for text in params["relators"]),
    )


def _elementary_divisors(torsion: tuple[int, ...] | list[int]) -> list[int]:
    return sorted(p**e for d in torsion for p, e in factorint(d).items())


def _unordered(value: InvariantValue) -> Counter:
    """The invariant with component order forgotten."""
    out: Counter = Counter()
    for key, mult in value.items:
        out[tuple(sorted(key))] += mult
    return out


def expectations_met(expect: dict[str, Any], observed: Observation) -> bool:
    """Compare observations with expectations; ``_min``/``_max`` keys are bounds."""
    for key, want in expect.items():
        if key.endswith("_min"):
            got = observed.get(key[:-4])
            ok = got is not None and got >= want
        elif key.endswith("_max"):
            got = observed.get(key[:-4])
            ok = got is not None and got <= want
        else:
            ok = observed.get(key) == want
        if not ok:
            return False
    return True


class ReproduceRunner:
    """Evaluates acceptance targets and records pass/fail results."""

    def __init__(self, workers: int | None = None):
        """Initialize the runner.

        Args:
            workers: Enumeration workers for coloring cases (settings default if None)
        """
        self.workers = workers
        self._observers: dict[CaseKind, Callable[[dict[str, Any]], Observation]] = {
            CaseKind.COHOMOLOGY: self._cohomology,
            CaseKind.SPLITTING: self._splitting,
            CaseKind.COCYCLE_RANK: self._cocycle_rank,
            CaseKind.INJECTION: self._injection,
            CaseKind.COCYCLE_FAMILY: self._cocycle_family,
            CaseKind.COLORINGS: self._colorings,
            CaseKind.DIHEDRAL_TORUS: self._dihedral_torus,
            CaseKind.INVARIANT: self._invariant,
            CaseKind.DEGENERATE_FORMULA: self._degenerate_formula,
            CaseKind.INVARIANCE: self._invariance,
            CaseKind.PRESENTATION: self._presentation,
            CaseKind.ABELIANIZATION: self._abelianization,
            CaseKind.HOMOMORPHISM: self._homomorphism,
            CaseKind.TIETZE: self._tietze,
            CaseKind.BOUNDARY: self._boundary,
            CaseKind.WIRTINGER: self._wirtinger,
        }

    def run(self, cases: list[TargetCase], verbose: bool = True) -> ReproduceReport:
        """Run every case in order.

        Args:
            cases: Targets to evaluate
            verbose: Show a progress bar

        Returns:
            ReproduceReport with per-case results and totals
        """
        start_time = datetime.now()
        results = [
            self.run_case(case)
            for case in pbar(cases, total=len(cases), desc="reproduce", verbose=verbose)
        ]
        passed = sum(r.passed for r in results)
        report = ReproduceReport(
            results=results,
            passed=passed,
            failed=len(results) - passed,
            start_time=start_time,
            end_time=datetime.now(),
        )
        logger.info(f"Reproduction finished: {report.passed} passed, {report.failed} failed")
        return report

    def run_case(self, case: TargetCase) -> CaseResult:
        """Evaluate one case; errors are recorded as failures."""
        started = time.perf_counter()
        observed: Observation = {}
        error = None
        try:
            observed = self._observers[case.kind](case.params)
            passed = expectations_met(case.expect, observed)
        except (HeapknotError, KeyError, ValueError) as e:
            logger.error(f"Case {case.id} raised: {e}")
            error = f"{type(e).__name__}: {e}"
            passed = False
        seconds = time.perf_counter() - started
        if not passed and error is None:
            logger.warning(f"Case {case.id} failed: expected {case.expect}, got {observed}")
        return CaseResult(
            id=case.id,
            kind=case.kind,
            passed=passed,
            expected=case.expect,
            observed=observed,
            seconds=round(seconds, 3),
            error=error,
        )

    # Cohomology

    def _cohomology(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        result = second_cohomology(
            X,
            parse_coefficients(params.get("coefficients", "Z")),
            parse_variant(params.get("variant", "full"), X),
        )
        return {"rank": result.free_rank, "torsion": list(result.torsion)}

    def _splitting(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        modulus = parse_coefficients(params.get("coefficients", "Z"))
        full, dh, ndh = (
            second_cohomology(X, modulus, v)
            for v in (Variant.full(), Variant.degenerate(), Variant.nondegenerate())
        )
        split = full.free_rank == dh.free_rank + ndh.free_rank and _elementary_divisors(
            full.torsion
        ) == _elementary_divisors(dh.torsion + ndh.torsion)
        return {
            "split": split,
            "full": full.invariants.describe(),
            "degenerate": dh.invariants.describe(),
            "nondegenerate": ndh.invariants.describe(),
        }

    def _cocycle_rank(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        return {"rank": cocycle_rank(X, parse_variant(params["variant"], X))}

    def _injection(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        G = parse_subgroup(X, params["subgroup"])
        relative: CohomologyResult = second_cohomology(X, None, Variant.relative_to(G))
        nondegenerate = second_cohomology(X, None, Variant.nondegenerate())
        image_rank = class_rank(list(relative.basis), Variant.nondegenerate())
        return {
            "relative_rank": relative.free_rank,
            "nondegenerate_rank": nondegenerate.free_rank,
            "image_rank": image_rank,
            "injects": image_rank == relative.free_rank
            and relative.free_rank <= nondegenerate.free_rank,
        }

    def _cocycle_family(self, params: dict[str, Any]) -> Observation:
        n = params["n"]
        build = phi if params["family"] == "phi" else psi_dihedral
        family = [build(n, i) for i in range(1, n)]
        return {
            "verified": all(c.verify() for c in family),
            "class_rank": class_rank(family),
        }

    # Colorings and invariants

    def _colorings(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        L = _framed(params["link"])
        colorings = enumerate_colorings(L, X, workers=self.workers, progress=False)
        mono = sum(
            all(flag is ComponentColor.MONOCHROMATIC for flag in classify(c))
            for c in colorings
        )
        observed: Observation = {
            "count": len(colorings),
            "mono": mono,
            "wirtinger": all(wirtinger_images(c).holds for c in colorings),
        }
        if params.get("by_relators"):
            by_relators = count_by_relators(heap_presentation(L), X)
            observed["by_relators"] = by_relators
            observed["relators_agree"] = by_relators == len(colorings)
        return observed

    def _dihedral_torus(self, params: dict[str, Any]) -> Observation:
        n, m, k = params["n"], params["m"], params["k"]
        X = make_group("D3")
        count = count_colorings(torus_link(2 * k, (n, m)), X, workers=self.workers, progress=False)
        predicted = 36 * sum(dihedral_torus_prediction(n, m, k).values())
        return {"count": count, "predicted": predicted, "matches": count == predicted}

    def _invariant(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        L = _framed(params["link"])
        modulus = parse_coefficients(params.get("coefficients", "Z"))
        spec = params["cocycle"]
        cocycle = cocycle_from_spec(spec, X, modulus)
        colorings = enumerate_colorings(L, X, workers=self.workers, progress=False)
        value = invariant(L, X, cocycle, colorings=colorings)
        observed: Observation = {
            "total": value.total,
            "count": len(colorings),
            "total_is_count": value.total == len(colorings),
            "trivial": value.is_trivial(),
            "value": value.describe(),
        }
        prediction = params.get("prediction")
        if prediction == "cord":
            observed["matches"] = value == cord_prediction(X.order)
        elif prediction == "torus_phi":
            i = int(spec.partition(":")[2])
            observed["matches"] = value == torus_phi_prediction(X.order, i)
        elif prediction is not None:
            raise HeapknotError(f"unknown prediction {prediction!r}")
        return observed

    def _degenerate_formula(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        L = torus_link(params["crossings"])
        if L.component_count != 1:
            raise LinkSpecError("the degenerate formula is stated for knots")
        colorings = enumerate_colorings(L, X, workers=self.workers, progress=False)
        value = invariant(L, X, degenerate_generator(X), colorings=colorings)
        w = sum(site.sign for site in crossing_sites(L))
        mono = sum(classify(c)[0] is ComponentColor.MONOCHROMATIC for c in colorings)
        expected: Counter = Counter()
        expected[((0, 0),)] += len(colorings) - mono
        expected[((w, w),)] += mono
        predicted = InvariantValue.from_counter(+expected, None, 1)
        return {"matches": value == predicted, "value": value.describe()}

    def _invariance(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        rng = random.Random(params.get("seed", 0))
        default = "phi:1" if X.label.startswith("Z") else "psi:1"
        cocycle = cocycle_from_spec(params.get("cocycle", default), X, None)
        stable = True
        coboundary_trivial = True
        for _ in range(params.get("samples", 10)):
            L = _random_link(rng)
            base_count, base_value = self._count_and_value(L, X, cocycle)
            for moved in _moves(L, rng):
                count, value = self._count_and_value(moved, X, cocycle)
                if count != base_count or value != base_value:
                    logger.warning(f"Invariant changed between {L.text()} and {moved.text()}")
                    stable = False
            f = [rng.randrange(-3, 4) for _ in range(X.order)]
            exact = NamedCocycle("cob", coboundary(X, f), Variant.full())
            if not invariant(L, X, exact, workers=self.workers).is_trivial():
                coboundary_trivial = False
        return {"stable": stable, "coboundary_trivial": coboundary_trivial}

    def _count_and_value(
        self, L: FramedLink, X: FiniteGroup, cocycle: NamedCocycle
    ) -> tuple[int, Counter]:
        colorings = enumerate_colorings(L, X, workers=self.workers, progress=False)
        value = invariant(L, X, cocycle, colorings=colorings, check=False)
        return len(colorings), _unordered(value)

    # Fundamental heap

    def _presentation(self, params: dict[str, Any]) -> Observation:
        spec = params["link"]
        p = heap_presentation(link_from_params(spec))
        form = params["closed_form"]
        if form == "torus":
            expected = torus_relators(spec["crossings"] // 2)
        elif form == "cord":
            expected = cord_relators(spec["n"])
        elif form == "pretzel":
            expected = pretzel_relators(spec["twists"])
        else:
            raise HeapknotError(f"unknown closed form {form!r}")

        def found(r: FreeWord, pool: tuple[FreeWord, ...] | list[FreeWord]) -> bool:
            return any(relator_equivalent(r, s) for s in pool)

        matches = all(found(r, p.relators) for r in expected)
        if params.get("match", "exact") == "exact":
            matches = matches and all(found(r, expected) for r in p.relators)
        return {
            "free_rank": len(p.free_generators),
            "relators_match": matches,
            "relators": [r.text() for r in p.relators],
        }

    def _abelianization(self, params: dict[str, Any]) -> Observation:
        ab = abelianization(_presentation_from_params(params, reduced=True))
        return {"rank": ab.free_rank, "torsion": list(ab.torsion)}

    def _tietze(self, params: dict[str, Any]) -> Observation:
        simplified = tietze_simplify(_presentation_from_params(params, reduced=True))
        ab = abelianization(simplified)
        return {
            "generators": len(simplified.generators),
            "relators": len(simplified.relators),
            "rank": ab.free_rank,
            "torsion": list(ab.torsion),
            "presentation": simplified.text(),
        }

    def _homomorphism(self, params: dict[str, Any]) -> Observation:
        p = _presentation_from_params(params, reduced=False)
        X = make_group(params["group"]) if "group" in params else None
        check = check_homomorphism(p, parse_target(params["target"], X))
        observed: Observation = {
            "holds": check.holds,
            "unresolved": [t.image for t in check.trace if not t.trivial],
        }
        if check.surjective is not None:
            observed["surjective"] = check.surjective
        return observed

    # Structural checks

    def _boundary(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        n = params["degree"]
        product = boundary_matrix(X, n - 1) @ boundary_matrix(X, n)
        return {"zero": product.is_zero()}

    def _wirtinger(self, params: dict[str, Any]) -> Observation:
        X = make_group(params["group"])
        L = _framed(params["link"])
        colorings = enumerate_colorings(L, X, workers=self.workers, progress=False)
        return {
            "count": len(colorings),
            "holds": all(wirtinger_images(c).holds for c in colorings),
        }


def _random_link(rng: random.Random) -> FramedLink:
    """A framed braid closure on at most 3 strands with at most 6 letters."""
    strands = rng.randint(1, 3)
    letters: tuple[tuple[int, int], ...] = ()
    if strands > 1:
        letters = tuple(
            (rng.randint(1, strands - 1), rng.choice((1, -1)))
            for _ in range(rng.randint(0, 6))
        )
    braid = BraidWord(strands, letters)
    framings = tuple(rng.randint(-2, 2) for _ in braid.cycles())
    return FramedLink(braid, framings)


def _moves(L: FramedLink, rng: random.Random) -> list[FramedLink]:
    """Diagrams of the same framed link obtained by one braid move each."""
    out = []
    if L.letters:
        out.append(cyclic_rotate(L, rng.randint(1, len(L.letters))))
    if L.strands > 1:
        out.append(
            insert_cancelling_pair(
                L,
                rng.randint(0, len(L.letters)),
                rng.randint(1, L.strands - 1),
                rng.choice((1, -1)),
            )
        )
    sites = braid_relation_sites(L)
    if sites:
        out.append(apply_braid_relation(L, rng.choice(sites)))
    j = rng.randrange(L.component_count)
    out.append(relocate_kinks(L, j, rng.choice(L.components[j])))
    return out
