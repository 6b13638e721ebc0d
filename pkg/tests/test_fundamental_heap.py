"""Tests for free words, heap presentations, Tietze moves and target groups."""

import pytest

from heapknot.algebra import FiniteGroup, make_group
from heapknot.config import Settings, set_settings
from heapknot.exceptions import BudgetExceededError, PresentationError
from heapknot.fundamental import (
    FiniteTarget,
    FreeWord,
    Presentation,
    abelianization,
    alpha_form,
    canonical_relator,
    check_homomorphism,
    cord_relators,
    count_homomorphisms,
    finite_target,
    heap_presentation,
    parse_target,
    presentation,
    pretzel_coxeter_target,
    pretzel_relators,
    pretzel_vinberg_target,
    reduce_power_word,
    relator_equivalent,
    symbolic_propagate,
    tietze_simplify,
    top_state,
    torus_relators,
    triangle_target,
    vinberg_torus_target,
)
from heapknot.knots import (
    enumerate_colorings,
    parse_link,
    pretzel,
    propagate,
    telephone_cord,
    torus_link,
)

W = FreeWord.parse


def evaluate(G: FiniteGroup, word: FreeWord, images: dict[str, int]) -> int:
    value = G.identity
    for symbol, exp in word.syllables:
        value = G.mul[value][G.power(images[symbol], exp)]
    return value


def same_relators(left, right) -> bool:
    """Both lists agree up to cyclic permutation and inversion."""
    return {canonical_relator(r) for r in left} == {canonical_relator(r) for r in right}


class TestFreeWord:
    """Freely reduced words."""

    def test_parse_reduces(self):
        """Test parsing cancels adjacent inverse letters."""
        assert W("a b^-1 b c^2").text() == "a c^2"
        assert W("a*a").text() == "a^2"
        assert W("x^(-3)").syllables == (("x", -3),)
        assert W("1").is_identity()

    def test_parse_rejects(self):
        """Test malformed tokens."""
        with pytest.raises(PresentationError):
            W("a^x")

    def test_group_operations(self):
        """Test products, inverses and powers."""
        ab = W("a b")
        assert (ab**2).text() == "a b a b"
        assert (ab**-1).text() == "b^-1 a^-1"
        assert (ab * ab.inverse()).is_identity()
        assert len(ab**3) == 6

    def test_counts(self):
        """Test occurrence and exponent sums."""
        w = W("a^2 b a^-1")
        assert w.occurrences("a") == 3
        assert w.exponent_sum("a") == 1
        assert w.symbols() == {"a", "b"}

    def test_cyclic_reduce(self):
        """Test cancellation of first against last letters."""
        assert W("a b a^-1").cyclic_reduce().text() == "b"
        assert W("a^2 b a^-1").cyclic_reduce().text() == "a b"

    def test_substitute(self):
        """Test generator replacement."""
        assert W("y1 x1^-1").substitute({"y1": W("x1 a1")}).cyclic_reduce().text() == "a1"

    def test_relator_equivalence(self):
        """Test equality up to rotation and inversion."""
        assert relator_equivalent(W("a b c"), W("b c a"))
        assert relator_equivalent(W("a b c"), W("c^-1 b^-1 a^-1"))
        assert not relator_equivalent(W("a b c"), W("a c b"))


class TestPresentation:
    """Heap presentations of braid closures and pretzel links."""

    def test_unknown_generators_rejected(self):
        """Test relators may only use generators."""
        with pytest.raises(PresentationError):
            Presentation(("a",), (W("a b"),))

    def test_identity_relators_dropped(self):
        """Test trivial relators vanish."""
        p = Presentation(("a", "g"), (W("g^2 a"), W("1")))
        assert len(p.relators) == 1
        assert p.text() == "⟨a, g | g^2 a⟩"

    def test_free_factor_must_be_free(self):
        """Test without_free_factor refuses free generators in relators."""
        p = Presentation(("a",), (W("a^2"),), ("a",))
        with pytest.raises(PresentationError):
            p.without_free_factor()

    def test_symbolic_matches_numeric(self, d3):
        """Test symbolic labels evaluate to the numeric bottom labels."""
        L = parse_link("1 1 -2", 3, [1, -1])
        bottom = symbolic_propagate(L)
        for c in enumerate_colorings(L, d3)[:20]:
            images = {}
            for i, (p, q) in enumerate(c.state):
                images[f"x{i + 1}"], images[f"y{i + 1}"] = p, q
            numeric, _ = propagate(d3, L, c.state)
            assert tuple(
                (evaluate(d3, bx, images), evaluate(d3, by, images)) for bx, by in bottom
            ) == numeric

    def test_raw_presentation(self):
        """Test one relator per closed label."""
        p = presentation(torus_link(3))
        assert p.generators == ("x1", "y1", "x2", "y2")
        assert len(p.relators) == 4
        assert symbolic_propagate(parse_link("", 1)) == top_state(1)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_torus_closed_form(self, k):
        """Test T(2,2k) gives a1^-k(a1a2)^k and a2^-k(a1a2)^k."""
        p = heap_presentation(torus_link(2 * k))
        assert len(p.free_generators) == 2
        assert p.generators[2:] == ("a1", "a2")
        assert same_relators(p.relators, torus_relators(k))

    @pytest.mark.parametrize("n", [1, 3, 4])
    def test_cord_closed_form(self, n):
        """Test Ĉ_n gives a1^n."""
        p = heap_presentation(telephone_cord(n))
        assert p.generators == ("x1", "a1")
        assert p.free_generators == ("x1",)
        assert same_relators(p.relators, cord_relators(n))

    @pytest.mark.parametrize("twists", [(1, 1, 1), (2, 1, 3)])
    def test_pretzel_closed_form(self, twists):
        """Test the pretzel relators appear in the reduced presentation."""
        p = heap_presentation(pretzel(twists))
        assert len(p.free_generators) == 3
        found = {canonical_relator(r) for r in p.relators}
        assert all(canonical_relator(r) in found for r in pretzel_relators(twists))

    def test_alpha_form_needs_xy_generators(self):
        """Test alpha_form only accepts raw presentations."""
        with pytest.raises(PresentationError):
            alpha_form(Presentation(("a",), ()))


class TestAbelianization:
    """Abelian invariants of reduced heaps."""

    def test_torus_closed_form(self):
        """Test the T(2,4) relators give Z2 ⊕ Z2."""
        ab = abelianization(Presentation(("a1", "a2"), tuple(torus_relators(2))))
        assert (ab.free_rank, ab.torsion) == (0, (2, 2))

    @pytest.mark.parametrize(("crossings", "torsion"), [(3, (3,)), (4, (2, 2)), (5, (5,))])
    def test_torus_links(self, crossings, torsion):
        """Test the reduced heap of T(2,q)."""
        p = heap_presentation(torus_link(crossings)).without_free_factor()
        ab = abelianization(p)
        assert (ab.free_rank, ab.torsion) == (0, torsion)

    def test_cord(self):
        """Test the reduced heap of Ĉ_4 is Z_4."""
        p = heap_presentation(telephone_cord(4)).without_free_factor()
        assert abelianization(p).describe() == "Z_4"


class TestTietze:
    """Tietze eliminations."""

    def test_eliminates_single_occurrence(self):
        """Test ⟨a, g | g² a⟩ collapses to a free group of rank one."""
        p = tietze_simplify(Presentation(("a", "g"), (W("g^2 a"),)))
        assert p.generators == ("g",)
        assert p.relators == ()
        assert p.text() == "⟨g | ⟩"

    def test_keeps_abelianization(self):
        """Test the trefoil's reduced heap keeps Z_3."""
        reduced = heap_presentation(torus_link(3)).without_free_factor()
        simplified = tietze_simplify(reduced)
        assert len(simplified.generators) <= len(reduced.generators)
        assert abelianization(simplified).torsion == (3,)


class TestTargets:
    """Finite and power-relator targets."""

    def test_klein_map(self):
        """Test T(2,4) maps onto Z2 × Z2."""
        X = make_group("Z2xZ2")
        target = parse_target("map:a1=(1,0);a2=(0,1)", X)
        assert isinstance(target, FiniteTarget)
        assert dict(target.images) == {"a1": 2, "a2": 1}
        check = check_homomorphism(heap_presentation(torus_link(4)), target)
        assert check.holds
        assert check.surjective
        assert all(step.trivial for step in check.trace)

    def test_failing_map(self, z3):
        """Test a map killing only one relator."""
        target = finite_target(z3, {"a1": "1", "a2": "0"})
        check = check_homomorphism(heap_presentation(torus_link(4)), target)
        assert not check.holds
        assert check.surjective

    def test_missing_image(self, z2):
        """Test every non-free generator needs an image."""
        p = Presentation(("a1", "a2"), ())
        with pytest.raises(PresentationError):
            check_homomorphism(p, finite_target(z2, {"a1": "1"}))

    def test_vinberg_torus_target(self):
        """Test the odd torus relator dies in the k = 3 target."""
        relator = W("a1^-4 a1 a2 a1 a2 a1 a2 a1 a2 a2^-3 a1 a2 a1 a2 a1 a2")
        p = Presentation(("a1", "a2"), (relator,))
        check = check_homomorphism(p, vinberg_torus_target(3))
        assert check.holds
        assert check.surjective is None

    def test_pretzel_targets(self):
        """Test the pretzel relators die in their power-relator targets."""
        vinberg = check_homomorphism(
            heap_presentation(pretzel([2, 2, 2])), pretzel_vinberg_target([2, 2, 2])
        )
        coxeter = check_homomorphism(
            heap_presentation(pretzel([1, 1, 1])), pretzel_coxeter_target([1, 1, 1])
        )
        assert vinberg.holds
        assert coxeter.holds

    def test_reduce_power_word(self):
        """Test generator and word laws."""
        target = triangle_target(2, 3, 5)
        assert reduce_power_word(W("x^2"), target).is_identity()
        assert reduce_power_word(W("x y") ** 5, target).is_identity()
        assert reduce_power_word(W("x y"), target).text() == "x y"

    def test_target_labels(self):
        """Test builder labels and exponents."""
        assert triangle_target(2, 3, 5).label == "triangle(2,3,5)"
        assert vinberg_torus_target(3).label == "vinberg(3)"
        target = pretzel_vinberg_target([2, 2, 2])
        assert dict(target.exponents) == {"a1": 4, "a2": 4, "a3": 4}

    @pytest.mark.parametrize("text", ["vinberg:1", "nope:1", "triangle:1,2", "map:a1=1"])
    def test_parse_target_rejects(self, text):
        """Test bad targets and a map without a group."""
        with pytest.raises(PresentationError):
            parse_target(text)

    def test_coxeter_parity(self):
        """Test Coxeter targets need twists of one parity."""
        with pytest.raises(PresentationError):
            pretzel_coxeter_target([1, 2])

    def test_count_homomorphisms(self, z2, z3):
        """Test brute-force counting."""
        p = Presentation(("a1",), tuple(cord_relators(3)))
        assert count_homomorphisms(p, z3) == 3
        assert count_homomorphisms(p, z2) == 1
        set_settings(Settings(state_budget=2))
        with pytest.raises(BudgetExceededError):
            count_homomorphisms(p, z3)
