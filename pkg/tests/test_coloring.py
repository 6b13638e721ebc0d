"""Tests for heap colorings of framed braid closures."""

import pytest

from heapknot.algebra import make_group
from heapknot.config import Settings, set_settings
from heapknot.exceptions import BudgetExceededError, LinkSpecError
from heapknot.fundamental import heap_presentation
from heapknot.knots import (
    Coloring,
    ComponentColor,
    CrossingSite,
    SiteKind,
    apply_crossing,
    classify,
    coloring_tallies,
    count_by_relators,
    count_colorings,
    dihedral_torus_prediction,
    enumerate_colorings,
    parse_link,
    propagate,
    state_from_index,
    state_index,
    telephone_cord,
    torus_link,
    wirtinger_images,
)
from heapknot.utils import apply_pool, pbar, resolve_workers

MONO = ComponentColor.MONOCHROMATIC
BI = ComponentColor.BICOLORED


def test_positive_crossing_map(z3):
    """Test (x,y) under (u,v) becomes (x·u⁻¹v, y·u⁻¹v)."""
    site = CrossingSite(SiteKind.LETTER, 1, 0, 0, 0)
    state, record = apply_crossing(z3, ((0, 1), (1, 2)), site)
    assert state == ((1, 2), (1, 2))
    assert (record.pre, record.over, record.post) == ((0, 1), (1, 2), (1, 2))


def test_negative_crossing_inverts_positive(z3):
    """Test σ⁻¹ undoes σ."""
    positive = CrossingSite(SiteKind.LETTER, 1, 0, 0, 0)
    negative = CrossingSite(SiteKind.LETTER, -1, 0, 1, 0)
    start = ((0, 1), (1, 2))
    middle, _ = apply_crossing(z3, start, positive)
    end, _ = apply_crossing(z3, middle, negative)
    assert end == start


def test_kink_map(z3):
    """Test a positive kink multiplies both labels by p⁻¹q."""
    site = CrossingSite(SiteKind.KINK, 1, 0, 0, 0)
    state, record = apply_crossing(z3, ((0, 2),), site)
    assert state == ((2, 1),)
    assert record.over == (2, 1)


def test_site_position_checked(z3):
    """Test sites outside the state are rejected."""
    site = CrossingSite(SiteKind.LETTER, 1, 1, 0, 0)
    with pytest.raises(LinkSpecError):
        apply_crossing(z3, ((0, 0), (0, 0)), site)


def test_propagate_checks_width(z3):
    """Test the state must have one pair per strand."""
    with pytest.raises(LinkSpecError):
        propagate(z3, torus_link(2), ((0, 0),))


def test_state_index_layout():
    """Test pair 0 holds the most significant digits."""
    assert state_index(((1, 2), (0, 1)), 3) == 1 * 27 + 2 * 9 + 0 * 3 + 1
    assert state_from_index(46, 3, 2) == ((1, 2), (0, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cord_over_its_own_cyclic_group(n):
    """Test Ĉ_n has n² colorings by Z_n."""
    assert count_colorings(telephone_cord(n), make_group(f"Z{n}")) == n * n


@pytest.mark.parametrize(("n", "m"), [(2, 3), (3, 2), (4, 3), (5, 2)])
def test_cord_over_coprime_group(n, m):
    """Test only monochromatic colorings survive when gcd(n, m) = 1."""
    colorings = enumerate_colorings(telephone_cord(n), make_group(f"Z{m}"))
    assert len(colorings) == m
    assert all(classify(c) == (MONO,) for c in colorings)


def test_unlinks(d3, z2):
    """Test trivial closures color freely."""
    assert count_colorings(parse_link("", 1), d3) == 36
    assert count_colorings(parse_link("", 2), z2) == 16


def test_trefoil_tallies(z3):
    """Test the trefoil over Z3."""
    colorings = enumerate_colorings(torus_link(3), z3)
    assert len(colorings) == 9
    assert coloring_tallies(colorings) == {(MONO,): 3, (BI,): 6}


def test_trefoil_over_z2(z2):
    """Test the trefoil over Z2 is monochromatic only."""
    assert count_colorings(torus_link(3), z2) == 2


def test_colorings_are_fixed_points(d3):
    """Test every enumerated state closes up."""
    L = parse_link("1 1 -2", 3, [1, -1])
    for c in enumerate_colorings(L, d3):
        bottom, _ = propagate(d3, L, c.state)
        assert bottom == c.state
        assert len(c.records) == 5


def test_wirtinger_relations(d3):
    """Test meridian images satisfy the Wirtinger relation."""
    colorings = enumerate_colorings(torus_link(3), d3)
    assert sum(classify(c) == (MONO,) for c in colorings) == 6
    assert all(wirtinger_images(c).holds for c in colorings)


@pytest.mark.parametrize(
    ("word", "framings"),
    [
        ("1 -1", None),
        ("-1 1", None),
        ("2 -2", [1, 0, -1]),
        ("-2 2", None),
        ("1 -2 1 -2", None),
        ("-1 2 2 -1", [0, 2, 0]),
    ],
)
def test_wirtinger_relations_mixed_signs(d3, word, framings):
    """Test the Wirtinger relation on closures mixing σ and σ⁻¹."""
    colorings = enumerate_colorings(parse_link(word, 3, framings), d3)
    assert colorings
    assert all(wirtinger_images(c).holds for c in colorings)


def test_wirtinger_at_single_negative_site(d3):
    """Test every labelled state pushed through one σ⁻¹ satisfies the relation."""
    L = parse_link("-1", 2)
    site = CrossingSite(SiteKind.LETTER, -1, 0, 0, 0)
    for index in range(d3.order**4):
        start = state_from_index(index, d3.order, 2)
        end, record = apply_crossing(d3, start, site)
        c = Coloring(L, d3, end, (record,))
        assert wirtinger_images(c).holds, start


def test_dihedral_unlink_prediction(d3):
    """Test the D3 prediction on the two-component unlink."""
    predicted = 36 * sum(dihedral_torus_prediction(0, 0, 0).values())
    assert predicted == 6**4
    assert count_colorings(torus_link(0, (0, 0)), d3) == predicted


@pytest.mark.parametrize(("n", "m", "k"), [(1, 0, 0), (1, 1, 1), (2, 2, 1), (0, 0, 2)])
def test_dihedral_torus_prediction(d3, n, m, k):
    """Test Col_D3 of T_(n,m)(2,2k) against the case count."""
    predicted = 36 * sum(dihedral_torus_prediction(n, m, k).values())
    assert count_colorings(torus_link(2 * k, (n, m)), d3) == predicted


def test_count_by_relators_trefoil(z3):
    """Test |X|·#Hom(reduced heap, X) equals the coloring count."""
    assert count_by_relators(heap_presentation(torus_link(3)), z3) == 9


def test_count_by_relators_framed_hopf(d3):
    """Test relator counting on a framed two-component link."""
    L = torus_link(2, (1, 0))
    assert count_by_relators(heap_presentation(L), d3) == count_colorings(L, d3)


def test_state_budget(z3):
    """Test the enumeration guard."""
    set_settings(Settings(state_budget=10))
    with pytest.raises(BudgetExceededError):
        count_colorings(torus_link(2), z3)


def test_small_chunks_give_same_count(z3):
    """Test chunked scanning covers every state once."""
    expected = count_colorings(torus_link(3), z3)
    settings = Settings()
    settings.enumeration.chunk_size = 7
    set_settings(settings)
    assert count_colorings(torus_link(3), z3, workers=1, progress=False) == expected


def test_apply_pool_in_process():
    """Test results keep argument order."""
    assert apply_pool(pow, [(2, 3), (3, 2)], workers=1, verbose=False) == [8, 9]


def test_pbar_passthrough():
    """Test the iterable is returned untouched when quiet."""
    items = [1, 2]
    assert pbar(items, verbose=False) is items


def test_resolve_workers():
    """Test worker count defaults and clamping."""
    assert resolve_workers(None) >= 1
    assert resolve_workers(0) == 1
    assert resolve_workers(3) == 3
