"""Tests for Boltzmann weights and the ribbon cocycle invariant."""

from collections import Counter

import pytest

from heapknot.algebra import make_group
from heapknot.cohomology import (
    Cochain2,
    coboundary,
    degenerate_generator,
    phi,
    psi_dihedral,
    ring_cocycle,
)
from heapknot.exceptions import ComplexError
from heapknot.knots import (
    CrossingSite,
    InvariantValue,
    SiteKind,
    SiteRecord,
    coloring_key,
    cord_prediction,
    count_colorings,
    cyclic_rotate,
    enumerate_colorings,
    insert_cancelling_pair,
    invariant,
    parse_link,
    relocate_kinks,
    site_weight,
    telephone_cord,
    torus_link,
    torus_phi_prediction,
)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cord_invariant(n):
    """Test Ψ(Ĉ_n) for ψ = x(z − y) over Z_n."""
    X = make_group(f"Z{n}")
    value = invariant(telephone_cord(n), X, ring_cocycle(n, 1, 0, 0, group=X))
    assert value == cord_prediction(n)
    assert value.total == n * n


def test_cord_prediction_shape():
    """Test the even cord picks up g^(n/2·α²)."""
    value = cord_prediction(2)
    assert value.describe() == "2(e⊗e) + 2(g⊗g)"
    assert value.multiplicity(((1, 1),)) == 2
    assert not value.is_trivial()
    assert cord_prediction(3).is_trivial()


@pytest.mark.parametrize(("n", "i"), [(2, 1), (3, 1), (3, 2)])
def test_torus_phi_invariant(n, i):
    """Test Ψ_φi(T(2,2n)) over Z_n."""
    X = make_group(f"Z{n}")
    value = invariant(torus_link(2 * n), X, phi(n, i))
    assert value == torus_phi_prediction(n, i)


def test_torus_phi_prediction_total():
    """Test the four terms add up to n⁴."""
    value = torus_phi_prediction(2, 1)
    assert value.total == 16
    assert value.multiplicity(((2, 2), (2, 2))) == 4
    with pytest.raises(ComplexError):
        torus_phi_prediction(2, 2)


def test_degenerate_cocycle_reads_writhe(z3):
    """Test the degenerate class sees the writhe on monochromatic colorings."""
    value = invariant(torus_link(3), z3, degenerate_generator(z3))
    assert value.as_counter() == Counter({((0, 0),): 6, ((3, 3),): 3})


def test_coboundary_is_trivial(z3):
    """Test coboundaries give the trivial invariant."""
    L = torus_link(4, (1, -1))
    value = invariant(L, z3, coboundary(z3, [0, 1, 2]))
    assert value.is_trivial()
    assert value.total == count_colorings(L, z3)


def test_total_is_coloring_count(d3):
    """Test the multiset has one entry per coloring."""
    L = torus_link(6)
    assert invariant(L, d3, psi_dihedral(3, 1)).total == count_colorings(L, d3)


def test_invariant_under_moves(z3):
    """Test braid moves and kink slides keep the value."""
    L = parse_link("1 1 -2", 3, [1, 2])
    cocycle = phi(3, 1)
    base = invariant(L, z3, cocycle)
    assert invariant(insert_cancelling_pair(L, 2, 2, 1), z3, cocycle) == base
    assert invariant(relocate_kinks(L, 1, 2), z3, cocycle) == base
    # one rotation swaps the order of the two components
    rotated = invariant(cyclic_rotate(L), z3, cocycle)
    assert rotated.as_counter() == Counter(
        {(key[1], key[0]): mult for key, mult in base.items}
    )


@pytest.mark.parametrize(
    ("word", "framings", "index", "position", "sign"),
    [
        ("1 1 -2", [1, -1], 0, 2, 1),
        ("1 1 -2", [1, -1], 2, 1, -1),
        ("-1 2 -1", None, 1, 1, 1),
        ("1 -2 1 -2", None, 4, 2, -1),
    ],
)
def test_dihedral_invariant_under_cancelling_pair(
    d3, word, framings, index, position, sign
):
    """Test Ψ_ψ over D3 is unchanged by inserting σσ⁻¹ or σ⁻¹σ."""
    L = parse_link(word, 3, framings)
    cocycle = psi_dihedral(3, 1, d3)
    base = invariant(L, d3, cocycle)
    moved = invariant(insert_cancelling_pair(L, index, position, sign), d3, cocycle)
    assert moved == base


def test_non_cocycle_rejected(z3):
    """Test weights need a cocycle."""
    with pytest.raises(ComplexError):
        invariant(torus_link(3), z3, Cochain2.characteristic(z3, [(0, 1, 2)]))


def test_group_mismatch_rejected(z2):
    """Test the cocycle must live on the coloring group."""
    with pytest.raises(ComplexError):
        invariant(torus_link(3), z2, phi(3, 1))


def test_coloring_key_per_component(z2):
    """Test keys carry one weight pair per component."""
    L = torus_link(4)
    for c in enumerate_colorings(L, z2):
        assert len(coloring_key(phi(2, 1).cochain, c)) == 2


def test_to_dict():
    """Test the exported multiset."""
    data = cord_prediction(2).to_dict()
    assert data["coefficients"] == "Z2"
    assert data["components"] == 1
    assert data["total"] == 4
    assert data["terms"][0] == {"key": [[0, 0]], "mult": 2}


def test_from_counter_sorts():
    """Test items are sorted by key."""
    value = InvariantValue.from_counter(Counter({((1, 0),): 1, ((0, 0),): 2}), None, 1)
    assert value.items == ((((0, 0),), 2), (((1, 0),), 1))


def test_site_weight(z3):
    """Test B_ℓ = ε·ψ(pre_ℓ, over) with modular reduction."""
    psi = Cochain2.characteristic(z3, [(0, 1, 2)])
    positive = SiteRecord(CrossingSite(SiteKind.LETTER, 1, 0, 0, 0), (0, 1), (1, 2), (1, 2))
    negative = SiteRecord(CrossingSite(SiteKind.LETTER, -1, 0, 0, 0), (0, 1), (1, 2), (0, 0))
    assert site_weight(psi, positive, 0) == 1
    assert site_weight(psi, positive, 1) == 0
    assert site_weight(psi, negative, 0) == -1
    assert site_weight(psi.reduce(3), negative, 0) == 2
