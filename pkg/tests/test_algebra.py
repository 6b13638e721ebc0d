"""Tests for finite groups, heaps, subgroups and cosets."""

import pytest

from heapknot.algebra import (
    FiniteGroup,
    cosets_intersect_trivially,
    cyclic_group,
    dihedral_group,
    generated_subgroup,
    heap,
    heap_is_para_associative,
    heap_is_tsd,
    left_cosets,
    make_group,
    parse_subgroup,
    tsd,
)
from heapknot.exceptions import GroupSpecError


def test_cyclic_group_table():
    """Test that Z4 adds modulo 4."""
    G = cyclic_group(4)
    assert G.order == 4
    assert G.identity == 0
    assert G.mul[1][3] == 0
    assert G.inv[1] == 3
    assert G.names == ("0", "1", "2", "3")
    assert G.is_abelian()


def test_dihedral_group_relations(d3):
    """Test that a² = 1 and ara = r⁻¹ in D3."""
    a, r = d3.index("ar0"), d3.index("r1")
    assert d3.order == 6
    assert not d3.is_abelian()
    assert d3.power(a, 2) == d3.identity
    assert d3.product(a, r, a) == d3.index("r2")
    assert d3.element_order(r) == 3
    assert d3.check_associative()


def test_power_with_negative_exponent(d3):
    """Test that x^-1 is the inverse."""
    r = d3.index("r1")
    assert d3.power(r, -1) == d3.inv[r]
    assert d3.power(r, 0) == d3.identity


def test_make_group_product_names():
    """Test that products are named by tuples of factor names."""
    G = make_group("Z2xZ2")
    assert G.label == "Z2xZ2"
    assert G.order == 4
    assert G.names == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
    assert G.power(G.index("(1,1)"), 2) == G.identity


def test_make_group_is_cached():
    """Test that equal group texts give the same instance."""
    assert make_group("z3") is make_group("Z3")


@pytest.mark.parametrize("text", ["Q8", "Z", "Z0", "D0", "Z2 x"])
def test_make_group_rejects_bad_text(text):
    """Test that malformed group texts raise GroupSpecError."""
    with pytest.raises(GroupSpecError):
        make_group(text)


def test_unknown_element_name(z3):
    """Test that looking up a missing name lists the known ones."""
    with pytest.raises(GroupSpecError, match="known names"):
        z3.index("r1")


def test_table_without_identity_rejected():
    """Test that a table with no identity is rejected."""
    with pytest.raises(GroupSpecError):
        FiniteGroup([[1, 0], [0, 0]], ["a", "b"])


def test_duplicate_names_rejected():
    """Test that element names must be unique."""
    with pytest.raises(GroupSpecError):
        FiniteGroup([[0, 1], [1, 0]], ["e", "e"])


def test_heap_bracket(z4):
    """Test that [x,y,z] = x - y + z in Z4."""
    assert heap(z4, 1, 3, 2) == 0
    assert heap(z4, 3, 0, 3) == 2


def test_tsd_is_the_heap_bracket(d3):
    """Test the ternary operation is the same bracket."""
    assert tsd is heap
    assert tsd(d3, 4, 1, 2) == heap(d3, 4, 1, 2)


def test_heap_axioms(d3):
    """Test that the heap of D3 is para-associative and TSD."""
    assert heap_is_para_associative(d3)
    assert heap_is_tsd(d3)


def test_generated_subgroup(d3):
    """Test that r generates the rotations."""
    H = generated_subgroup(d3, [d3.index("r1")])
    assert H.members == (0, 1, 2)
    assert H.is_valid()
    assert len(H) == 3
    assert H.label == "{r0,r1,r2}"


def test_parse_subgroup(d3):
    """Test that ``+`` joins generator names."""
    assert parse_subgroup(d3, "ar0").members == (0, 3)
    assert parse_subgroup(d3, "ar0+r1").members == tuple(range(6))
    with pytest.raises(GroupSpecError):
        parse_subgroup(d3, "")


def test_left_cosets(d3):
    """Test coset ids follow the least element of each coset."""
    rotations = left_cosets(d3, parse_subgroup(d3, "r1"))
    assert rotations.coset_count == 2
    assert rotations.coset_of == (0, 0, 0, 1, 1, 1)
    reflections = left_cosets(d3, parse_subgroup(d3, "ar0"))
    assert reflections.coset_count == 3
    assert sorted(len(b) for b in reflections.blocks()) == [2, 2, 2]
    assert reflections.same(0, 3)


def test_cosets_intersect_trivially(d3, z4):
    """Test the trivial coset intersection condition."""
    assert cosets_intersect_trivially(
        d3, parse_subgroup(d3, "r1"), parse_subgroup(d3, "ar0")
    )
    two = parse_subgroup(z4, "2")
    assert not cosets_intersect_trivially(z4, two, two)


def test_to_dict_shape():
    """Test the exported table layout."""
    data = dihedral_group(2).to_dict()
    assert data["order"] == 4
    assert data["names"] == ["r0", "r1", "ar0", "ar1"]
    assert len(data["mul_table"]) == 4
