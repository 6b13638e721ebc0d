"""Finite groups, their heap structure, subgroups and left cosets."""

from .group import (
    CosetPartition,
    FiniteGroup,
    Subgroup,
    cosets_intersect_trivially,
    cyclic_group,
    dihedral_group,
    direct_product,
    generated_subgroup,
    heap,
    heap_is_para_associative,
    heap_is_tsd,
    left_cosets,
    make_group,
    parse_subgroup,
    tsd,
)

__all__ = [
    "CosetPartition",
    "FiniteGroup",
    "Subgroup",
    "cosets_intersect_trivially",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "generated_subgroup",
    "heap",
    "heap_is_para_associative",
    "heap_is_tsd",
    "left_cosets",
    "make_group",
    "parse_subgroup",
    "tsd",
]
