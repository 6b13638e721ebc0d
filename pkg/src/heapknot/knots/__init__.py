"""Framed braid links, heap colorings and ribbon cocycle state sums."""

from .coloring import (
    Coloring,
    ComponentColor,
    SiteRecord,
    WirtingerImages,
    apply_crossing,
    classify,
    coloring_tallies,
    count_by_relators,
    count_colorings,
    dihedral_torus_prediction,
    enumerate_colorings,
    propagate,
    state_from_index,
    state_index,
    wirtinger_images,
)
from .link import (
    BraidWord,
    CrossingSite,
    FramedLink,
    PretzelLink,
    SiteKind,
    apply_braid_relation,
    braid_relation_sites,
    crossing_sites,
    cyclic_rotate,
    insert_cancelling_pair,
    parse_link,
    pretzel,
    relocate_kinks,
    telephone_cord,
    torus_link,
)
from .state_sum import (
    InvariantValue,
    coloring_key,
    cord_prediction,
    invariant,
    site_weight,
    torus_phi_prediction,
)

__all__ = [
    "BraidWord",
    "Coloring",
    "ComponentColor",
    "CrossingSite",
    "FramedLink",
    "InvariantValue",
    "PretzelLink",
    "SiteKind",
    "SiteRecord",
    "WirtingerImages",
    "apply_braid_relation",
    "apply_crossing",
    "braid_relation_sites",
    "classify",
    "coloring_key",
    "coloring_tallies",
    "cord_prediction",
    "count_by_relators",
    "count_colorings",
    "crossing_sites",
    "cyclic_rotate",
    "dihedral_torus_prediction",
    "enumerate_colorings",
    "insert_cancelling_pair",
    "invariant",
    "parse_link",
    "pretzel",
    "propagate",
    "relocate_kinks",
    "site_weight",
    "state_from_index",
    "state_index",
    "telephone_cord",
    "torus_link",
    "torus_phi_prediction",
    "wirtinger_images",
]
