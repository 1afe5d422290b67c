"""Quiddity cycles, frieze patterns, rank-two root posets and affine
arrangements of imaginary type A_1^(1), in exact integer arithmetic."""

from .quiddity import (
    Triangulation,
    canonical_rotation,
    catalan,
    cycle_to_triangulation,
    ears,
    enumerate_cycles,
    enumerate_rotation_classes,
    eta,
    eta_product,
    insert_ear,
    is_fan_shaped,
    is_quiddity_cycle,
    psi,
    psi_inv,
    remove_ear,
    reverse,
    rotate,
    triangulation_to_cycle,
)
from .frieze import (
    FriezeTable,
    classify_dense,
    crossing_index,
    frieze_pattern,
    is_dense,
    m_set,
    m_sizes,
    phi_row,
)
from .rank2roots import (
    RootSystem2,
    maximal_roots,
    poset_leq,
    positive_roots,
    unique_max_chamber,
)

__version__ = "0.1.0"
