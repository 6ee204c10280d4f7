"""Radical idealizer chains of Z_(p)-orders, computed exactly."""

from .algcore import (
    Algebra,
    Lattice,
    OrderLat,
    SymForm,
    center,
    conductor,
    conductor_direct,
    contains,
    dual_lattice,
    element_mul,
    idealizer,
    index_val,
    is_order,
    lattice_eq,
    lattice_from_generators,
    lattice_intersect,
    lattice_product,
    lattice_sum,
    left_order,
    make_algebra,
    make_form,
    member,
    multiplier_order_direct,
    right_order,
)
from .chain import ChainReport, ChainStep, radical_idealizer_step, run_chain, verify_symmetric_theorems
from .exactla import FpMat, det_val, fp_kernel, local_hnf, pval, rat_inverse
from .grouprings import (
    GroupTable,
    abelian_invariants,
    abelian_lrad,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    frattini_index,
    from_table,
    group_ring,
    homs_to_cyclic_p,
    parse_group,
    predicted_delta,
    predicted_gamma,
    quaternion8,
)
from .radical import FpAlgebra, brute_force_radical, fp_radical, is_hereditary, order_radical

__version__ = "0.1.0"
