"""Hochschild homology and K-theory invariants of Leavitt path algebras."""

from .exactlin import FGAbGroup, coker_group, ker_rank, quotient_by_element, rank, smith_normal_form
from .hochschild import (
    OMEGA,
    ExtNat,
    GradedHHTable,
    HHProfile,
    PreconditionError,
    hh,
    hh_acyclic,
    hh_graded,
    nonvanishing_witness,
    profile_of,
    total_profile,
)
from .ktheory import KResult, k_groups, k_tensor_L2, prop63_check
from .kunneth import LINF, TensorSpec, Verdict, distinguish, infinite_tensor_profile, kunneth_product, top_degree
from .paths import Path, WeightLayer, closed_paths, is_primitive, orbit_count_burnside, paths_to, primitive_witness
from .quiver import (
    AdjacencyData,
    Arrow,
    Quiver,
    adjacency,
    cycle,
    e_n,
    eliminate_proper_sources,
    has_nontrivial_closed_path,
    is_acyclic,
    line,
    parse_quiver,
    rose,
    sinks,
    sources,
    standard_quiver,
)

__version__ = "0.1.0"
