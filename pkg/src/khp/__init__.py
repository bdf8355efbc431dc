"""Arc-diagram algebras of type P and their module combinatorics."""

from .diagrams import (
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    block_signature,
    cap_from_weight,
    compare_weights,
    cup_from_weight,
    e_diagram,
    is_orientable_K,
    is_orientable_Kn,
    trace_components,
    weight_from_cap,
    weight_from_cup,
)
from .orientation import (
    OrientedCircleDiagram,
    X_set,
    Y_set,
    delta_orientations,
    nabla_orientations,
    orientation_of,
    triangular_factor,
)
from .algebra import (
    AlgebraElement,
    compatible_weights,
    hom_dim,
    involution_star,
    multiply,
)
from .matchings import (
    CrossinglessMatching,
    StackedDiagram,
    lred,
    reduce_layers,
    special_matching,
    stacked_orientable,
    stacked_orientation,
    ured,
)
from .tableaux import (
    UpDownTableau,
    enumerate_udt,
    reduce_residue_seq,
    residue_seq,
    seq_realizable_empty_shape,
    sg_hom_dim,
)
from .modules import (
    ModuleRealization,
    build_costandard,
    build_projective,
    build_simple,
    build_standard,
    delta_flag,
    radical_filtration,
    socle_filtration,
    theta_on_costandard,
    theta_on_projective,
    theta_on_simple,
    theta_on_standard,
)
from .applications import (
    build_quiver,
    ext1_dim,
    irreducible_summand_weights,
    is_primitive,
    koszulity_report,
    nonsplittable_oracle,
    simple_dual,
)

__version__ = "0.1.0"
