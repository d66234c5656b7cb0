"""Exact arithmetic for split semisimple Lie algebras: root systems,
highest weight modules, character lattices between weights and roots,
tensor-relation grading groups, and the isogeny classification atlas.

Everything is integer arithmetic; there are no floating point paths and
no external dependencies.
"""

from .classify import (
    AtlasEntry,
    DiagramInfo,
    GradingSummary,
    SemisimpleDecomposition,
    admissible_irreducible_types,
    atlas_to_json,
    build_atlas,
    build_entry,
    decompose_semisimple,
    entry_to_json,
    hasse_edges,
    label_diagram,
)
from .grading import (
    GradingPresentation,
    TensorRelation,
    generate_relations,
    grading_class,
    grading_presentation,
    matches_fundamental_group,
    restrict_relations,
    tensor_equivalent,
    universal_grading_group,
)
from .lattice import (
    ComponentBlock,
    Diagram,
    EnumerationCapError,
    FiniteAbelianGroup,
    Subgroup,
    WeightClassData,
    adjoint_diagram,
    center_char_group,
    cokernel,
    diagrams,
    enumerate_subgroups,
    full_subgroup,
    fundamental_group,
    hermite_basis,
    irreducible_components,
    isogeny_order,
    simply_connected_diagram,
    smith_normal_form,
    subgroup_from_generators,
    subgroup_invariant_factors,
    trivial_subgroup,
    weight_class_data,
    weight_in_lattice,
)
from .repring import (
    clebsch_gordan_sl2,
    dominant_weight_multiplicities,
    dominant_weights_up_to,
    sorted_decomposition,
    tensor_decompose,
    weight_multiplicities,
    weyl_dim,
)
from .rootsys import (
    CartanType,
    CartanTypeError,
    PositiveRootData,
    RootSystem,
    Weight,
    build_root_system,
    cartan_matrix,
    dominant_representative,
    format_weight,
    is_dominant,
    parse_cartan_type,
    parse_weight,
    rho,
    simple_norms,
    simple_reflection,
    weyl_orbit,
)

__all__ = [
    "AtlasEntry",
    "CartanType",
    "CartanTypeError",
    "ComponentBlock",
    "Diagram",
    "DiagramInfo",
    "EnumerationCapError",
    "FiniteAbelianGroup",
    "GradingPresentation",
    "GradingSummary",
    "PositiveRootData",
    "RootSystem",
    "SemisimpleDecomposition",
    "Subgroup",
    "TensorRelation",
    "Weight",
    "WeightClassData",
    "adjoint_diagram",
    "admissible_irreducible_types",
    "atlas_to_json",
    "build_atlas",
    "build_entry",
    "build_root_system",
    "cartan_matrix",
    "center_char_group",
    "clebsch_gordan_sl2",
    "cokernel",
    "decompose_semisimple",
    "diagrams",
    "dominant_representative",
    "dominant_weight_multiplicities",
    "dominant_weights_up_to",
    "enumerate_subgroups",
    "entry_to_json",
    "format_weight",
    "full_subgroup",
    "fundamental_group",
    "generate_relations",
    "grading_class",
    "grading_presentation",
    "hasse_edges",
    "hermite_basis",
    "irreducible_components",
    "is_dominant",
    "isogeny_order",
    "label_diagram",
    "matches_fundamental_group",
    "parse_cartan_type",
    "parse_weight",
    "restrict_relations",
    "rho",
    "simple_norms",
    "simple_reflection",
    "simply_connected_diagram",
    "smith_normal_form",
    "sorted_decomposition",
    "subgroup_from_generators",
    "subgroup_invariant_factors",
    "tensor_decompose",
    "tensor_equivalent",
    "trivial_subgroup",
    "universal_grading_group",
    "weight_class_data",
    "weight_in_lattice",
    "weight_multiplicities",
    "weyl_dim",
    "weyl_orbit",
]

__version__ = "0.1.0"
