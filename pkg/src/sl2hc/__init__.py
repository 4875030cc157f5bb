"""Exact computations with Harish-Chandra modules for SL(2,R).

The package works in the Grothendieck group of finite-length modules:
tensor decompositions with finite-dimensional modules, composition series
of principal series, K-type asymptotics, the lattice of thick
tensor-submodules, and an independent matrix oracle cross-checking every
closed-form answer.
"""

from .core import (
    ASCone,
    DiscreteSeries,
    FinDim,
    InfChar,
    IrreducibleClass,
    KTypeFunction,
    PrincipalIrr,
    Scalar,
    VirtualModule,
    as_cone,
    as_cone_module,
    as_scalar,
    casimir_value,
    class_sort_key,
    display_sort_key,
    format_class,
    format_scalar,
    format_virtual_module,
    inf_char,
    is_integer,
    ktype_function,
    module_ktype_function,
    parse_class,
    principal_is_irreducible,
    principal_iso_equal,
)
from .tensor import (
    Irr,
    LengthTwo,
    PsIrreducible,
    PsNegativeInt,
    PsPositiveInt,
    PsSplitLimit,
    ReducibleSeries,
    SeriesStructure,
    Summand,
    block_parameter,
    clebsch_gordan,
    decomposition_semisimplification,
    decomposition_to_dict,
    ds_tensor,
    format_summand,
    format_series_block,
    grothendieck_tensor,
    ktype_conservation_holds,
    primary_split,
    ps_structure,
    ps_tensor,
    series_semisimplification,
    structure_semisimplification,
    summand_semisimplification,
    tensor_with_finite,
    weyl_signed_tensor,
)
from .oracle import (
    CasimirReport,
    FinDimRealization,
    PrincipalSeriesRealization,
    UnexpectedEigenvalueError,
    VerificationVerdict,
    casimir_matrix,
    casimir_on_symmetric_power,
    casimir_report,
    default_window,
    reducibility_points,
    report_to_dict,
    verdict_to_dict,
    verify_tensor,
)
from .lattice import (
    ANTIHOL_POINT,
    FD_POINT,
    HOL_POINT,
    ClassPoint,
    PosetOps,
    class_closure,
    classify_irreducible,
    closure,
    cover_edges,
    enumerate_submodule_sets,
    format_point,
    format_point_set,
    generated_submodule,
    irreducible_closed_sets,
    orbit_label,
    point_sort_key,
    ps_class_equal,
    ps_class_point,
    reduce_to_base,
    specialization_edges,
    sub_poset_ops,
    is_valid_submodule_set,
)
from .cli import main

__version__ = "0.1.0"

__all__ = [
    "ASCone",
    "ANTIHOL_POINT",
    "CasimirReport",
    "ClassPoint",
    "DiscreteSeries",
    "FD_POINT",
    "FinDim",
    "FinDimRealization",
    "HOL_POINT",
    "InfChar",
    "Irr",
    "IrreducibleClass",
    "KTypeFunction",
    "LengthTwo",
    "PosetOps",
    "PrincipalIrr",
    "PrincipalSeriesRealization",
    "PsIrreducible",
    "PsNegativeInt",
    "PsPositiveInt",
    "PsSplitLimit",
    "ReducibleSeries",
    "Scalar",
    "SeriesStructure",
    "Summand",
    "UnexpectedEigenvalueError",
    "VerificationVerdict",
    "VirtualModule",
    "as_cone",
    "as_cone_module",
    "as_scalar",
    "block_parameter",
    "casimir_matrix",
    "casimir_on_symmetric_power",
    "casimir_report",
    "casimir_value",
    "class_closure",
    "class_sort_key",
    "classify_irreducible",
    "clebsch_gordan",
    "closure",
    "cover_edges",
    "decomposition_semisimplification",
    "decomposition_to_dict",
    "default_window",
    "display_sort_key",
    "ds_tensor",
    "enumerate_submodule_sets",
    "format_class",
    "format_point",
    "format_point_set",
    "format_scalar",
    "format_series_block",
    "format_summand",
    "format_virtual_module",
    "generated_submodule",
    "grothendieck_tensor",
    "inf_char",
    "irreducible_closed_sets",
    "is_integer",
    "is_valid_submodule_set",
    "ktype_conservation_holds",
    "ktype_function",
    "main",
    "module_ktype_function",
    "orbit_label",
    "parse_class",
    "point_sort_key",
    "primary_split",
    "principal_is_irreducible",
    "principal_iso_equal",
    "ps_class_equal",
    "ps_class_point",
    "ps_structure",
    "ps_tensor",
    "reduce_to_base",
    "reducibility_points",
    "report_to_dict",
    "series_semisimplification",
    "specialization_edges",
    "structure_semisimplification",
    "sub_poset_ops",
    "summand_semisimplification",
    "tensor_with_finite",
    "verdict_to_dict",
    "verify_tensor",
    "weyl_signed_tensor",
]
