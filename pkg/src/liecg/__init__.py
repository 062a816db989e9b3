"""Exact weight systems and Clebsch-Gordan decompositions for the simple
Lie algebras A-G."""

from .exactnum import (
    ONE,
    ZERO,
    FieldElem,
    FieldSqrtError,
    SqrtSum,
    field,
    field_sqrt,
    gcd_of_fields,
    number,
    parse_field,
)
from .liealg import (
    ConsistencyError,
    LieAlgebra,
    WeightRecord,
    adjoint_hw,
    cartan,
    complete_descent,
    freudenthal,
    highest_root,
    level_vector,
    lowest_root_label,
    positive_roots,
    root_weights,
    weyl_dim,
)
from .linalg import LabeledVector
from .irrep import (
    ImportedIrrepData,
    InvalidImportError,
    Irrep,
    Ket,
    UnsupportedIrrepError,
    lower,
    new_generic_irrep,
    new_imported_irrep,
    scalar_product,
    scp_zero_weights,
)
from .tensor import (
    Decomposition,
    DecompositionError,
    ProductIrrep,
    basis_product,
    check_dims,
    decompose,
    descend_irrep,
    dominant_weights,
    prepare,
    prepare_with_states,
    product_lower,
    product_scp,
    product_weight,
    render_states,
    result,
)
from .multitensor import (
    TensorNode,
    chbasis,
    chbasis_list,
    comm,
    e_lower,
    expand,
    filter_factor,
    is_sym,
    otimes,
    scalar_products,
    scale,
    scp,
    tensor_coeff,
    tree_leaves,
    tree_str,
    untree,
    wrap,
)

__all__ = [
    "ONE",
    "ZERO",
    "FieldElem",
    "FieldSqrtError",
    "SqrtSum",
    "field",
    "field_sqrt",
    "gcd_of_fields",
    "number",
    "parse_field",
    "ConsistencyError",
    "LieAlgebra",
    "WeightRecord",
    "adjoint_hw",
    "cartan",
    "complete_descent",
    "freudenthal",
    "highest_root",
    "level_vector",
    "lowest_root_label",
    "positive_roots",
    "root_weights",
    "weyl_dim",
    "LabeledVector",
    "ImportedIrrepData",
    "InvalidImportError",
    "Irrep",
    "Ket",
    "UnsupportedIrrepError",
    "lower",
    "new_generic_irrep",
    "new_imported_irrep",
    "scalar_product",
    "scp_zero_weights",
    "Decomposition",
    "DecompositionError",
    "ProductIrrep",
    "basis_product",
    "check_dims",
    "decompose",
    "descend_irrep",
    "dominant_weights",
    "prepare",
    "prepare_with_states",
    "product_lower",
    "product_scp",
    "product_weight",
    "render_states",
    "result",
    "TensorNode",
    "chbasis",
    "chbasis_list",
    "comm",
    "e_lower",
    "expand",
    "filter_factor",
    "is_sym",
    "otimes",
    "scalar_products",
    "scale",
    "scp",
    "tensor_coeff",
    "tree_leaves",
    "tree_str",
    "untree",
    "wrap",
]
