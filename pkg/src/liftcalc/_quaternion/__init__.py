from .element import (
    QuatElem,
    main_involution,
    quat_add,
    quat_equal,
    quat_inv,
    quat_mul,
    quat_neg,
    quat_sub,
    quat_val,
    reduced_norm,
    reduced_trace,
)
from .matrix import Mat2D, eigen_matrix, eigen_matrix_inverse
from .order import (
    Extension,
    Membership,
    OrderSpec,
    coset_representatives,
    expected_index,
    index_of_order,
    is_in_order,
    is_normalizer_element,
    pm_decompose,
    sigma_element,
    unit_residues,
)
