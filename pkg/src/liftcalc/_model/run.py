from typing import Tuple

from .._error import ParameterError
from .serialise import StrEnum


class Command(StrEnum):
    """Command line commands."""

    compute = "compute"
    verify = "verify"
    table = "table"


class OutputFormat(StrEnum):
    """Report output formats."""

    json = "json"
    csv = "csv"


class Identity(StrEnum):
    """Identities checked by the verification suite."""

    field_axioms = "field-axioms"
    max_decomposition = "max-decomposition"
    matrix_inverse = "matrix-inverse"
    volume_telescoping = "volume-telescoping"
    split_linearity = "split-linearity"
    refinement_stability = "refinement-stability"
    phi_constants = "phi-constants"
    phi_scaling = "phi-scaling"
    projection_max = "projection-max"
    phi_bound = "phi-bound"
    distance_product = "distance-product"
    shallow_product = "shallow-product"
    shallow_route = "shallow-route"
    unit_distance = "unit-distance"
    coset_sum = "coset-sum"
    ramified_chain = "ramified-chain"
    gl2_vy = "gl2-vy"
    gl2_pairing = "gl2-pairing"
    omega_terms = "omega-terms"
    pd_identity = "pd-identity"
    infinite_detection = "infinite-detection"
    integrality = "integrality"
    all = "all"


def parse_levels(text: str) -> Tuple[int, int]:
    """
    Parse a level range ``a..b``, both ends included.

    Raises
    ------
    ParameterError
        if the range is malformed or decreasing
    """
    try:
        low, high = (int(part) for part in text.split(".."))
    except ValueError as e:
        msg = f"Invalid level range: expected format `a..b`, got {text!r}!"
        raise ParameterError(msg, "levels", text) from e
    if low < 0 or high < low:
        raise ParameterError(f"Invalid level range {text!r}!", "levels", text)
    return low, high
