import re
from typing import List, Optional

from ._error import ConversionError
from ._field import FieldParams, QuadExtElem, SeriesElem, make_series
from ._quaternion import QuatElem

# Coefficient "c", "d*j", "c+d*j" or "c-d*j" with decimal integers
_coefficient = re.compile(
    r"^\s*(?P<c>-?\d+)?\s*(?:(?P<sign>[+-])?\s*(?P<d>\d+)\s*\*\s*j)?\s*$"
)
_series = re.compile(r"^\s*(?P<shift>-?\d+)\s*:(?P<coeffs>.*)$")


def parse_coefficient(text: str, field: FieldParams) -> QuadExtElem:
    """
    Parse a residue ``c + d*j``, where ``j`` denotes δ.

    Raises
    ------
    ConversionError
        On invalid format.
    """
    match = _coefficient.match(text)
    if match is None or (match["c"] is None and match["d"] is None):
        msg = f'Invalid coefficient: expected format "c+d*j", got {text!r}!'
        raise ConversionError(msg)

    if match["c"] is not None and match["d"] is not None and match["sign"] is None:
        msg = f'Invalid coefficient: missing sign before "*j" in {text!r}!'
        raise ConversionError(msg)

    c = int(match["c"]) if match["c"] is not None else 0
    d = int(match["d"]) if match["d"] is not None else 0
    if match["sign"] == "-":
        d = -d
    return field.element(c, d)


def format_coefficient(value: QuadExtElem) -> str:
    """Render a residue as ``c``, ``d*j`` or ``c+d*j``."""
    c, d = value
    if d == 0:
        return str(c)
    if c == 0:
        return f"{d}*j"
    return f"{c}+{d}*j"


def from_series_literal(
    text: str, field: FieldParams, precision: Optional[int] = None
) -> SeriesElem:
    """
    Parse a series literal ``shift:c0+d0*j,c1+d1*j,...``.

    The literal denotes ``Σ (c_i + d_i δ) π^(shift + i)``.

    Parameters
    ----------
    text
        literal to parse
    field
        residue field parameters
    precision
        absolute precision of the result, the field precision if not specified

    Returns
    -------
    SeriesElem
        parsed series

    Raises
    ------
    ConversionError
        On invalid format, or when nonzero digits reach the precision.
    """
    precision = field.precision if precision is None else precision
    match = _series.match(text)
    if match is None:
        msg = f'Invalid series: expected format "shift:c0,c1,...", got {text!r}!'
        raise ConversionError(msg)

    shift = int(match["shift"])
    coeffs: List[QuadExtElem] = []
    if match["coeffs"].strip():
        coeffs = [parse_coefficient(c, field) for c in match["coeffs"].split(",")]

    for i, c in enumerate(coeffs):
        if shift + i >= precision and c != (0, 0):
            msg = (
                f"Invalid series: digit at π^{shift + i} is beyond "
                f"precision {precision} in {text!r}!"
            )
            raise ConversionError(msg)
    return make_series(field, shift, coeffs, precision)


def to_series_literal(x: SeriesElem) -> str:
    """Render a series literal, trailing zero digits omitted."""
    coeffs = list(x.coeffs)
    while coeffs and coeffs[-1] == (0, 0):
        coeffs.pop()
    if not coeffs:
        return "0:0"
    return f"{x.v_min}:" + ",".join(format_coefficient(c) for c in coeffs)


def from_quat_literal(
    text: str, field: FieldParams, precision: Optional[int] = None
) -> QuatElem:
    """
    Parse a quaternion literal ``a=<series>;b=<series>``.

    Either part may be omitted, in which case it is zero.

    Raises
    ------
    ConversionError
        On invalid format, unknown or repeated parts.
    """
    parts = {}
    for item in text.split(";"):
        if not item.strip():
            continue
        try:
            key, value = item.split("=", 1)
        except ValueError as e:
            msg = f'Invalid quaternion: expected format "a=...;b=...", got {text!r}!'
            raise ConversionError(msg) from e

        key = key.strip()
        if key not in ("a", "b") or key in parts:
            msg = f"Invalid quaternion: unexpected part {key!r} in {text!r}!"
            raise ConversionError(msg)
        parts[key] = from_series_literal(value, field, precision)

    if not parts:
        raise ConversionError(f"Invalid quaternion: empty literal {text!r}!")

    precision = field.precision if precision is None else precision
    zero = SeriesElem.zero(field, precision)
    return QuatElem(parts.get("a", zero), parts.get("b", zero))


def to_quat_literal(x: QuatElem) -> str:
    """Render a quaternion literal."""
    return f"a={to_series_literal(x.a)};b={to_series_literal(x.b)}"
