from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

from .._error import InversionOfZero
from .residue import FieldParams, QuadExtElem


@dataclass(frozen=True)
class AtLeast:
    """
    Unresolved valuation.

    The true valuation is at least ``bound``, digits beyond are not known.
    """

    bound: int

    def __str__(self):
        return f">={self.bound}"


Valuation = Union[int, AtLeast]


def is_resolved(v: Valuation) -> bool:
    """Valuation is a known integer."""
    return not isinstance(v, AtLeast)


def lower_bound(v: Valuation) -> int:
    """Known lower bound of a valuation, the valuation itself if resolved."""
    return v.bound if isinstance(v, AtLeast) else v


def resolved_below(v: Valuation, bound: int) -> Optional[bool]:
    """
    Decide ``v < bound``.

    Returns ``None`` when digits beyond precision would be needed.
    """
    if isinstance(v, AtLeast):
        return False if v.bound >= bound else None
    return v < bound


@dataclass(frozen=True)
class SeriesElem:
    """
    Truncated Laurent series in π over the quadratic residue field.

    The element is ``Σ coeffs[i] * π^(v_min + i)`` known modulo π^precision.
    Instances are normalised: the leading coefficient is nonzero,
    or there are no coefficients and ``v_min == precision``
    for an element that is zero to precision.
    Construct with :func:`make_series` or the class methods.
    """

    field: FieldParams
    v_min: int
    coeffs: Tuple[QuadExtElem, ...]
    precision: int

    def __repr__(self):
        from .._convert import to_series_literal

        options = [f"{to_series_literal(self)!r}", f"precision={self.precision}"]
        return type(self).__name__ + "(" + ", ".join(options) + ")"

    @classmethod
    def zero(cls, field: FieldParams, precision: Optional[int] = None) -> "SeriesElem":
        """Zero to precision."""
        precision = field.precision if precision is None else precision
        return cls(field, precision, (), precision)

    @classmethod
    def from_int(
        cls, field: FieldParams, value: int, precision: Optional[int] = None
    ) -> "SeriesElem":
        """Constant series of a prime field residue."""
        return make_series(field, 0, [field.element(value)], precision)

    @classmethod
    def from_residue(
        cls, field: FieldParams, value: QuadExtElem, precision: Optional[int] = None
    ) -> "SeriesElem":
        """Constant series of a quadratic residue."""
        return make_series(field, 0, [field.element(*value)], precision)

    @classmethod
    def uniformizer_power(
        cls, field: FieldParams, exponent: int, precision: Optional[int] = None
    ) -> "SeriesElem":
        """Series π^exponent."""
        return make_series(field, exponent, [field.one], precision)

    @classmethod
    def delta(cls, field: FieldParams, precision: Optional[int] = None) -> "SeriesElem":
        """Constant series δ."""
        return make_series(field, 0, [field.delta], precision)

    @classmethod
    def from_digits(
        cls,
        field: FieldParams,
        digits: Sequence[int],
        shift: int = 0,
        precision: Optional[int] = None,
    ) -> "SeriesElem":
        """F-rational series from prime field digits starting at π^shift."""
        return make_series(field, shift, [field.element(d) for d in digits], precision)

    @property
    def is_zero(self) -> bool:
        """Element is zero to precision."""
        return not self.coeffs

    @property
    def is_rational(self) -> bool:
        """All known digits lie in the prime field."""
        return all(c[1] == 0 for c in self.coeffs)

    def digit(self, exponent: int) -> QuadExtElem:
        """Coefficient of π^exponent, zero below the leading term."""
        i = exponent - self.v_min
        if exponent >= self.precision:
            raise IndexError(
                f"Digit {exponent} is beyond precision {self.precision} of {self!r}!"
            )
        if i < 0 or i >= len(self.coeffs):
            return QuadExtElem(0, 0)
        return self.coeffs[i]

    def truncate(self, precision: int) -> "SeriesElem":
        """Forget digits at and beyond ``precision``."""
        if precision >= self.precision:
            return self
        return make_series(self.field, self.v_min, self.coeffs, precision)

    def __add__(self, other: Union["SeriesElem", int]) -> "SeriesElem":
        return series_add(self, _coerce(other, self))

    __radd__ = __add__

    def __sub__(self, other: Union["SeriesElem", int]) -> "SeriesElem":
        return series_sub(self, _coerce(other, self))

    def __rsub__(self, other: Union["SeriesElem", int]) -> "SeriesElem":
        return series_sub(_coerce(other, self), self)

    def __neg__(self) -> "SeriesElem":
        return series_neg(self)

    def __mul__(self, other: Union["SeriesElem", int]) -> "SeriesElem":
        if isinstance(other, int):
            return series_scale(self, other)
        if not isinstance(other, SeriesElem):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "SeriesElem":
        """Multiplicative inverse, see :func:`series_inv`."""
        return series_inv(self)

    @property
    def val(self) -> Valuation:
        """π-adic valuation, see :func:`series_val`."""
        return series_val(self)


def _coerce(other: Union[SeriesElem, int], like: SeriesElem) -> SeriesElem:
    if isinstance(other, SeriesElem):
        return other
    if isinstance(other, int):
        return SeriesElem.from_int(like.field, other, like.precision)
    raise TypeError(f"Cannot combine SeriesElem with {type(other).__name__}!")


def make_series(
    field: FieldParams,
    start: int,
    coeffs: Iterable[QuadExtElem],
    precision: Optional[int] = None,
) -> SeriesElem:
    """
    Construct a normalised series.

    Parameters
    ----------
    field
        residue field parameters
    start
        exponent of the first coefficient
    coeffs
        coefficients from π^start upwards, digits at or beyond
        precision are discarded
    precision
        absolute precision, the field precision if not specified
    """
    precision = field.precision if precision is None else precision
    digits = list(coeffs)[: max(precision - start, 0)]

    lead = 0
    while lead < len(digits) and digits[lead] == (0, 0):
        lead += 1

    if lead == len(digits):
        return SeriesElem(field, precision, (), precision)

    digits = [QuadExtElem(*d) for d in digits[lead:]]
    digits += [QuadExtElem(0, 0)] * (precision - start - lead - len(digits))
    return SeriesElem(field, start + lead, tuple(digits), precision)


def series_val(x: SeriesElem) -> Valuation:
    """
    π-adic valuation.

    Returns :class:`AtLeast` with the precision when every known digit vanishes.
    """
    if x.is_zero:
        return AtLeast(x.precision)
    return x.v_min


def series_add(x: SeriesElem, y: SeriesElem) -> SeriesElem:
    """Sum, known to the smaller of the two precisions."""
    f = x.field
    precision = min(x.precision, y.precision)
    start = min(x.v_min, y.v_min)
    q = f.q
    coeffs = []
    for e in range(start, precision):
        a = x.digit(e)
        b = y.digit(e)
        coeffs.append(QuadExtElem((a[0] + b[0]) % q, (a[1] + b[1]) % q))
    return make_series(f, start, coeffs, precision)


def series_neg(x: SeriesElem) -> SeriesElem:
    """Additive inverse."""
    f = x.field
    return make_series(f, x.v_min, [f.neg(c) for c in x.coeffs], x.precision)


def series_sub(x: SeriesElem, y: SeriesElem) -> SeriesElem:
    """Difference."""
    return series_add(x, series_neg(y))


def series_scale(x: SeriesElem, k: int) -> SeriesElem:
    """Multiply by an integer read as a prime field scalar."""
    f = x.field
    if k % f.q == 0:
        return SeriesElem.zero(f, x.precision)
    return make_series(f, x.v_min, [f.scale(c, k) for c in x.coeffs], x.precision)


def series_shift(x: SeriesElem, k: int) -> SeriesElem:
    """Multiply by π^k, shifting the precision along."""
    return SeriesElem(x.field, x.v_min + k, x.coeffs, x.precision + k)


def series_mul(x: SeriesElem, y: SeriesElem) -> SeriesElem:
    """
    Product.

    The result is known modulo π^min(val x + prec y, val y + prec x).
    """
    f = x.field
    precision = min(x.v_min + y.precision, y.v_min + x.precision)
    if x.is_zero or y.is_zero:
        return SeriesElem.zero(f, precision)

    q = f.q
    nu = f.nonsquare
    xs = x.coeffs
    ys = y.coeffs
    n = precision - x.v_min - y.v_min
    coeffs = []
    for k in range(n):
        c = d = 0
        for i in range(k + 1):
            a = xs[i]
            b = ys[k - i]
            c += a[0] * b[0] + nu * a[1] * b[1]
            d += a[0] * b[1] + a[1] * b[0]
        coeffs.append(QuadExtElem(c % q, d % q))
    return make_series(f, x.v_min + y.v_min, coeffs, precision)


def series_inv(x: SeriesElem) -> SeriesElem:
    """
    Multiplicative inverse.

    An element of valuation v and precision N has an inverse
    known modulo π^(N - 2v).

    Raises
    ------
    InversionOfZero
        if x is zero to precision
    """
    if x.is_zero:
        raise InversionOfZero(f"Cannot invert {x!r}, it is zero to precision!")

    f = x.field
    q = f.q
    nu = f.nonsquare
    u = x.coeffs
    u0_inv = f.inv(u[0])
    w = [u0_inv]
    for n in range(1, len(u)):
        c = d = 0
        for k in range(1, n + 1):
            a = u[k]
            b = w[n - k]
            c += a[0] * b[0] + nu * a[1] * b[1]
            d += a[0] * b[1] + a[1] * b[0]
        w.append(f.neg(f.mul(u0_inv, QuadExtElem(c % q, d % q))))
    return make_series(f, -x.v_min, w, x.precision - 2 * x.v_min)


def frobenius(x: SeriesElem) -> SeriesElem:
    """Conjugate every coefficient, fixing exactly the F-rational series."""
    f = x.field
    return SeriesElem(f, x.v_min, tuple(f.frobenius(c) for c in x.coeffs), x.precision)
