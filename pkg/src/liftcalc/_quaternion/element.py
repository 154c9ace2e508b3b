from dataclasses import dataclass
from typing import Optional, Union

from .._error import InversionOfZero
from .._field import (
    AtLeast,
    FieldParams,
    SeriesElem,
    Valuation,
    frobenius,
    series_add,
    series_inv,
    series_mul,
    series_neg,
    series_scale,
    series_shift,
    series_sub,
    series_val,
)


@dataclass(frozen=True)
class QuatElem:
    """
    Element ``a + b*Π`` of the quaternion division algebra D.

    Both coordinates lie in the unramified quadratic extension of F,
    with Π² = π and Π*u = frobenius(u)*Π.
    """

    a: SeriesElem
    b: SeriesElem

    def __repr__(self):
        from .._convert import to_quat_literal

        return type(self).__name__ + f"({to_quat_literal(self)!r})"

    @classmethod
    def from_series(cls, a: SeriesElem, b: Optional[SeriesElem] = None) -> "QuatElem":
        """Quaternion with the given coordinates, ``b`` zero if not specified."""
        if b is None:
            b = SeriesElem.zero(a.field, a.precision)
        return cls(a, b)

    @classmethod
    def from_int(
        cls, field: FieldParams, value: int, precision: Optional[int] = None
    ) -> "QuatElem":
        """Central element of the prime field."""
        return cls.from_series(SeriesElem.from_int(field, value, precision))

    @classmethod
    def zero(cls, field: FieldParams, precision: Optional[int] = None) -> "QuatElem":
        """Zero to precision."""
        return cls.from_series(SeriesElem.zero(field, precision))

    @classmethod
    def delta(cls, field: FieldParams, precision: Optional[int] = None) -> "QuatElem":
        """The unramified unit δ."""
        return cls.from_series(SeriesElem.delta(field, precision))

    @classmethod
    def Pi(cls, field: FieldParams, precision: Optional[int] = None) -> "QuatElem":
        """The uniformizer Π of the maximal order."""
        return cls.Pi_power(field, 1, precision)

    @classmethod
    def Pi_power(
        cls, field: FieldParams, exponent: int, precision: Optional[int] = None
    ) -> "QuatElem":
        """Π^exponent for any integer exponent, π^⌊n/2⌋ Π^(n mod 2)."""
        half, odd = divmod(exponent, 2)
        power = SeriesElem.uniformizer_power(field, half, precision)
        zero = SeriesElem.zero(field, power.precision)
        return cls(zero, power) if odd else cls(power, zero)

    @property
    def field(self) -> FieldParams:
        """Residue field parameters."""
        return self.a.field

    @property
    def precision(self) -> int:
        """Precision in v_D units, the valuation of the unknown tail."""
        return min(2 * self.a.precision, 2 * self.b.precision + 1)

    @property
    def is_zero(self) -> bool:
        """Element is zero to precision."""
        return self.a.is_zero and self.b.is_zero

    @property
    def val(self) -> Valuation:
        """Valuation v_D, see :func:`quat_val`."""
        return quat_val(self)

    def __add__(self, other: "QuatElem") -> "QuatElem":
        return quat_add(self, other)

    def __sub__(self, other: "QuatElem") -> "QuatElem":
        return quat_sub(self, other)

    def __neg__(self) -> "QuatElem":
        return quat_neg(self)

    def __mul__(self, other: Union["QuatElem", SeriesElem, int]) -> "QuatElem":
        if isinstance(other, int):
            return QuatElem(series_scale(self.a, other), series_scale(self.b, other))
        if isinstance(other, SeriesElem):
            other = QuatElem.from_series(other)
        return quat_mul(self, other)

    def __rmul__(self, other: Union[SeriesElem, int]) -> "QuatElem":
        if isinstance(other, int):
            return self * other
        return quat_mul(QuatElem.from_series(other), self)

    def inverse(self) -> "QuatElem":
        """Multiplicative inverse, see :func:`quat_inv`."""
        return quat_inv(self)

    def bar(self) -> "QuatElem":
        """Main involution, see :func:`main_involution`."""
        return main_involution(self)


def quat_add(x: QuatElem, y: QuatElem) -> QuatElem:
    """Sum."""
    return QuatElem(series_add(x.a, y.a), series_add(x.b, y.b))


def quat_neg(x: QuatElem) -> QuatElem:
    """Additive inverse."""
    return QuatElem(series_neg(x.a), series_neg(x.b))


def quat_sub(x: QuatElem, y: QuatElem) -> QuatElem:
    """Difference."""
    return QuatElem(series_sub(x.a, y.a), series_sub(x.b, y.b))


def quat_mul(x: QuatElem, y: QuatElem) -> QuatElem:
    """
    Product by the twist rule.

    ``(a + bΠ)(c + dΠ) = (ac + b*bar(d)*π) + (ad + b*bar(c))Π``
    """
    a, b = x.a, x.b
    c, d = y.a, y.b
    first = series_add(series_mul(a, c), series_shift(series_mul(b, frobenius(d)), 1))
    second = series_add(series_mul(a, d), series_mul(b, frobenius(c)))
    return QuatElem(first, second)


def main_involution(x: QuatElem) -> QuatElem:
    """Main involution ``a + bΠ -> bar(a) - bΠ``."""
    return QuatElem(frobenius(x.a), series_neg(x.b))


def reduced_norm(x: QuatElem) -> SeriesElem:
    """Reduced norm ``x * bar(x) = N(a) - π N(b)``, an F-rational series."""
    norm_a = series_mul(x.a, frobenius(x.a))
    norm_b = series_mul(x.b, frobenius(x.b))
    return series_sub(norm_a, series_shift(norm_b, 1))


def reduced_trace(x: QuatElem) -> SeriesElem:
    """Reduced trace ``x + bar(x) = a + bar(a)``."""
    return series_add(x.a, frobenius(x.a))


def quat_inv(x: QuatElem) -> QuatElem:
    """
    Multiplicative inverse ``bar(x) / nrd(x)``.

    Raises
    ------
    InversionOfZero
        if x is zero to precision
    """
    try:
        n_inv = series_inv(reduced_norm(x))
    except InversionOfZero as e:
        raise InversionOfZero(f"Cannot invert {x!r}, it is zero to precision!") from e
    # n_inv is central, so it may be applied coordinatewise on the right
    conj = main_involution(x)
    return QuatElem(series_mul(conj.a, n_inv), series_mul(conj.b, n_inv))


def quat_val(x: QuatElem) -> Valuation:
    """
    Valuation ``v_D(a + bΠ) = min(2 val a, 2 val b + 1)``.

    Returns :class:`AtLeast` when the minimum is not attained
    below the precision of the element.
    """
    va = series_val(x.a)
    vb = series_val(x.b)
    candidates = []
    for v, shift in ((va, 0), (vb, 1)):
        if isinstance(v, AtLeast):
            candidates.append((2 * v.bound + shift, False))
        else:
            candidates.append((2 * v + shift, True))
    value, exact = min(candidates)
    return value if exact else AtLeast(value)


def quat_equal(x: QuatElem, y: QuatElem) -> bool:
    """Elements agree to their common precision."""
    return quat_sub(x, y).is_zero
