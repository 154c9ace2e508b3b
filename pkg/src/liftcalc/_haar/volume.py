"""Exact volumes and measure constants."""

from fractions import Fraction

from .._error import ParameterError
from .._quaternion import OrderSpec


def abs_power(q: int, valuation: int) -> Fraction:
    """Absolute value ``q^(-valuation)`` of an element of given valuation."""
    return Fraction(q) ** (-valuation)


def vol_gamma(n: int, q: int) -> Fraction:
    """
    Volume of Γ(π^n) in GL₂(O_F).

    The whole group has volume 1 and ``Vol Γ(π^n) = q^(-n) / (1 + q^(-1))``
    for n ≥ 1.
    """
    if n < 0:
        raise ParameterError(f"Level must be non-negative, got {n!r}!", "n", n)
    if n == 0:
        return Fraction(1)
    return abs_power(q, n) / (1 + Fraction(1, q))


def vol_omega(n: int, q: int) -> Fraction:
    """Volume of Ω(π^n) = Γ(π^n) minus Γ(π^(n+1))."""
    return vol_gamma(n, q) - vol_gamma(n + 1, q)


def epsilon_F(q: int) -> Fraction:
    """Constant ``(1 - q^(-1))(1 - q^(-2))``, the inverse zeta values."""
    return (1 - Fraction(1, q)) * (1 - Fraction(1, q * q))


def unit_mass(order: OrderSpec) -> Fraction:
    """Mass of O_K^× in the additive Haar measure normalised by O_K."""
    q = order.field.q
    if order.is_ramified:
        return 1 - Fraction(1, q)
    return 1 - Fraction(1, q * q)


def additive_unit_index(order: OrderSpec) -> Fraction:
    """Measure index [O_K : O_K^×], the inverse of :func:`unit_mass`."""
    return 1 / unit_mass(order)


def order_measure_index(order: OrderSpec) -> Fraction:
    """Measure index [O_K : O^×] = [O_K : O_K^×][O_K^× : O^×]."""
    return additive_unit_index(order) * order.index


def discriminant_abs(order: OrderSpec) -> Fraction:
    """Absolute discriminant |Δ_{K/F}|_F, 1 unramified and q^(-1) ramified."""
    return Fraction(1, order.field.q) if order.is_ramified else Fraction(1)


def mu_difference_abs(order: OrderSpec) -> Fraction:
    """Absolute value |μ - μ̄|_D of the generator difference."""
    # 2 is a unit for odd q, so the difference has the valuation of μ
    return abs_power(order.field.q, order.mu_valuation)


def expected_u(order: OrderSpec) -> int:
    """Case summary of :attr:`OrderSpec.u`, s unramified and s + 1 ramified."""
    return order.level + 1 if order.is_ramified else order.level
