"""Seeded samplers of elements with prescribed properties."""

from random import Random
from typing import Optional

from .._error import Unsupported, WrongCase
from .._field import FieldParams, SeriesElem, make_series
from .._quaternion import OrderSpec, QuatElem


def random_series(
    rng: Random,
    field: FieldParams,
    start: int = 0,
    precision: Optional[int] = None,
    rational: bool = False,
    unit: bool = False,
) -> SeriesElem:
    """
    Random series with digits from π^start up to the precision.

    Parameters
    ----------
    rational
        draw prime field digits only
    unit
        make the digit at π^start nonzero
    """
    precision = field.precision if precision is None else precision
    q = field.q
    coeffs = []
    for i in range(max(precision - start, 0)):
        c = rng.randrange(q)
        d = 0 if rational else rng.randrange(q)
        if i == 0 and unit and (c, d) == (0, 0):
            c = rng.randrange(1, q)
        coeffs.append((c, d))
    return make_series(field, start, coeffs, precision)


def random_element(rng: Random, field: FieldParams, max_valuation: int = 3) -> QuatElem:
    """Random nonzero element of O_D of valuation at most ``max_valuation``."""
    v = rng.randrange(max_valuation + 1)
    half, odd = divmod(v, 2)
    if odd:
        a = random_series(rng, field, half + 1)
        b = random_series(rng, field, half, unit=True)
    else:
        a = random_series(rng, field, half, unit=True)
        b = random_series(rng, field, half)
    return QuatElem(a, b)


def random_unit(rng: Random, field: FieldParams) -> QuatElem:
    """Random unit of O_D."""
    return QuatElem(random_series(rng, field, unit=True), random_series(rng, field))


def random_nonunit(rng: Random, field: FieldParams, max_valuation: int = 3) -> QuatElem:
    """Random nonzero element of the maximal ideal ΠO_D."""
    v = rng.randrange(1, max_valuation + 1)
    half, odd = divmod(v, 2)
    if odd:
        a = random_series(rng, field, half + 1)
        b = random_series(rng, field, half, unit=True)
    else:
        a = random_series(rng, field, half, unit=True)
        b = random_series(rng, field, half)
    return QuatElem(a, b)


def random_rational_unit(rng: Random, field: FieldParams) -> QuatElem:
    """Random element of O_F^×."""
    return QuatElem.from_series(random_series(rng, field, rational=True, unit=True))


def _element_at_distance(rng: Random, field: FieldParams, w: int) -> QuatElem:
    # x + ε + η with x in O_F^×, ε of valuation w off F and v(η) > w
    x = random_rational_unit(rng, field)
    half, odd = divmod(w, 2)
    u = rng.randrange(1, field.q)
    precision = field.precision

    if odd:
        epsilon = QuatElem.from_series(
            SeriesElem.zero(field, precision),
            make_series(field, half, [field.element(u)], precision),
        )
        eta = QuatElem(
            random_series(rng, field, half + 1),
            random_series(rng, field, half + 1),
        )
    else:
        epsilon = QuatElem.from_series(
            make_series(field, half, [field.element(0, u)], precision)
        )
        eta = QuatElem(
            random_series(rng, field, half + 1),
            random_series(rng, field, half),
        )
    return x + epsilon + eta


def random_at_distance(rng: Random, field: FieldParams, w: int) -> QuatElem:
    """
    Random unit at distance exactly ``q^(-w)`` from O_F^×.

    Raises
    ------
    Unsupported
        if w is negative or beyond the precision
    """
    if w < 0 or w >= 2 * field.precision - 2:
        raise Unsupported(f"Distance valuation {w} is out of range!")
    return _element_at_distance(rng, field, w)


def random_shallow(rng: Random, order: OrderSpec) -> QuatElem:
    """
    Random shallow unit for an order.

    Raises
    ------
    Unsupported
        if the order admits no shallow elements, |μ|_D > q^(-2)
    """
    top = order.mu_valuation - 2
    if top < 0:
        raise Unsupported(f"{order!r} has no shallow elements!")
    return random_at_distance(rng, order.field, rng.randrange(top + 1))


def random_deep(rng: Random, order: OrderSpec) -> QuatElem:
    """Random deep unit for an order, possibly in O_F^× + small elements."""
    low = max(order.mu_valuation - 1, 0)
    w = rng.randrange(low, low + 3)
    if w >= 2 * order.field.precision - 2:
        return random_rational_unit(rng, order.field)
    return random_at_distance(rng, order.field, w)


def random_distance_one(rng: Random, field: FieldParams) -> QuatElem:
    """Random unit at distance 1 from O_F^×."""
    return random_at_distance(rng, field, 0)


def random_order_unit(rng: Random, order: OrderSpec) -> QuatElem:
    """Random element of O^×."""
    f = order.field
    s = order.level
    zero = SeriesElem.zero(f)
    a = random_series(rng, f, rational=True, unit=True)
    if order.is_ramified:
        b = random_series(rng, f, s, rational=True)
        return QuatElem(a, b)
    if s == 0:
        return QuatElem(random_series(rng, f, unit=True), zero)
    return QuatElem(a + random_series(rng, f, s), zero)


def random_maximal_unit(rng: Random, order: OrderSpec) -> QuatElem:
    """Random element of O_K^×."""
    return random_order_unit(rng, order.with_level(0))


def random_normalizer(rng: Random, order: OrderSpec) -> QuatElem:
    """Random unit of the normalizer of O_K^×, in D⁺ or D⁻."""
    k = random_maximal_unit(rng, order)
    if order.is_ramified and rng.randrange(2):
        return k * QuatElem.delta(order.field)
    return k


def random_residue_unit(rng: Random, order: OrderSpec) -> QuatElem:
    """
    Random element of O_K^× + ΠO_D for ramified K.

    Raises
    ------
    WrongCase
        for unramified orders
    """
    if not order.is_ramified:
        raise WrongCase(f"O_K^× + ΠO_D is sampled for ramified orders, got {order!r}!")
    f = order.field
    a0 = SeriesElem.from_int(f, rng.randrange(1, f.q))
    return QuatElem(a0 + random_series(rng, f, 1), random_series(rng, f))


def random_vy_input(rng: Random, order: OrderSpec) -> QuatElem:
    """Random unit within the hypotheses of the v_y formulas."""
    if order.is_ramified:
        return random_residue_unit(rng, order)
    return random_unit(rng, order.field)
