from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, List, Optional, Tuple

from .._error import ParameterError, Unsupported, WrongCase
from .._field import FieldParams, QuadExtElem, SeriesElem, make_series
from .._model.serialise import StrEnum
from .element import QuatElem, main_involution, quat_inv, quat_mul, quat_sub, quat_val


class Extension(StrEnum):
    """Quadratic extension cases of K/F."""

    unramified = "unramified"
    ramified = "ramified"


class Membership(StrEnum):
    """Outcome of an order membership test."""

    in_order = "in_order"
    in_unit_group = "in_unit_group"
    outside = "outside"
    unresolved = "unresolved"


def expected_index(ext: Extension, level: int, q: int) -> int:
    """Closed form of the unit index [O_K^× : O^×]."""
    if ext is Extension.ramified:
        return q**level
    if level == 0:
        return 1
    return (q + 1) * q ** (level - 1)


@dataclass(frozen=True)
class OrderSpec:
    """
    Quadratic order ``O = O_F + π^s O_K`` of level s.

    K is embedded as F(δ) in the unramified case and as F(Π)
    in the ramified case. The generator ``μ`` is ``π^s ζ`` or ``π^s Π``
    respectively, so that O = O_F[μ]. The unramified ζ = c + dδ is
    any residue with d nonzero, δ by default. Then μ̄ = -μ exactly
    when ζ is δ or the order is ramified.

    Parameters
    ----------
    field
        residue field parameters
    ext
        extension case of K/F
    level
        level s of the order, non-negative
    zeta
        residue ζ with O_K = O_F[ζ] for unramified K, δ if not specified

    Raises
    ------
    ParameterError
        if the level is negative, ζ lies in F_q or is given for ramified K
    """

    field: FieldParams
    ext: Extension
    level: int
    zeta: Optional[QuadExtElem] = None

    def __post_init__(self):
        object.__setattr__(self, "ext", Extension(self.ext))
        if self.level < 0:
            raise ParameterError(
                f"Order level must be non-negative, got {self.level!r}!",
                "level",
                self.level,
            )

        if self.ext is Extension.ramified:
            if self.zeta is not None:
                raise ParameterError(
                    "ζ only applies to unramified orders!", "zeta", self.zeta
                )
            return
        zeta = self.field.delta if self.zeta is None else self.field.element(*self.zeta)
        if zeta.d == 0:
            msg = f"ζ must generate the residue field of K, got {tuple(zeta)!r}!"
            raise ParameterError(msg, "zeta", self.zeta)
        object.__setattr__(self, "zeta", zeta)

    def __repr__(self):
        options = [f"q={self.field.q}", f"ext={self.ext}", f"level={self.level}"]
        if self.zeta is not None and self.zeta != self.field.delta:
            options.append(f"zeta={tuple(self.zeta)}")
        return type(self).__name__ + "(" + ", ".join(options) + ")"

    @property
    def is_ramified(self) -> bool:
        """K/F is ramified."""
        return self.ext is Extension.ramified

    @property
    def is_maximal(self) -> bool:
        """The order is O_K."""
        return self.level == 0

    @property
    def constant_precision(self) -> int:
        """Precision used for the exact constants of the order."""
        return self.field.precision + 2 * self.level + 4

    @property
    def omega_valuation(self) -> int:
        """Valuation of the second O_F-basis vector of O_K, ζ or Π."""
        return 1 if self.is_ramified else 0

    @property
    def uniformizer_valuation(self) -> int:
        """Valuation v_D of a uniformizer of K."""
        return 1 if self.is_ramified else 2

    @cached_property
    def omega(self) -> QuatElem:
        """Second O_F-basis vector of O_K, ζ or Π."""
        if self.is_ramified:
            return QuatElem.Pi(self.field, self.constant_precision)
        zeta = SeriesElem.from_residue(self.field, self.zeta, self.constant_precision)
        return QuatElem.from_series(zeta)

    @cached_property
    def mu(self) -> QuatElem:
        """Generator μ of smallest absolute value."""
        power = SeriesElem.uniformizer_power(
            self.field, self.level, self.constant_precision
        )
        return self.omega * power

    @cached_property
    def mu_bar(self) -> QuatElem:
        """Conjugate μ̄, the image of μ under the main involution."""
        return main_involution(self.mu)

    @property
    def mu_valuation(self) -> int:
        """Valuation v_D(μ), 2s unramified and 2s + 1 ramified."""
        return 2 * self.level + self.omega_valuation

    @property
    def u(self) -> int:
        """Maximal integer u with |π^(u-1)|_D > |μ|_D."""
        u = 0
        while 2 * u < self.mu_valuation:
            u += 1
        return u

    @cached_property
    def index(self) -> int:
        """Unit index [O_K^× : O^×] counted by :func:`index_of_order`."""
        return index_of_order(self)

    def with_level(self, level: int) -> "OrderSpec":
        """Order of the same extension at another level."""
        return OrderSpec(self.field, self.ext, level, self.zeta)


def _digit_at(x: SeriesElem, e: int):
    return x.digit(e) if e < x.precision else None


def is_in_order(gamma: QuatElem, order: OrderSpec) -> Membership:
    """
    Decide membership of an element in O and its unit group by digits.

    Digits that are not known to precision are treated as missing:
    if the answer depends on them, ``Membership.unresolved`` is returned.
    """
    s = order.level
    a, b = gamma.a, gamma.b
    missing = False

    if not a.is_zero and a.v_min < 0:
        return Membership.outside

    if order.is_ramified:
        # O = O_F + π^s O_F Π: both coordinates F-rational, b divisible by π^s
        if not a.is_rational or not b.is_rational:
            return Membership.outside
        if not b.is_zero and b.v_min < s:
            return Membership.outside
        missing = b.precision < s
    else:
        # O = O_F + π^s δ O_F: no Π-part, δ-digits vanish below π^s
        if not b.is_zero:
            return Membership.outside
        for e in range(s):
            digit = _digit_at(a, e)
            if digit is None:
                missing = True
                break
            if digit[1] != 0:
                return Membership.outside

    lead = _digit_at(a, 0)
    if missing or lead is None:
        return Membership.unresolved
    if lead != (0, 0):
        return Membership.in_unit_group
    return Membership.in_order


def pm_decompose(gamma: QuatElem, order: OrderSpec) -> Tuple[QuatElem, QuatElem]:
    """
    Split an element into μ-eigenspace components.

    ``γ₋ = (μ̄ - μ)⁻¹ (γμ - μγ)`` and ``γ₊ = γ - γ₋``,
    so that γ₊ commutes with μ and ``γ₋ μ = μ̄ γ₋``.

    Returns
    -------
    Tuple[QuatElem, QuatElem]
        components ``(γ₊, γ₋)``
    """
    mu = order.mu
    commutator = quat_sub(quat_mul(gamma, mu), quat_mul(mu, gamma))
    scale = quat_inv(quat_sub(order.mu_bar, mu))
    minus = quat_mul(scale, commutator)
    plus = quat_sub(gamma, minus)
    return plus, minus


def is_normalizer_element(gamma: QuatElem, order: OrderSpec) -> bool:
    """
    Test whether a unit lies in D⁺ or D⁻, the normalizer of O_K^×.

    Raises
    ------
    Unsupported
        if the element is not a unit
    """
    if quat_val(gamma) != 0:
        raise Unsupported(f"Normalizer test requires a unit, got {gamma!r}!")
    plus, minus = pm_decompose(gamma, order)
    return plus.is_zero or minus.is_zero


def sigma_element(order: OrderSpec) -> QuatElem:
    """
    Unit σ with σμ = μ̄σ, the twist of the ramified case.

    Raises
    ------
    WrongCase
        for unramified orders
    """
    if not order.is_ramified:
        raise WrongCase(f"σ is only defined for ramified orders, got {order!r}!")
    return QuatElem.delta(order.field, order.constant_precision)


def _separating_level(order: OrderSpec) -> int:
    # Level in uniformizers of K at which 1 + π_K^m O_K lies in O^×
    if order.is_ramified:
        return max(2 * order.level, 1)
    return max(order.level, 1)


def unit_residues(order: OrderSpec, m: int) -> Iterator[QuatElem]:
    """
    Representatives of O_K^× modulo 1 + π_K^m O_K.

    Yields exact elements with digits below level m,
    in lexicographic digit order.
    """
    f = order.field
    q = f.q
    precision = order.constant_precision
    zero = SeriesElem.zero(f, precision)

    if order.is_ramified:
        depth_a = (m + 1) // 2
        depth_b = m // 2
        for digits_a in product(range(q), repeat=depth_a):
            if digits_a[0] == 0:
                continue
            a = SeriesElem.from_digits(f, digits_a, precision=precision)
            for digits_b in product(range(q), repeat=depth_b):
                b = SeriesElem.from_digits(f, digits_b, precision=precision)
                yield QuatElem(a, b)
    else:
        for pairs in product(product(range(q), repeat=2), repeat=m):
            if pairs[0] == (0, 0):
                continue
            a = make_series(f, 0, [f.element(c, d) for c, d in pairs], precision)
            yield QuatElem(a, zero)


def index_of_order(order: OrderSpec) -> int:
    """
    Count the unit index [O_K^× : O^×] by coset enumeration.

    Residues of O_K^× modulo 1 + π_K^m O_K are enumerated at a level m
    where that subgroup lies in O^×, and those landing in O^× are counted.
    """
    m = _separating_level(order)
    total = inside = 0
    for residue in unit_residues(order, m):
        total += 1
        if is_in_order(residue, order) is Membership.in_unit_group:
            inside += 1
    index, remainder = divmod(total, inside)
    if remainder:
        raise ArithmeticError(
            f"Unit residues of {order!r} do not split into cosets: {total}/{inside}!"
        )
    return index


def coset_representatives(order: OrderSpec) -> List[QuatElem]:
    """Representatives of O_K^× / O^×, the first residue of each coset."""
    m = _separating_level(order)
    reps: List[QuatElem] = []
    inverses: List[QuatElem] = []
    for residue in unit_residues(order, m):
        covered = any(
            is_in_order(quat_mul(inv, residue), order) is Membership.in_unit_group
            for inv in inverses
        )
        if not covered:
            reps.append(residue)
            inverses.append(quat_inv(residue))
    return reps
