"""
Identities checked on seeded samples.

Every check takes a :class:`SuiteContext` and returns an
:class:`IdentityRow`. Samples whose evaluation runs out of precision
are counted as skipped, never as failures. A row with skipped samples
only is unresolved, and a row with neither samples nor skips is an
identity that does not apply to the configured order.
"""

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Callable, Dict, Iterator, List, Optional

from .._error import InsufficientPrecision, RouteDisagreement, Unsupported
from .._field import (
    FieldParams,
    SeriesElem,
    frobenius,
    is_resolved,
    lower_bound,
    series_add,
    series_mul,
    series_val,
)
from .._haar import (
    AdaptiveIntegrator,
    CachingIntegrator,
    Integrand,
    Integrator,
    classes_at,
    default_cache_size,
    split_nonunits,
    split_units,
    units_of,
    units_ok,
    vol_gamma,
    vol_omega,
)
from .._lifting import Lifting, distance_to, gl2_oracle_pairing, intersection_pairing
from .._model import Identity, IdentityRow
from .._quaternion import (
    Extension,
    Mat2D,
    Membership,
    OrderSpec,
    QuatElem,
    coset_representatives,
    eigen_matrix,
    eigen_matrix_inverse,
    is_in_order,
    is_normalizer_element,
    pm_decompose,
    quat_equal,
    quat_inv,
    quat_mul,
    quat_sub,
    quat_val,
)
from .._value import ValueExt, format_rational
from .sampling import (
    random_at_distance,
    random_deep,
    random_distance_one,
    random_element,
    random_maximal_unit,
    random_nonunit,
    random_normalizer,
    random_order_unit,
    random_rational_unit,
    random_residue_unit,
    random_series,
    random_shallow,
    random_unit,
    random_vy_input,
)

logger = logging.getLogger(__name__)


@dataclass
class SuiteContext:
    """
    Parameters shared by the identity checks.

    Attributes
    ----------
    field
        residue field and working precision
    ext
        configured extension case
    level
        configured order level
    samples
        samples per check
    seed
        seed of the samplers, each check derives its own stream
    gl2_level
        enumeration level of the GL₂ oracle
    integrator
        integrator shared by the lifting calculators
    """

    field: FieldParams
    ext: Extension = Extension.unramified
    level: int = 0
    samples: int = 20
    seed: int = 0
    gl2_level: int = 2
    integrator: Integrator = field(
        default_factory=lambda: CachingIntegrator(max_size=default_cache_size)
    )

    def rng(self, name: str) -> Random:
        """Random stream of one check, independent of the other checks."""
        return Random(f"{self.seed}:{name}")

    @property
    def order(self) -> OrderSpec:
        """Configured order."""
        return OrderSpec(self.field, self.ext, self.level)

    def orders(self) -> List[OrderSpec]:
        """Configured level in both extension cases."""
        return [OrderSpec(self.field, ext, self.level) for ext in Extension]

    def lifting(self, order: Optional[OrderSpec] = None) -> Lifting:
        """Calculator without internal cross-checks."""
        return Lifting(order or self.order, self.integrator, cross_check=False)


class Tally:
    """Counts of checks, failures and skips of one identity."""

    def __init__(self, name: str):
        self.name = name
        self.samples = 0
        self.failures = 0
        self.skipped = 0
        self.max_discrepancy = Fraction(0)

    def check(self, ok: bool) -> None:
        """Record a boolean check."""
        self.samples += 1
        if not ok:
            self.failures += 1

    def compare(self, lhs, rhs) -> None:
        """Record an exact comparison of values."""
        lhs, rhs = ValueExt._coerce(lhs), ValueExt._coerce(rhs)
        if lhs.is_insufficient or rhs.is_insufficient:
            self.skipped += 1
            return
        self.check(lhs == rhs)
        if lhs.is_finite and rhs.is_finite:
            self._discrepancy(lhs.value, rhs.value)

    def skip(self) -> None:
        """Record a skipped sample."""
        self.skipped += 1

    def _discrepancy(self, lhs: Fraction, rhs: Fraction) -> None:
        self.max_discrepancy = max(self.max_discrepancy, abs(lhs - rhs))

    @contextmanager
    def guard(self) -> Iterator[None]:
        """Count unresolved samples as skipped and disagreements as failures."""
        try:
            yield
        except (InsufficientPrecision, Unsupported):
            self.skipped += 1
        except RouteDisagreement as e:
            logger.info("%s: %s", self.name, e)
            self.check(False)

    def row(self) -> IdentityRow:
        """Summary row."""
        return IdentityRow(
            name=self.name,
            samples=self.samples,
            failures=self.failures,
            skipped=self.skipped,
            max_discrepancy=format_rational(self.max_discrepancy),
        )


def _min_valuation(*values) -> Optional[int]:
    # Minimum of valuations when it is decided by the resolved ones
    resolved = [v for v in values if is_resolved(v)]
    if not resolved:
        return None
    m = min(resolved)
    if any(lower_bound(v) < m for v in values if not is_resolved(v)):
        return None
    return m


def field_axioms(ctx: SuiteContext) -> IdentityRow:
    """Ultrametric inequality, multiplicativity and the Frobenius automorphism."""
    tally = Tally(Identity.field_axioms.value)
    rng = ctx.rng(tally.name)
    f = ctx.field

    for _ in range(ctx.samples):
        x = random_series(rng, f, rng.randrange(3))
        y = random_series(rng, f, rng.randrange(3))
        vx, vy = series_val(x), series_val(y)

        total = series_val(series_add(x, y))
        tally.check(lower_bound(total) >= min(lower_bound(vx), lower_bound(vy)))
        if is_resolved(vx) and is_resolved(vy):
            if vx != vy:
                tally.check(total == min(vx, vy))
            tally.check(series_val(series_mul(x, y)) == vx + vy)

        fx, fy = frobenius(x), frobenius(y)
        tally.check(frobenius(series_mul(x, y)) == series_mul(fx, fy))
        tally.check(frobenius(series_add(x, y)) == series_add(fx, fy))

        g, h = random_element(rng, f), random_element(rng, f)
        tally.check(quat_val(quat_mul(g, h)) == quat_val(g) + quat_val(h))
        one = QuatElem.from_int(f, 1)
        tally.check(quat_equal(quat_mul(g, quat_inv(g)), one))
    return tally.row()


def max_decomposition(ctx: SuiteContext) -> IdentityRow:
    """``|γ| = max(|γ₊|, |γ₋|)`` and the eigen-relations of the components."""
    tally = Tally(Identity.max_decomposition.value)
    rng = ctx.rng(tally.name)

    for order in ctx.orders():
        mu, mu_bar = order.mu, order.mu_bar
        for _ in range(ctx.samples):
            gamma = random_element(rng, ctx.field)
            plus, minus = pm_decompose(gamma, order)

            expected = _min_valuation(quat_val(plus), quat_val(minus))
            if expected is None:
                tally.skip()
            else:
                tally.check(quat_val(gamma) == expected)
            tally.check(quat_equal(plus + minus, gamma))
            tally.check(quat_equal(plus * mu, mu * plus))
            tally.check(quat_equal(minus * mu, mu_bar * minus))
    return tally.row()


def matrix_inverse(ctx: SuiteContext) -> IdentityRow:
    """Eigen matrices of the orders up to the configured level are inverted exactly."""
    tally = Tally(Identity.matrix_inverse.value)
    for ext in Extension:
        for level in range(ctx.level + 1):
            order = OrderSpec(ctx.field, ext, level)
            product = eigen_matrix(order) @ eigen_matrix_inverse(order)
            tally.check(product.equals(Mat2D.identity(order.mu)))
            product = eigen_matrix_inverse(order) @ eigen_matrix(order)
            tally.check(product.equals(Mat2D.identity(order.mu)))
    return tally.row()


def volume_telescoping(ctx: SuiteContext) -> IdentityRow:
    """Volumes of Ω(π^n) sum to the complement of Γ(π^(n+1))."""
    tally = Tally(Identity.volume_telescoping.value)
    q = ctx.field.q
    tally.check(vol_gamma(0, q) == 1)
    tally.check(vol_omega(0, q) == 1 / (1 + Fraction(1, q)))

    total = Fraction(0)
    for n in range(max(ctx.samples, 1)):
        total += vol_omega(n, q)
        tally.check(total == 1 - vol_gamma(n + 1, q))
        tally.check(vol_gamma(n + 1, q) * q == vol_gamma(n + 2, q) * q * q)
    return tally.row()


def split_linearity(ctx: SuiteContext) -> IdentityRow:
    """Integral over O_K^× is the sum over its two unramified pieces."""
    tally = Tally(Identity.split_linearity.value)
    rng = ctx.rng(tally.name)
    order = OrderSpec(ctx.field, Extension.unramified, ctx.level)
    integrator = ctx.integrator

    for _ in range(ctx.samples):
        gamma = random_unit(rng, ctx.field)
        integrand = Integrand(gamma)
        with tally.guard():
            whole = integrator.integrate(units_ok(order), integrand).value
            first = integrator.integrate(split_units(order), integrand).value
            second = integrator.integrate(split_nonunits(order), integrand).value
            tally.compare(whole, first + second)
    return tally.row()


def refinement_stability(ctx: SuiteContext) -> IdentityRow:
    """Certified integrals do not change when refined one level further."""
    tally = Tally(Identity.refinement_stability.value)
    rng = ctx.rng(tally.name)
    integrator = AdaptiveIntegrator()

    for order in ctx.orders():
        space = units_ok(order)
        for _ in range(ctx.samples):
            integrand = Integrand(random_unit(rng, ctx.field))
            result = integrator.integrate(space, integrand)
            if not result.certified:
                tally.skip()
                continue
            cap = result.level_used + 1
            again = integrator.integrate(space, integrand, depth_cap=cap)
            tally.compare(result.value, again.value)
    return tally.row()


def phi_constants(ctx: SuiteContext) -> IdentityRow:
    """φ is ``1 + 1/q`` on units and 2 on Π."""
    tally = Tally(Identity.phi_constants.value)
    rng = ctx.rng(tally.name)
    f = ctx.field
    lifting = ctx.lifting()
    unit_value = 1 + Fraction(1, f.q)

    tally.compare(lifting.phi(QuatElem.delta(f)), unit_value)
    tally.compare(lifting.phi(QuatElem.Pi(f)), 2)
    for _ in range(ctx.samples):
        with tally.guard():
            tally.compare(lifting.phi(random_unit(rng, f)), unit_value)
    return tally.row()


def phi_scaling(ctx: SuiteContext) -> IdentityRow:
    """``φ(πγ) = q φ(γ)`` for non-units γ."""
    tally = Tally(Identity.phi_scaling.value)
    rng = ctx.rng(tally.name)
    f = ctx.field
    lifting = ctx.lifting()
    pi = SeriesElem.uniformizer_power(f, 1)

    for _ in range(ctx.samples):
        gamma = random_nonunit(rng, f)
        with tally.guard():
            tally.compare(lifting.phi(gamma * pi), f.q * lifting.phi(gamma))
    return tally.row()


def projection_max(ctx: SuiteContext) -> IdentityRow:
    """``|γ - a| = max(|γ′ - a|, |γ - γ′|)`` for a projection γ′ to O_F^×."""
    tally = Tally(Identity.projection_max.value)
    rng = ctx.rng(tally.name)
    f = ctx.field
    space = units_of(f)

    for _ in range(ctx.samples):
        gamma = random_at_distance(rng, f, rng.randrange(4))
        with tally.guard():
            report = distance_to(gamma)
            if report.valuation is None:
                tally.skip()
                continue
            prime = report.projections[0]
            for cls in classes_at(space, report.resolution_level):
                expected = _min_valuation(
                    quat_val(quat_sub(prime, cls.rep)), report.valuation
                )
                actual = quat_val(quat_sub(gamma, cls.rep))
                if expected is None or not is_resolved(actual):
                    tally.skip()
                    continue
                tally.check(actual == expected)
    return tally.row()


def _has_shallow_elements(ctx: SuiteContext) -> bool:
    # Orders with |μ|_D > q^(-2) yield rows without samples or skips
    return ctx.order.mu_valuation >= 2


def phi_bound(ctx: SuiteContext) -> IdentityRow:
    """``φ(γ″) <= φ(π^(-1) μ)`` for shallow γ."""
    tally = Tally(Identity.phi_bound.value)
    if not _has_shallow_elements(ctx):
        return tally.row()

    rng = ctx.rng(tally.name)
    order = ctx.order
    lifting = ctx.lifting()
    inverse_pi = SeriesElem.uniformizer_power(ctx.field, -1, order.constant_precision)
    bound = lifting.phi(order.mu * inverse_pi)

    for _ in range(ctx.samples):
        with tally.guard():
            depth = lifting.classify(random_shallow(rng, order))
            value = lifting.phi(depth.gamma_dprime)
            finite = value.is_finite and bound.is_finite
            tally.check(finite and value.value <= bound.value)
    return tally.row()


def distance_product(ctx: SuiteContext) -> IdentityRow:
    """``||γ1 γ2|| >= ||γ1||`` whenever ``||γ1|| > ||γ2||``."""
    tally = Tally(Identity.distance_product.value)
    rng = ctx.rng(tally.name)
    f = ctx.field

    for _ in range(ctx.samples):
        w1 = rng.randrange(4)
        first = random_at_distance(rng, f, w1)
        if rng.randrange(4):
            second = random_at_distance(rng, f, w1 + rng.randrange(1, 3))
        else:
            second = random_rational_unit(rng, f)
        with tally.guard():
            report = distance_to(quat_mul(first, second))
            tally.check(report.valuation is not None and report.valuation <= w1)
    return tally.row()


def shallow_product(ctx: SuiteContext) -> IdentityRow:
    """Shallow times deep is shallow."""
    tally = Tally(Identity.shallow_product.value)
    if not _has_shallow_elements(ctx):
        return tally.row()

    rng = ctx.rng(tally.name)
    lifting = ctx.lifting()
    for _ in range(ctx.samples):
        first = random_shallow(rng, ctx.order)
        second = random_deep(rng, ctx.order)
        with tally.guard():
            tally.check(lifting.classify(quat_mul(first, second)).is_shallow)
    return tally.row()


def shallow_route(ctx: SuiteContext) -> IdentityRow:
    """v_x by integration equals the shallow closed form."""
    tally = Tally(Identity.shallow_route.value)
    if not _has_shallow_elements(ctx):
        return tally.row()

    rng = ctx.rng(tally.name)
    lifting = ctx.lifting()
    for _ in range(ctx.samples):
        gamma = random_shallow(rng, ctx.order)
        with tally.guard():
            tally.compare(lifting.v_x(gamma), lifting.shallow_closed_form(gamma))
    return tally.row()


def unit_distance(ctx: SuiteContext) -> IdentityRow:
    """v_x is 1 at distance 1 from O_F^× for ramified orders."""
    tally = Tally(Identity.unit_distance.value)
    rng = ctx.rng(tally.name)
    lifting = ctx.lifting(OrderSpec(ctx.field, Extension.ramified, ctx.level))

    for _ in range(ctx.samples):
        with tally.guard():
            tally.compare(lifting.v_x(random_distance_one(rng, ctx.field)), 1)
    return tally.row()


def coset_sum(ctx: SuiteContext) -> IdentityRow:
    """v_z is the sum of v_x over the cosets of O_K^× / O^×."""
    tally = Tally(Identity.coset_sum.value)
    rng = ctx.rng(tally.name)
    order = ctx.order
    lifting = ctx.lifting()
    representatives = coset_representatives(order)

    for _ in range(ctx.samples):
        gamma = random_deep(rng, order)
        with tally.guard():
            total = ValueExt.finite(0)
            for k in representatives:
                total = total + lifting.v_x(quat_mul(k, gamma))
            tally.compare(lifting.v_z(gamma), total)
    return tally.row()


def ramified_chain(ctx: SuiteContext) -> IdentityRow:
    """``v_y = v_z + v_ā`` on O_K^× + ΠO_D, and v_ā is the index on O_K^×."""
    tally = Tally(Identity.ramified_chain.value)
    rng = ctx.rng(tally.name)
    order = OrderSpec(ctx.field, Extension.ramified, ctx.level)
    lifting = ctx.lifting(order)

    for _ in range(ctx.samples):
        gamma = random_residue_unit(rng, order)
        with tally.guard():
            total = lifting.v_z(gamma) + lifting.v_abar(gamma)
            tally.compare(lifting.v_y(gamma), total)
        with tally.guard():
            tally.compare(lifting.v_abar(random_maximal_unit(rng, order)), order.index)
    return tally.row()


def gl2_vy(ctx: SuiteContext) -> IdentityRow:
    """GL₂ oracle of v_y equals the formula."""
    tally = Tally(Identity.gl2_vy.value)
    rng = ctx.rng(tally.name)

    for order in ctx.orders():
        lifting = ctx.lifting(order)
        for _ in range(ctx.samples):
            gamma = random_vy_input(rng, order)
            with tally.guard():
                expected = lifting.v_y(gamma)
                tally.compare(lifting.gl2_oracle_vy(gamma, ctx.gl2_level), expected)
    return tally.row()


def gl2_pairing(ctx: SuiteContext) -> IdentityRow:
    """GL₂ oracle of the intersection pairing equals the closed form."""
    tally = Tally(Identity.gl2_pairing.value)
    top = max(ctx.level, 2)
    orders = [
        OrderSpec(ctx.field, ext, level)
        for ext in Extension
        for level in range(top + 1)
    ]

    for first in orders:
        for second in orders:
            if first.mu_valuation >= second.mu_valuation:
                continue
            with tally.guard():
                oracle = gl2_oracle_pairing(first, second, ctx.gl2_level)
                tally.compare(oracle, intersection_pairing(first, second))
    return tally.row()


def omega_terms(ctx: SuiteContext) -> IdentityRow:
    """Oracle sums over Ω(π^n), n < u, equal the terms of P_s."""
    tally = Tally(Identity.omega_terms.value)
    rng = ctx.rng(tally.name)

    for order in ctx.orders():
        lifting = ctx.lifting(order)
        terms = lifting.ps_terms()
        for _ in range(ctx.samples):
            gamma = random_vy_input(rng, order)
            with tally.guard():
                groups = lifting.gl2_oracle_split(gamma, ctx.gl2_level)
                for n in range(min(len(terms), ctx.gl2_level)):
                    tally.compare(groups[n], terms[n])
    return tally.row()


def pd_identity(ctx: SuiteContext) -> IdentityRow:
    """v_y assembled from P_s and P_d equals the formula."""
    tally = Tally(Identity.pd_identity.value)
    rng = ctx.rng(tally.name)

    for order in ctx.orders():
        lifting = ctx.lifting(order)
        for _ in range(ctx.samples):
            gamma = random_vy_input(rng, order)
            with tally.guard():
                expected = lifting.v_y(gamma)
                split = lifting.ps_pd_decomposition(gamma)
                tally.compare(lifting.vy_from_split(split), expected)
    return tally.row()


def infinite_detection(ctx: SuiteContext) -> IdentityRow:
    """Infinite exactly on the normalizer for v_y and on O^× for v_x."""
    tally = Tally(Identity.infinite_detection.value)
    rng = ctx.rng(tally.name)
    order = ctx.order
    lifting = ctx.lifting()

    for _ in range(ctx.samples):
        with tally.guard():
            tally.check(lifting.v_y(random_normalizer(rng, order)).is_infinite)
        with tally.guard():
            tally.check(lifting.v_x(random_order_unit(rng, order)).is_infinite)

        gamma = random_vy_input(rng, order)
        with tally.guard():
            if not is_normalizer_element(gamma, order):
                tally.check(lifting.v_y(gamma).is_finite)
        with tally.guard():
            if is_in_order(gamma, order) is Membership.outside:
                tally.check(lifting.v_x(gamma).is_finite)
    return tally.row()


def _is_natural(value: ValueExt) -> bool:
    return value.is_finite and value.value >= 0 and value.value.denominator == 1


def integrality(ctx: SuiteContext) -> IdentityRow:
    """Finite v_x, v_z and v_ā are non-negative integers."""
    tally = Tally(Identity.integrality.value)
    rng = ctx.rng(tally.name)
    order = ctx.order
    lifting = ctx.lifting()

    for _ in range(ctx.samples):
        gamma = random_unit(rng, ctx.field)
        quantities: List[Callable[[QuatElem], ValueExt]] = [lifting.v_x, lifting.v_z]
        if order.is_ramified:
            quantities.append(lifting.v_abar)
        for quantity in quantities:
            with tally.guard():
                value = quantity(gamma)
                if value.is_finite:
                    tally.check(_is_natural(value))
    return tally.row()


checks: Dict[Identity, Callable[[SuiteContext], IdentityRow]] = {
    Identity.field_axioms: field_axioms,
    Identity.max_decomposition: max_decomposition,
    Identity.matrix_inverse: matrix_inverse,
    Identity.volume_telescoping: volume_telescoping,
    Identity.split_linearity: split_linearity,
    Identity.refinement_stability: refinement_stability,
    Identity.phi_constants: phi_constants,
    Identity.phi_scaling: phi_scaling,
    Identity.projection_max: projection_max,
    Identity.phi_bound: phi_bound,
    Identity.distance_product: distance_product,
    Identity.shallow_product: shallow_product,
    Identity.shallow_route: shallow_route,
    Identity.unit_distance: unit_distance,
    Identity.coset_sum: coset_sum,
    Identity.ramified_chain: ramified_chain,
    Identity.gl2_vy: gl2_vy,
    Identity.gl2_pairing: gl2_pairing,
    Identity.omega_terms: omega_terms,
    Identity.pd_identity: pd_identity,
    Identity.infinite_detection: infinite_detection,
    Identity.integrality: integrality,
}
"""Identity checks in suite order."""
