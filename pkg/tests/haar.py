from fractions import Fraction

import pytest

from liftcalc import (
    AdaptiveIntegrator,
    BudgetExceeded,
    CachingIntegrator,
    InsufficientPrecision,
    Integrand,
    OrderSpec,
    ParameterError,
    QuatElem,
    SeriesElem,
    additive_pi_of,
    discriminant_abs,
    epsilon_F,
    image_space,
    integrate_gl2,
    split_nonunits,
    split_units,
    units_of,
    units_ok,
    units_order,
    vol_gamma,
    vol_omega,
)
from liftcalc._haar import (
    check_budget,
    enumerate_gl2,
    enumerate_unit_classes,
    gl2_order,
    residue_matrices,
    total_integral,
)


class TestVolumes:
    def test_whole_group(self):
        assert vol_gamma(0, 3) == 1

    @pytest.mark.parametrize("n, volume", [(1, Fraction(1, 4)), (2, Fraction(1, 12))])
    def test_congruence_subgroups(self, n, volume):
        assert vol_gamma(n, 3) == volume

    def test_omega_complement(self):
        assert vol_omega(0, 3) == Fraction(3, 4)
        assert vol_omega(1, 5) == vol_gamma(1, 5) - vol_gamma(2, 5)

    def test_negative_level_raises(self):
        with pytest.raises(ParameterError):
            vol_gamma(-1, 3)

    def test_epsilon(self):
        assert epsilon_F(3) == Fraction(16, 27)

    def test_discriminant(self, make_order):
        assert discriminant_abs(make_order("unramified", 1)) == 1
        assert discriminant_abs(make_order("ramified", 1)) == Fraction(1, 3)


class TestMeasureSpaces:
    def test_units_of_has_mass_one(self, field):
        assert units_of(field).total_mass == 1

    def test_additive_pi_of(self, field):
        assert additive_pi_of(field).total_mass == Fraction(1, 3)

    @pytest.mark.parametrize("ext", ["unramified", "ramified"])
    @pytest.mark.parametrize("level", [0, 1, 2])
    def test_units_ok_has_mass_one(self, make_order, ext, level):
        assert units_ok(make_order(ext, level)).total_mass == 1

    @pytest.mark.parametrize("ext", ["unramified", "ramified"])
    @pytest.mark.parametrize("level", [0, 1, 2])
    def test_units_order_mass_is_inverse_index(self, make_order, ext, level):
        order = make_order(ext, level)
        assert units_order(order).total_mass == Fraction(1, order.index)

    def test_split_pieces_cover_units(self, make_order):
        order = make_order("unramified", 1)
        total = split_units(order).total_mass + split_nonunits(order).total_mass
        assert total == 1

    def test_default_generator_not_recorded(self, make_order):
        order = make_order("unramified", 1)
        assert units_ok(order).zeta is None
        assert image_space(order).zeta is None

    def test_image_uses_conjugate_generator(self, field):
        order = OrderSpec(field, "unramified", 1, (1, 1))
        assert split_units(order).zeta == (1, 1)
        assert split_nonunits(order).zeta == (1, 1)
        assert image_space(order).zeta == (1, 2)

    def test_generator_keeps_masses(self, field):
        order = OrderSpec(field, "unramified", 1, (1, 1))
        assert units_ok(order).total_mass == 1
        total = split_units(order).total_mass + split_nonunits(order).total_mass
        assert total == 1

    def test_spaces_hashable(self, make_order):
        order = make_order("ramified", 1)
        assert hash(units_ok(order)) == hash(units_ok(make_order("ramified", 1)))

    def test_classes_of_units_of(self, field):
        classes = list(enumerate_unit_classes(units_of(field), 1))
        assert len(classes) == 2
        assert sum(volume for _, volume in classes) == 1

    def test_classes_of_unramified_units(self, make_order):
        space = units_ok(make_order("unramified", 0))
        classes = list(enumerate_unit_classes(space, 1))
        assert len(classes) == 8
        assert sum(volume for _, volume in classes) == 1

    def test_classes_of_ramified_units(self, make_order):
        space = units_ok(make_order("ramified", 0))
        classes = list(enumerate_unit_classes(space, 2))
        assert len(classes) == 6
        assert sum(volume for _, volume in classes) == 1

    def test_classes_at_level_zero_raise(self, field):
        with pytest.raises(ParameterError):
            list(enumerate_unit_classes(units_of(field), 0))


class TestIntegrand:
    def test_default_multiplier_is_one(self, field):
        integrand = Integrand(QuatElem.delta(field))
        assert (integrand.multiplier - QuatElem.from_int(field, 1)).is_zero

    def test_invalid_sign_raises(self, field):
        with pytest.raises(ParameterError):
            Integrand(QuatElem.delta(field), sign=2)


class TestAdaptiveIntegrator:
    def test_constant_integrand(self, field):
        result = AdaptiveIntegrator().integrate(
            additive_pi_of(field), Integrand(QuatElem.delta(field))
        )
        assert result.value == Fraction(1, 3)
        assert result.certified

    def test_absolute_value_of_units(self, field):
        result = AdaptiveIntegrator().integrate(
            units_of(field), Integrand(QuatElem.zero(field), sign=1)
        )
        assert result.value == 1

    def test_pi_integrand(self, field):
        result = AdaptiveIntegrator().integrate(
            additive_pi_of(field), Integrand(QuatElem.Pi(field))
        )
        assert result.value == Fraction(1)

    def test_singular_integrand_is_infinite(self, field):
        pi = QuatElem.from_series(SeriesElem.uniformizer_power(field, 1))
        result = AdaptiveIntegrator().integrate(additive_pi_of(field), Integrand(pi))
        assert result.value.is_infinite
        assert not result.certified

    def test_classes_counted(self, field):
        result = AdaptiveIntegrator().integrate(
            additive_pi_of(field), Integrand(QuatElem.delta(field))
        )
        assert result.classes == 1

    def test_zero_multiplier_raises(self, field):
        integrand = Integrand(QuatElem.delta(field), QuatElem.zero(field))
        with pytest.raises(InsufficientPrecision):
            AdaptiveIntegrator().integrate(units_of(field), integrand)


class TestCachingIntegrator:
    def test_delegates_to_adaptive_by_default(self):
        assert isinstance(CachingIntegrator().integrator, AdaptiveIntegrator)

    def test_repeated_integral_hits_cache(self, field):
        integrator = CachingIntegrator()
        space, integrand = additive_pi_of(field), Integrand(QuatElem.delta(field))
        first = integrator.integrate(space, integrand)
        second = integrator.integrate(space, Integrand(QuatElem.delta(field)))
        assert first is second
        assert (integrator.hits, integrator.misses) == (1, 1)
        assert len(integrator) == 1

    def test_clear(self, field):
        integrator = CachingIntegrator()
        integrator.integrate(additive_pi_of(field), Integrand(QuatElem.delta(field)))
        integrator.clear()
        assert len(integrator) == 0
        assert integrator.misses == 0

    def test_max_size_evicts_oldest(self, field):
        integrator = CachingIntegrator(max_size=1)
        space = additive_pi_of(field)
        integrator.integrate(space, Integrand(QuatElem.delta(field)))
        integrator.integrate(space, Integrand(QuatElem.Pi(field)))
        assert len(integrator) == 1
        integrator.integrate(space, Integrand(QuatElem.delta(field)))
        assert integrator.misses == 3

    def test_repr_shows_wrapped(self):
        assert "AdaptiveIntegrator" in repr(CachingIntegrator())


class TestGL2:
    def test_order(self):
        assert gl2_order(3, 1) == 48
        assert gl2_order(3, 2) == 3888

    def test_residue_matrices(self):
        assert len(residue_matrices(3)) == 48

    def test_enumeration_weights_sum_to_one(self):
        weights = [w for _, w in enumerate_gl2(3, 2)]
        assert len(weights) == 3888
        assert sum(weights) == 1

    def test_level_zero_raises(self):
        with pytest.raises(ParameterError):
            check_budget(3, 0)

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            check_budget(3, 5)

    def test_budget_respected(self):
        check_budget(3, 4)

    def test_linear_integrand(self, field):
        # R(g) = g11 + g21 Π has v_D 0 when g11 is a unit and 1 otherwise
        one, zero, pi = (
            QuatElem.from_int(field, 1),
            QuatElem.zero(field),
            QuatElem.Pi(field),
        )
        groups = integrate_gl2([one, zero, pi, zero], 3, 1)
        assert groups == {0: Fraction(5, 4), 1: Fraction(1, 4)}
        assert total_integral(groups) == Fraction(3, 2)

    def test_linear_integrand_stable_in_level(self, field):
        one, zero, pi = (
            QuatElem.from_int(field, 1),
            QuatElem.zero(field),
            QuatElem.Pi(field),
        )
        groups = integrate_gl2([one, zero, pi, zero], 3, 2)
        assert set(groups) == {0, 1, 2}
        assert total_integral(groups) == Fraction(3, 2)

    def test_vanishing_integrand_is_infinite(self, field):
        one, zero = QuatElem.from_int(field, 1), QuatElem.zero(field)
        groups = integrate_gl2([one, zero, zero, zero], 3, 1)
        assert total_integral(groups).is_infinite
