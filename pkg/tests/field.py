import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftcalc import (
    AtLeast,
    FieldParams,
    InversionOfZero,
    ParameterError,
    SeriesElem,
    frobenius,
    make_series,
    series_add,
    series_inv,
    series_mul,
    series_val,
)
from liftcalc._field import lower_bound, resolved_below

digits = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=6
)
shifts = st.integers(0, 3)


class TestFieldParams:
    @pytest.mark.parametrize("q", [2, 4, 9, 1, -3])
    def test_non_odd_prime_raises(self, q):
        with pytest.raises(ParameterError):
            FieldParams(q)

    def test_low_precision_raises(self):
        with pytest.raises(ParameterError):
            FieldParams(3, precision=1)

    def test_square_nonresidue_raises(self):
        with pytest.raises(ParameterError):
            FieldParams(3, nonsquare=1)

    def test_parameter_error_is_value_error(self):
        with pytest.raises(ValueError):
            FieldParams(15)

    @pytest.mark.parametrize("q, nonsquare", [(3, 2), (5, 2), (7, 3), (11, 2)])
    def test_smallest_nonsquare_chosen(self, q, nonsquare):
        assert FieldParams(q).nonsquare == nonsquare

    @pytest.mark.parametrize("q", [3, 5, 7, 11])
    def test_default_nonsquare_chosen_without_warnings(self, q):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            f = FieldParams(q)
        assert pow(f.nonsquare, (q - 1) // 2, q) == q - 1

    def test_nonsquare_reduced(self):
        assert FieldParams(3, nonsquare=5).nonsquare == 2

    def test_with_precision_keeps_residue_field(self):
        f = FieldParams(5, nonsquare=3).with_precision(4)
        assert (f.q, f.precision, f.nonsquare) == (5, 4, 3)


class TestResidueField:
    def test_delta_squared_is_nonsquare(self, field):
        assert field.mul(field.delta, field.delta) == field.element(2)

    def test_every_nonzero_element_inverted(self, field):
        for c in range(3):
            for d in range(3):
                x = field.element(c, d)
                if x == field.zero:
                    continue
                assert field.mul(x, field.inv(x)) == field.one

    def test_inverse_of_zero_raises(self, field):
        with pytest.raises(InversionOfZero):
            field.inv(field.zero)

    def test_inversion_of_zero_is_zero_division(self, field):
        with pytest.raises(ZeroDivisionError):
            field.inv(field.zero)

    def test_norm_multiplicative(self, field5):
        f = field5
        elements = [f.element(c, d) for c in range(5) for d in range(5)]
        for x in elements[::3]:
            for y in elements[::4]:
                assert f.norm(f.mul(x, y)) == f.norm(x) * f.norm(y) % 5

    def test_frobenius_fixes_prime_field(self, field):
        assert field.frobenius(field.element(2)) == field.element(2)
        assert field.frobenius(field.delta) == field.element(0, 2)


class TestSeriesElem:
    def test_leading_zeros_normalised(self, field):
        x = make_series(field, 0, [(0, 0), (1, 0)])
        assert x.v_min == 1
        assert len(x.coeffs) == field.precision - 1

    def test_zero_has_unresolved_valuation(self, field):
        assert series_val(SeriesElem.zero(field)) == AtLeast(field.precision)

    def test_digits_beyond_precision_dropped(self, field):
        x = make_series(field, 0, [(1, 0), (1, 0), (1, 0)], precision=2)
        assert x.precision == 2
        assert len(x.coeffs) == 2

    def test_digit_beyond_precision_raises(self, field):
        with pytest.raises(IndexError):
            SeriesElem.from_int(field, 1).digit(field.precision)

    def test_digit_below_leading_term_is_zero(self, field):
        x = SeriesElem.uniformizer_power(field, 2)
        assert x.digit(0) == field.zero
        assert x.digit(2) == field.one

    def test_integer_arithmetic(self, field):
        x = SeriesElem.from_digits(field, [1, 1])
        assert x + 2 == SeriesElem.from_digits(field, [0, 1])
        assert (x - x).is_zero
        assert (x * 3).is_zero

    def test_inverse_of_unit(self, field):
        x = SeriesElem.from_digits(field, [1, 1])
        assert series_mul(x, series_inv(x)) == SeriesElem.from_int(field, 1)

    def test_inverse_of_uniformizer_loses_precision(self, field):
        pi = SeriesElem.uniformizer_power(field, 1)
        inverse = pi.inverse()
        assert inverse.v_min == -1
        assert inverse.precision == field.precision - 2
        product = series_mul(pi, inverse)
        assert product == SeriesElem.from_int(field, 1, product.precision)

    def test_inverse_of_zero_raises(self, field):
        with pytest.raises(InversionOfZero):
            series_inv(SeriesElem.zero(field))

    def test_frobenius_negates_delta(self, field):
        delta = SeriesElem.delta(field)
        assert frobenius(delta) == -delta

    def test_rational_series(self, field):
        assert SeriesElem.from_digits(field, [1, 2, 0, 1]).is_rational
        assert not SeriesElem.delta(field).is_rational

    def test_truncate(self, field):
        x = SeriesElem.from_digits(field, [1, 2, 0, 1])
        assert x.truncate(2) == SeriesElem.from_digits(field, [1, 2], precision=2)
        assert x.truncate(20) is x


class TestValuations:
    def test_at_least_str(self):
        assert str(AtLeast(5)) == ">=5"

    def test_lower_bound(self):
        assert lower_bound(AtLeast(4)) == 4
        assert lower_bound(3) == 3

    def test_resolved_below(self):
        assert resolved_below(2, 3) is True
        assert resolved_below(3, 3) is False
        assert resolved_below(AtLeast(5), 3) is False
        assert resolved_below(AtLeast(2), 3) is None

    @given(digits, shifts, digits, shifts)
    def test_ultrametric(self, x_digits, x_shift, y_digits, y_shift):
        f = FieldParams(3)
        x = make_series(f, x_shift, x_digits)
        y = make_series(f, y_shift, y_digits)
        total = lower_bound(series_val(series_add(x, y)))
        assert total >= min(lower_bound(series_val(x)), lower_bound(series_val(y)))

    @given(digits, shifts, digits, shifts)
    def test_valuation_multiplicative(self, x_digits, x_shift, y_digits, y_shift):
        f = FieldParams(3)
        x = make_series(f, x_shift, x_digits)
        y = make_series(f, y_shift, y_digits)
        if x.is_zero or y.is_zero:
            return
        assert series_val(series_mul(x, y)) == series_val(x) + series_val(y)

    @given(digits, shifts, digits, shifts)
    def test_frobenius_multiplicative(self, x_digits, x_shift, y_digits, y_shift):
        f = FieldParams(3)
        x = make_series(f, x_shift, x_digits)
        y = make_series(f, y_shift, y_digits)
        expected = series_mul(frobenius(x), frobenius(y))
        assert frobenius(series_mul(x, y)) == expected
