import pytest

from liftcalc import (
    ConversionError,
    QuatElem,
    SeriesElem,
    from_quat_literal,
    from_series_literal,
    quat_sub,
    to_quat_literal,
    to_series_literal,
)


class TestFromSeriesLiteral:
    def test_rational_digits(self, field):
        x = from_series_literal("0:1,2", field)
        assert x == SeriesElem.from_digits(field, [1, 2])

    def test_shift(self, field):
        x = from_series_literal("2:1", field)
        assert x == SeriesElem.uniformizer_power(field, 2)

    def test_negative_shift(self, field):
        x = from_series_literal("-1:1", field)
        assert x.v_min == -1

    def test_quadratic_digit(self, field):
        x = from_series_literal("1:1+1*j", field)
        assert x.v_min == 1
        assert x.digit(1) == field.element(1, 1)

    def test_negative_quadratic_part_reduced(self, field):
        x = from_series_literal("0:1-1*j", field)
        assert x.digit(0) == field.element(1, 2)

    def test_pure_quadratic_digit(self, field):
        x = from_series_literal("0:2*j", field)
        assert x.digit(0) == field.element(0, 2)

    def test_whitespace_accepted(self, field):
        x = from_series_literal(" 0 : 1 + 1 * j , 2", field)
        assert x == from_series_literal("0:1+1*j,2", field)

    def test_empty_digits_are_zero(self, field):
        assert from_series_literal("0:", field).is_zero
        assert from_series_literal("0:0", field).is_zero

    def test_precision_argument(self, field):
        assert from_series_literal("0:1", field, precision=5).precision == 5

    def test_digit_at_precision_raises(self, field):
        with pytest.raises(ConversionError):
            from_series_literal("11:0,1", field)

    def test_zero_digit_at_precision_accepted(self, field):
        from_series_literal("11:1,0", field)

    @pytest.mark.parametrize(
        "text", ["", "1", "abc", "0:x", "0:1 1*j", "0:1*k", "a:1", "0:1,,2"]
    )
    def test_invalid_raises(self, field, text):
        with pytest.raises(ConversionError):
            from_series_literal(text, field)


class TestToSeriesLiteral:
    def test_zero(self, field):
        assert to_series_literal(SeriesElem.zero(field)) == "0:0"

    def test_trailing_zeros_omitted(self, field):
        x = SeriesElem.from_digits(field, [1, 0, 2, 0, 0])
        assert to_series_literal(x) == "0:1,0,2"

    def test_literal_reproduced(self, field):
        text = "1:1+1*j,0,2*j,2"
        assert to_series_literal(from_series_literal(text, field)) == text


class TestQuatLiteral:
    def test_both_parts(self, field):
        x = from_quat_literal("a=0:1;b=0:0+1*j", field)
        assert x.a == SeriesElem.from_int(field, 1)
        assert x.b == SeriesElem.delta(field)

    def test_missing_part_is_zero(self, field):
        x = from_quat_literal("b=0:1", field)
        assert x.a.is_zero
        assert quat_sub(x, QuatElem.Pi(field)).is_zero

    def test_trailing_separator_accepted(self, field):
        assert from_quat_literal("a=0:1;", field) == from_quat_literal("a=0:1", field)

    def test_rendered(self, field):
        x = QuatElem(SeriesElem.from_int(field, 1), SeriesElem.delta(field))
        assert to_quat_literal(x) == "a=0:1;b=0:1*j"

    def test_zero_rendered(self, field):
        assert to_quat_literal(QuatElem.zero(field)) == "a=0:0;b=0:0"

    def test_repr_shows_literal(self, field):
        assert "a=0:0;b=0:1" in repr(QuatElem.Pi(field))

    @pytest.mark.parametrize(
        "text", ["", ";", "c=0:1", "a=0:1;a=0:2", "a0:1", "a=0:1;b=x"]
    )
    def test_invalid_raises(self, field, text):
        with pytest.raises(ConversionError):
            from_quat_literal(text, field)
