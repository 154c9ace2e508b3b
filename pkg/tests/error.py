import pytest

from liftcalc import (
    BudgetExceeded,
    ConversionError,
    IdentityFailure,
    InsufficientPrecision,
    InversionOfZero,
    LiftcalcError,
    NotShallow,
    ParameterError,
    RouteDisagreement,
    Unsupported,
    WrongCase,
    get_exit_code,
)


class TestExitCode:
    def test_no_error_is_success(self):
        assert get_exit_code(None) == 0

    @pytest.mark.parametrize(
        "error, code",
        [
            (ParameterError("bad q", "q", 4), 1),
            (ConversionError("bad literal"), 1),
            (InsufficientPrecision("digits", 14, 12), 2),
            (BudgetExceeded("too many", 10**9, 10**7), 3),
            (IdentityFailure("failed", []), 4),
        ],
    )
    def test_mapped_errors(self, error, code):
        assert get_exit_code(error) == code

    def test_subclass_uses_parent_code(self):
        class Deeper(InsufficientPrecision):
            pass

        assert get_exit_code(Deeper("digits", 3, 2)) == 2

    @pytest.mark.parametrize(
        "error",
        [
            LiftcalcError("generic"),
            WrongCase("other case"),
            Unsupported("outside"),
            NotShallow("deep"),
            ValueError("plain"),
        ],
    )
    def test_unmapped_errors_fail_generally(self, error):
        assert get_exit_code(error) == 1


class TestErrorAttributes:
    def test_parameter_error_is_value_error(self):
        error = ParameterError("q must be an odd prime", "q", 4)
        assert isinstance(error, ValueError)
        assert (error.name, error.value) == ("q", 4)

    def test_inversion_of_zero_is_zero_division(self):
        assert isinstance(InversionOfZero("zero"), ZeroDivisionError)

    def test_insufficient_precision(self):
        error = InsufficientPrecision("digits", 14, 12)
        assert (error.needed, error.available) == (14, 12)

    def test_budget_exceeded(self):
        error = BudgetExceeded("too many", 100, 10)
        assert (error.size, error.budget) == (100, 10)

    def test_route_disagreement(self):
        error = RouteDisagreement("v_y differs", "v_y", (1, 2))
        assert error.quantity == "v_y"
        assert error.values == (1, 2)
        assert isinstance(error, LiftcalcError)

    def test_message_kept(self):
        assert str(Unsupported("not a unit")) == "not a unit"
