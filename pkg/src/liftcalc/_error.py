from typing import Optional, Type


class LiftcalcError(Exception):
    """Base error for all failures raised by liftcalc."""


class ParameterError(LiftcalcError, ValueError):
    """
    Invalid field, order or run parameters.

    Attributes
    ----------
    name
        name of the offending parameter
    value
        offending value
    """

    def __init__(self, message: str, name: str, value: object):
        super(ParameterError, self).__init__(message)
        self.name = name
        self.value = value


class ConversionError(LiftcalcError):
    """Error in conversion of a series or quaternion literal."""


class InversionOfZero(LiftcalcError, ZeroDivisionError):
    """Element to invert is zero to working precision."""


class InsufficientPrecision(LiftcalcError):
    """
    A result depends on digits beyond the working precision.

    Attributes
    ----------
    needed
        valuation that had to be resolved
    available
        valuation up to which digits are known
    """

    def __init__(self, message: str, needed: int, available: int):
        super(InsufficientPrecision, self).__init__(message)
        self.needed = needed
        self.available = available


class BudgetExceeded(LiftcalcError):
    """
    An enumeration would exceed its size budget.

    Attributes
    ----------
    size
        number of items the enumeration would produce
    budget
        maximum number of items allowed
    """

    def __init__(self, message: str, size: int, budget: int):
        super(BudgetExceeded, self).__init__(message)
        self.size = size
        self.budget = budget


class WrongCase(LiftcalcError):
    """Operation is only defined for the other extension case."""


class Unsupported(LiftcalcError):
    """Input lies outside the hypotheses under which a formula is stated."""


class NotShallow(LiftcalcError):
    """Shallow closed form requested for a deep element."""


class RouteDisagreement(LiftcalcError):
    """
    Two independent computations of one quantity disagree.

    Attributes
    ----------
    quantity
        name of the computed quantity
    values
        the disagreeing values, in route order
    """

    def __init__(self, message: str, quantity: str, values: tuple):
        super(RouteDisagreement, self).__init__(message)
        self.quantity = quantity
        self.values = values


class IdentityFailure(LiftcalcError):
    """
    A verification suite recorded failing samples.

    Attributes
    ----------
    rows
        identity rows with nonzero failures
    """

    def __init__(self, message: str, rows: list):
        super(IdentityFailure, self).__init__(message)
        self.rows = rows


exit_codes = {
    ParameterError: 1,
    ConversionError: 1,
    InsufficientPrecision: 2,
    BudgetExceeded: 3,
    IdentityFailure: 4,
}


def get_exit_code(error: Optional[BaseException]) -> int:
    """Get command line exit code of an error or 0 when there is none."""
    if error is None:
        return 0

    cls: Type[BaseException]
    for cls in type(error).__mro__:
        code = exit_codes.get(cls, None)
        if code is not None:
            return code
    return 1
