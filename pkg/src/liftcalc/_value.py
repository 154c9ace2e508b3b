from fractions import Fraction
from typing import Optional, Union

from ._model.serialise import StrEnum


class ValueKind(StrEnum):
    """Kinds of extended values."""

    finite = "finite"
    infinite = "infinite"
    insufficient_precision = "insufficient_precision"


def format_rational(value: Fraction) -> str:
    """Render a rational as ``num/den`` in lowest terms, integers included."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class ValueExt:
    """
    Exact non-negative rational extended by Infinite and InsufficientPrecision.

    Arithmetic is absorbing: InsufficientPrecision absorbs everything,
    Infinite absorbs finite values.
    Use the constructors :meth:`finite`, :meth:`infinite`
    and :meth:`insufficient` instead of instantiating directly.

    Examples
    --------
    .. code:: python

        ValueExt.finite(Fraction(1, 2)) + ValueExt.finite(1)  # 3/2
        ValueExt.finite(2) + ValueExt.infinite()               # Infinite
        str(ValueExt.insufficient())                           # InsufficientPrecision
    """

    __slots__ = ("kind", "value")

    def __init__(self, kind: ValueKind, value: Optional[Fraction] = None):
        self.kind = kind
        self.value = value

    @classmethod
    def finite(cls, value: Union[int, Fraction]) -> "ValueExt":
        """Finite value."""
        return cls(ValueKind.finite, Fraction(value))

    @classmethod
    def infinite(cls) -> "ValueExt":
        """Infinite value."""
        return cls(ValueKind.infinite)

    @classmethod
    def insufficient(cls) -> "ValueExt":
        """Value that could not be resolved at working precision."""
        return cls(ValueKind.insufficient_precision)

    @property
    def is_finite(self) -> bool:
        """Value is a finite rational."""
        return self.kind is ValueKind.finite

    @property
    def is_infinite(self) -> bool:
        """Value is Infinite."""
        return self.kind is ValueKind.infinite

    @property
    def is_insufficient(self) -> bool:
        """Value could not be resolved."""
        return self.kind is ValueKind.insufficient_precision

    def _absorbing(self, other: "ValueExt") -> Optional["ValueExt"]:
        if self.is_insufficient or other.is_insufficient:
            return ValueExt.insufficient()
        if self.is_infinite or other.is_infinite:
            return ValueExt.infinite()
        return None

    @staticmethod
    def _coerce(other) -> "ValueExt":
        if isinstance(other, ValueExt):
            return other
        if isinstance(other, (int, Fraction)):
            return ValueExt.finite(other)
        raise TypeError(f"Cannot combine ValueExt with {type(other).__name__}!")

    def __add__(self, other) -> "ValueExt":
        other = self._coerce(other)
        absorbed = self._absorbing(other)
        if absorbed is not None:
            return absorbed
        return ValueExt.finite(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, other) -> "ValueExt":
        other = self._coerce(other)
        absorbed = self._absorbing(other)
        if absorbed is not None:
            return absorbed
        return ValueExt.finite(self.value * other.value)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.kind is other.kind and self.value == other.value

    def __hash__(self):
        return hash((self.kind, self.value))

    def __repr__(self):
        if self.is_finite:
            return type(self).__name__ + f".finite({format_rational(self.value)!r})"
        return type(self).__name__ + f"({self.kind.name})"

    def __str__(self):
        if self.is_finite:
            return format_rational(self.value)
        if self.is_infinite:
            return "Infinite"
        return "InsufficientPrecision"
