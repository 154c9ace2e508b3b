from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from sympy import isprime
from sympy.ntheory.residue_ntheory import is_quad_residue

from .._error import InversionOfZero, ParameterError


class QuadExtElem(NamedTuple):
    """Element ``c + d*δ`` of the quadratic residue field, δ² = ν."""

    c: int
    d: int


def smallest_nonsquare(q: int) -> int:
    """Smallest quadratic non-residue modulo an odd prime ``q``."""
    return next(n for n in range(2, q) if not is_quad_residue(n, q))


@dataclass(frozen=True)
class FieldParams:
    """
    Residue field data and working precision.

    The base field is F = F_q((π)) truncated at ``precision`` π-digits,
    its unramified quadratic extension uses the residue field F_q[δ], δ² = ν.

    Parameters
    ----------
    q
        residue field cardinality, an odd prime
    precision
        number of π-digits carried by constructed elements, at least 2
    nonsquare
        quadratic non-residue ν modulo q, the smallest one if not specified

    Raises
    ------
    ParameterError
        if q is not an odd prime, ν is a square or the precision is too low
    """

    q: int
    precision: int = 12
    nonsquare: Optional[int] = field(default=None)

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 3 or not isprime(self.q):
            msg = f"q must be an odd prime, got {self.q!r}!"
            raise ParameterError(msg, "q", self.q)
        if self.precision < 2:
            raise ParameterError(
                f"Precision must be at least 2, got {self.precision!r}!",
                "precision",
                self.precision,
            )

        if self.nonsquare is None:
            object.__setattr__(self, "nonsquare", smallest_nonsquare(self.q))
        else:
            object.__setattr__(self, "nonsquare", self.nonsquare % self.q)

        if pow(self.nonsquare, (self.q - 1) // 2, self.q) != self.q - 1:
            raise ParameterError(
                f"{self.nonsquare!r} is a square modulo {self.q}!",
                "nonsquare",
                self.nonsquare,
            )

    def with_precision(self, precision: int) -> "FieldParams":
        """Same residue field with a different working precision."""
        return FieldParams(self.q, precision, self.nonsquare)

    def element(self, c: int, d: int = 0) -> QuadExtElem:
        """Reduce integers to a residue field element."""
        return QuadExtElem(c % self.q, d % self.q)

    @property
    def zero(self) -> QuadExtElem:
        """Additive identity."""
        return QuadExtElem(0, 0)

    @property
    def one(self) -> QuadExtElem:
        """Multiplicative identity."""
        return QuadExtElem(1, 0)

    @property
    def delta(self) -> QuadExtElem:
        """Square root of the non-residue."""
        return QuadExtElem(0, 1)

    def sub(self, x: QuadExtElem, y: QuadExtElem) -> QuadExtElem:
        """Difference of residues."""
        q = self.q
        return QuadExtElem((x[0] - y[0]) % q, (x[1] - y[1]) % q)

    def neg(self, x: QuadExtElem) -> QuadExtElem:
        """Additive inverse."""
        q = self.q
        return QuadExtElem(-x[0] % q, -x[1] % q)

    def mul(self, x: QuadExtElem, y: QuadExtElem) -> QuadExtElem:
        """Product of residues."""
        q = self.q
        c = (x[0] * y[0] + self.nonsquare * x[1] * y[1]) % q
        d = (x[0] * y[1] + x[1] * y[0]) % q
        return QuadExtElem(c, d)

    def scale(self, x: QuadExtElem, k: int) -> QuadExtElem:
        """Multiply by a prime field scalar."""
        q = self.q
        return QuadExtElem(x[0] * k % q, x[1] * k % q)

    def norm(self, x: QuadExtElem) -> int:
        """Norm to the prime field, ``x * bar(x)``."""
        return (x[0] * x[0] - self.nonsquare * x[1] * x[1]) % self.q

    def frobenius(self, x: QuadExtElem) -> QuadExtElem:
        """Conjugation ``c + dδ -> c - dδ``."""
        return QuadExtElem(x[0], -x[1] % self.q)

    def inv(self, x: QuadExtElem) -> QuadExtElem:
        """
        Multiplicative inverse.

        Raises
        ------
        InversionOfZero
            if x is zero
        """
        n = self.norm(x)
        if n == 0:
            raise InversionOfZero("Cannot invert zero in the residue field!")
        n_inv = pow(n, -1, self.q)
        return QuadExtElem(x[0] * n_inv % self.q, -x[1] * n_inv % self.q)

    def is_rational(self, x: QuadExtElem) -> bool:
        """Residue lies in the prime field."""
        return x[1] == 0
