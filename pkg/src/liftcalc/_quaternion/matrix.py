from dataclasses import dataclass

from .element import (
    QuatElem,
    quat_add,
    quat_equal,
    quat_inv,
    quat_mul,
    quat_neg,
    quat_sub,
)
from .order import OrderSpec


@dataclass(frozen=True)
class Mat2D:
    """2×2 matrix over D, entries in row order."""

    m11: QuatElem
    m12: QuatElem
    m21: QuatElem
    m22: QuatElem

    @classmethod
    def identity(cls, like: QuatElem) -> "Mat2D":
        """Identity matrix at the precision of ``like``."""
        one = QuatElem.from_int(like.field, 1, like.a.precision)
        zero = QuatElem.zero(like.field, like.a.precision)
        return cls(one, zero, zero, one)

    def __add__(self, other: "Mat2D") -> "Mat2D":
        return Mat2D(
            quat_add(self.m11, other.m11),
            quat_add(self.m12, other.m12),
            quat_add(self.m21, other.m21),
            quat_add(self.m22, other.m22),
        )

    def __matmul__(self, other: "Mat2D") -> "Mat2D":
        def dot(x1, y1, x2, y2):
            return quat_add(quat_mul(x1, y1), quat_mul(x2, y2))

        return Mat2D(
            dot(self.m11, other.m11, self.m12, other.m21),
            dot(self.m11, other.m12, self.m12, other.m22),
            dot(self.m21, other.m11, self.m22, other.m21),
            dot(self.m21, other.m12, self.m22, other.m22),
        )

    def scale_left(self, x: QuatElem) -> "Mat2D":
        """Multiply every entry by ``x`` from the left."""
        return Mat2D(
            quat_mul(x, self.m11),
            quat_mul(x, self.m12),
            quat_mul(x, self.m21),
            quat_mul(x, self.m22),
        )

    def row_times(self, left: QuatElem, right: QuatElem):
        """Row vector ``(left, right)`` times the matrix."""
        first = quat_add(quat_mul(left, self.m11), quat_mul(right, self.m21))
        second = quat_add(quat_mul(left, self.m12), quat_mul(right, self.m22))
        return first, second

    def equals(self, other: "Mat2D") -> bool:
        """Entries agree to their common precision."""
        return all(
            quat_equal(x, y)
            for x, y in (
                (self.m11, other.m11),
                (self.m12, other.m12),
                (self.m21, other.m21),
                (self.m22, other.m22),
            )
        )


def eigen_matrix(order: OrderSpec) -> Mat2D:
    """Matrix ``[[1, 1], [μ, μ̄]]`` of an order generator."""
    one = QuatElem.from_int(order.field, 1, order.constant_precision)
    return Mat2D(one, one, order.mu, order.mu_bar)


def eigen_matrix_inverse(order: OrderSpec) -> Mat2D:
    """Inverse ``(μ̄ - μ)⁻¹ [[μ̄, -1], [-μ, 1]]`` of :func:`eigen_matrix`."""
    one = QuatElem.from_int(order.field, 1, order.constant_precision)
    scale = quat_inv(quat_sub(order.mu_bar, order.mu))
    adjugate = Mat2D(order.mu_bar, quat_neg(one), quat_neg(order.mu), one)
    return adjugate.scale_left(scale)
