"""
Enumeration of GL₂(O_F / π^N) and integration of bilinear integrands.

An integrand ``g -> |R(g)|_D^(-1)`` with ``R(g) = Σ g_ij P_ij`` is linear
over F_q in the π-digits of g, so the coordinates of R(g) are computed
for all matrices at once as a product of digit tables modulo q.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from .._error import BudgetExceeded, ParameterError
from .._field import SeriesElem
from .._quaternion import QuatElem
from .._value import ValueExt

logger = logging.getLogger(__name__)

budget = 10**8
"""Largest number of matrices q^(4N) an enumeration may span."""

Digits = Tuple[int, ...]


def gl2_order(q: int, level: int) -> int:
    """Cardinality of GL₂(O_F / π^level)."""
    return (q * q - 1) * (q * q - q) * q ** (4 * (level - 1))


def check_budget(q: int, level: int) -> None:
    """
    Validate the size of an enumeration.

    Raises
    ------
    ParameterError
        if the level is not positive
    BudgetExceeded
        if q^(4N) exceeds :data:`budget`
    """
    if level < 1:
        msg = f"GL₂ level must be positive, got {level!r}!"
        raise ParameterError(msg, "level", level)
    size = q ** (4 * level)
    if size > budget:
        raise BudgetExceeded(
            f"Enumerating GL₂ at q={q}, N={level} spans {size} matrices!",
            size=size,
            budget=budget,
        )


def residue_matrices(q: int) -> List[Digits]:
    """Matrices (g11, g12, g21, g22) of GL₂(F_q) in lexicographic order."""
    return [g for g in product(range(q), repeat=4) if (g[0] * g[3] - g[1] * g[2]) % q]


def enumerate_gl2(q: int, level: int) -> Iterator[Tuple[Tuple[Digits, ...], Fraction]]:
    """
    Matrices over O_F / π^N with unit determinant.

    Yields
    ------
    Tuple[Tuple[Digits, ...], Fraction]
        entries (g11, g12, g21, g22) as π-digit tuples of length N,
        and the weight |GL₂(O_F / π^N)|^(-1)

    Raises
    ------
    BudgetExceeded
        if q^(4N) exceeds :data:`budget`
    """
    check_budget(q, level)
    weight = Fraction(1, gl2_order(q, level))
    for base in residue_matrices(q):
        for high in product(range(q), repeat=4 * (level - 1)):
            entries = tuple(
                (base[e],) + high[e * (level - 1) : (e + 1) * (level - 1)]
                for e in range(4)
            )
            yield entries, weight


class _Layout:
    """Column layout of the flattened coordinates of an element of D."""

    def __init__(self, coefficients: Sequence[QuatElem]):
        a_parts = [c.a for c in coefficients]
        b_parts = [c.b for c in coefficients]
        self.top_a = min(x.precision for x in a_parts)
        self.top_b = min(x.precision for x in b_parts)
        self.low_a = min([x.v_min for x in a_parts] + [self.top_a])
        self.low_b = min([x.v_min for x in b_parts] + [self.top_b])
        self.width_a = 2 * (self.top_a - self.low_a)
        self.width_b = 2 * (self.top_b - self.low_b)

    @property
    def width(self) -> int:
        return self.width_a + self.width_b

    def _fill(self, out: np.ndarray, x: SeriesElem, low: int, top: int, shift: int):
        for e in range(low, top):
            source = e - shift
            if source < x.v_min or source >= x.precision:
                continue
            c, d = x.digit(source)
            out[2 * (e - low)] = c
            out[2 * (e - low) + 1] = d

    def vector(self, x: QuatElem, shift: int) -> np.ndarray:
        """Coordinates of ``π^shift * x`` below the common precision."""
        out = np.zeros(self.width, dtype=np.int64)
        self._fill(out[: self.width_a], x.a, self.low_a, self.top_a, shift)
        self._fill(out[self.width_a :], x.b, self.low_b, self.top_b, shift)
        return out

    def valuations(self, rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Valuations v_D of flattened elements.

        Returns
        -------
        Tuple[np.ndarray, np.ndarray, np.ndarray]
            valuation or its lower bound, resolved flags and zero flags
        """
        n = rows.shape[0]
        a = rows[:, : self.width_a].reshape(n, -1, 2).any(axis=2)
        b = rows[:, self.width_a :].reshape(n, -1, 2).any(axis=2)
        has_a = a.any(axis=1) if a.shape[1] else np.zeros(n, dtype=bool)
        has_b = b.any(axis=1) if b.shape[1] else np.zeros(n, dtype=bool)
        first_a = a.argmax(axis=1) if a.shape[1] else np.zeros(n, dtype=np.int64)
        first_b = b.argmax(axis=1) if b.shape[1] else np.zeros(n, dtype=np.int64)

        va = np.where(has_a, 2 * (self.low_a + first_a), 2 * self.top_a)
        vb = np.where(has_b, 2 * (self.low_b + first_b) + 1, 2 * self.top_b + 1)
        v = np.minimum(va, vb)
        # Parities differ, so the minimum is attained by one coordinate only
        resolved = np.where(va < vb, has_a, has_b)
        zero = ~(has_a | has_b)
        return v, resolved, zero


def _high_digits(q: int, level: int) -> np.ndarray:
    count = 4 * (level - 1)
    if count == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(product(range(q), repeat=count)), dtype=np.int64)


def integrate_gl2(
    coefficients: Sequence[QuatElem], q: int, level: int
) -> Dict[int, ValueExt]:
    """
    Integrate ``|Σ g_ij P_ij|_D^(-1)`` over GL₂(O_F) by enumeration mod π^N.

    A matrix is certified when the valuation of R(g) is resolved strictly
    below ``2N + min v_D(P_ij)``, the valuation of the change of R(g)
    over the class of g modulo π^N.

    Parameters
    ----------
    coefficients
        P_11, P_12, P_21, P_22
    q
        residue field cardinality
    level
        enumeration level N

    Returns
    -------
    Dict[int, ValueExt]
        integral restricted to Ω(π^n) by n = v(g_21) for n < N,
        and to Γ(π^N) under key N. A group with a failing certificate is
        Infinite when R(g) vanishes to precision and InsufficientPrecision
        otherwise.

    Raises
    ------
    BudgetExceeded
        if q^(4N) exceeds :data:`budget`
    """
    check_budget(q, level)
    layout = _Layout(coefficients)
    min_val = min(
        c.val if isinstance(c.val, int) else c.val.bound for c in coefficients
    )
    certificate = 2 * level + min_val

    # basis[e, t] = coordinates of π^t P_e
    basis = np.stack(
        [
            np.stack([layout.vector(c, t) for t in range(level)])
            for c in coefficients
        ]
    )
    low_basis = basis[:, 0, :]
    high_basis = basis[:, 1:, :].reshape(4 * (level - 1), layout.width)
    high = _high_digits(q, level)
    high_part = (high @ high_basis) % q if level > 1 else np.zeros(
        (1, layout.width), dtype=np.int64
    )

    # Valuation of g_21 from its high digits, N when they all vanish
    if level > 1:
        g21 = high[:, 2 * (level - 1) : 3 * (level - 1)] != 0
        high_g21 = np.where(g21.any(axis=1), g21.argmax(axis=1) + 1, level)
    else:
        high_g21 = np.full(1, level)

    counts: Dict[int, Dict[int, int]] = {n: {} for n in range(level + 1)}
    failures: Dict[int, str] = {}

    residues = residue_matrices(q)
    logger.info(
        "Enumerating GL₂ at q=%d, N=%d: %d blocks of %d matrices",
        q,
        level,
        len(residues),
        high.shape[0],
    )
    for i, base in enumerate(residues):
        rows = (np.asarray(base, dtype=np.int64) @ low_basis + high_part) % q
        v, resolved, zero = layout.valuations(rows)
        n_g21 = np.full(rows.shape[0], 0) if base[2] else high_g21
        ok = resolved & (v < certificate)

        for n in np.unique(n_g21).tolist():
            in_group = n_g21 == n
            bad = in_group & ~ok
            if bad.any():
                kind = "infinite" if (bad & zero).any() else "insufficient"
                if failures.get(n) != "infinite":
                    failures[n] = kind
            keys, amounts = np.unique(v[in_group & ok], return_counts=True)
            group = counts[n]
            for key, amount in zip(keys.tolist(), amounts.tolist()):
                group[key] = group.get(key, 0) + amount
        logger.debug("Block %d/%d done", i + 1, len(residues))

    weight = Fraction(1, gl2_order(q, level))
    result = {}
    for n, group in counts.items():
        failure = failures.get(n)
        if failure == "infinite":
            result[n] = ValueExt.infinite()
        elif failure == "insufficient":
            result[n] = ValueExt.insufficient()
        else:
            total = sum(
                (Fraction(q) ** v * amount for v, amount in group.items()), Fraction(0)
            )
            result[n] = ValueExt.finite(total * weight)
    return result


def total_integral(groups: Dict[int, ValueExt]) -> ValueExt:
    """Sum the groups of :func:`integrate_gl2`."""
    total = ValueExt.finite(0)
    for n in sorted(groups):
        total = total + groups[n]
    return total
