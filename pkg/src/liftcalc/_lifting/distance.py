import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .._error import InsufficientPrecision
from .._field import AtLeast
from .._haar import MeasureSpace, UnitClass, abs_power, classes_at, refine, units_of
from .._model.serialise import StrEnum
from .._quaternion import QuatElem, quat_sub, quat_val
from .base import LiftingBase

logger = logging.getLogger(__name__)


class DepthClass(StrEnum):
    """Classification of automorphisms relative to an order."""

    shallow = "shallow"
    deep = "deep"


@dataclass(frozen=True)
class DistanceReport:
    """
    Distance of an element to a set.

    Attributes
    ----------
    distance
        ``min |γ - x|_D`` over the set, 0 when γ lies in it to precision
    valuation
        valuation of the distance, ``None`` for distance 0
    projections
        representatives of the classes attaining the distance
    resolution_level
        lattice valuation at which the projections were separated
    """

    distance: Fraction
    valuation: Optional[int]
    projections: List[QuatElem] = field(compare=False)
    resolution_level: int


@dataclass(frozen=True)
class Depth:
    """
    Shallow or deep classification.

    Attributes
    ----------
    depth_class
        shallow when the distance to O_F^× is at least the threshold
    gamma_prime
        projection to O_F^× used
    gamma_dprime
        difference γ - γ′
    threshold
        ``|π^(-1) μ|_D``
    distance
        distance report of γ to O_F^×
    """

    depth_class: DepthClass
    gamma_prime: QuatElem
    gamma_dprime: QuatElem
    threshold: Fraction
    distance: DistanceReport

    @property
    def is_shallow(self) -> bool:
        """Classification is shallow."""
        return self.depth_class is DepthClass.shallow


def distance_to(
    gamma: QuatElem, space: Optional[MeasureSpace] = None
) -> DistanceReport:
    """
    Distance of an element to a set enumerable by residue classes.

    Classes are refined until ``|γ - x|_D`` is constant on each,
    following the certificate of the integrator.

    Parameters
    ----------
    gamma
        element of D
    space
        set to measure the distance to, O_F^× if not specified

    Returns
    -------
    DistanceReport
        exact distance and projections

    Raises
    ------
    InsufficientPrecision
        if a class can neither be closed nor refined
        while the distance is not yet known to be zero
    """
    space = space or units_of(gamma.field)
    precision = max(gamma.a.precision, gamma.b.precision + 1)
    stack: List[UnitClass] = list(classes_at(space, 0, precision))
    stack.reverse()

    best: Optional[int] = None
    projections: List[QuatElem] = []
    level = 0

    while stack:
        cls = stack.pop()
        v = quat_val(quat_sub(gamma, cls.rep))
        lattice = cls.lattice_valuation(space.omega_valuation)

        if not isinstance(v, AtLeast) and v < lattice:
            if best is None or v > best:
                best, projections, level = v, [cls.rep], lattice
            elif v == best:
                projections.append(cls.rep)
                level = max(level, lattice)
            continue

        if isinstance(v, AtLeast) and v.bound <= lattice:
            # γ lies in this class to precision
            logger.debug("%r lies in %r to precision", gamma, space)
            return DistanceReport(Fraction(0), None, [cls.rep], lattice)

        children = list(refine(space, cls, precision))
        children.reverse()
        stack.extend(children)

    if best is None:
        raise InsufficientPrecision(
            f"Distance of {gamma!r} to {space!r} is unresolved!",
            needed=level,
            available=gamma.precision,
        )
    return DistanceReport(abs_power(gamma.field.q, best), best, projections, level)


class LiftingDistance(LiftingBase):
    """Distance, projection and the shallow or deep classification."""

    def distance_to(
        self, gamma: QuatElem, space: Optional[MeasureSpace] = None
    ) -> DistanceReport:
        """Distance to a set, O_F^× if not specified, see :func:`distance_to`."""
        return distance_to(gamma, space)

    @property
    def threshold_valuation(self) -> int:
        """Valuation of ``π^(-1) μ``."""
        return self.order.mu_valuation - 2

    def classify(self, gamma: QuatElem) -> Depth:
        """
        Classify a unit as shallow or deep.

        γ is shallow when ``||γ||_{O_F^×} >= |π^(-1) μ|_D``.

        Parameters
        ----------
        gamma
            unit of O_D

        Returns
        -------
        Depth
            classification with the projection used

        Raises
        ------
        Unsupported
            if γ is not a unit
        InsufficientPrecision
            if the distance is unresolved
        """
        self._require_unit(gamma)
        report = self.distance_to(gamma)
        threshold = abs_power(self.q, self.threshold_valuation)
        shallow = report.valuation is not None and (
            report.valuation <= self.threshold_valuation
        )
        prime = report.projections[0]
        return Depth(
            DepthClass.shallow if shallow else DepthClass.deep,
            prime,
            quat_sub(gamma, prime),
            threshold,
            report,
        )
