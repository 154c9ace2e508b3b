from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional, Tuple

from .._error import ParameterError
from .._field import FieldParams, QuadExtElem, SeriesElem, make_series
from .._model.serialise import StrEnum
from .._quaternion import Extension, OrderSpec, QuatElem
from .volume import abs_power


class SpaceKind(StrEnum):
    """Measure spaces of the integrals."""

    additive_pi_of = "additive_pi_of"
    units_of = "units_of"
    units_ok = "units_ok"
    units_order = "units_order"
    split_units = "split_units"
    split_nonunits = "split_nonunits"
    image = "image"


@dataclass(frozen=True)
class CoordRange:
    """
    Range π^shift O_F, or π^shift O_F^× when ``unit`` is set.

    Parameters
    ----------
    shift
        valuation of the range
    unit
        restrict the digit at π^shift to be nonzero
    """

    shift: int
    unit: bool = False

    @property
    def min_depth(self) -> int:
        """Smallest number of digits determining the range."""
        return self.shift + (1 if self.unit else 0)

    def volume(self, q: int) -> Fraction:
        """Additive volume normalised by O_F."""
        volume = abs_power(q, self.shift)
        return volume * (1 - Fraction(1, q)) if self.unit else volume


@dataclass(frozen=True)
class Box:
    """
    Box ``{a + c*ω : a in A, c in C}``.

    A box without ``c`` lies in F.
    """

    a: CoordRange
    c: Optional[CoordRange] = None

    def volume(self, q: int) -> Fraction:
        """Product volume normalised by O_K, or by O_F for boxes in F."""
        volume = self.a.volume(q)
        if self.c is not None:
            volume *= self.c.volume(q)
        return volume


@dataclass(frozen=True)
class MeasureSpace:
    """
    Disjoint union of boxes with a normalising mass.

    Parameters
    ----------
    kind
        name of the space
    field
        residue field parameters
    ext
        extension case fixing ω, ζ unramified and Π ramified
    boxes
        disjoint boxes covering the space
    normaliser
        additive mass of the subset that has measure 1
    zeta
        unramified residue ζ, δ if not specified
    """

    kind: SpaceKind
    field: FieldParams
    ext: Extension
    boxes: Tuple[Box, ...]
    normaliser: Fraction
    zeta: Optional[QuadExtElem] = None

    def __repr__(self):
        options = [f"kind={self.kind}", f"q={self.field.q}", f"ext={self.ext}"]
        if self.zeta is not None:
            options.append(f"zeta={tuple(self.zeta)}")
        return type(self).__name__ + "(" + ", ".join(options) + ")"

    @property
    def omega_valuation(self) -> int:
        """Valuation of the second coordinate vector."""
        return 1 if self.ext is Extension.ramified else 0

    @property
    def uniformizer_valuation(self) -> int:
        """Valuation of a uniformizer of the ambient field, F or K."""
        if all(box.c is None for box in self.boxes):
            return 2
        return 1 if self.ext is Extension.ramified else 2

    @property
    def total_mass(self) -> Fraction:
        """Measure of the whole space."""
        q = self.field.q
        return sum((box.volume(q) for box in self.boxes), Fraction(0)) / self.normaliser

    def omega(self, precision: int) -> QuatElem:
        """Second coordinate vector at precision."""
        if self.ext is Extension.ramified:
            return QuatElem.Pi(self.field, precision)
        if self.zeta is None:
            return QuatElem.delta(self.field, precision)
        zeta = SeriesElem.from_residue(self.field, self.zeta, precision)
        return QuatElem.from_series(zeta)


@dataclass(frozen=True)
class UnitClass:
    """
    Class ``rep + π^depth_a O_F + π^depth_c ω O_F`` inside a box.

    Attributes
    ----------
    rep
        representative with digits below the depths
    depth_a
        number of determined digits of the first coordinate
    depth_c
        number of determined digits of the second coordinate,
        ``None`` for boxes in F
    volume
        measure of the class
    """

    box: Box
    a: SeriesElem
    c: Optional[SeriesElem]
    depth_a: int
    depth_c: Optional[int]
    rep: QuatElem
    volume: Fraction

    def lattice_valuation(self, omega_valuation: int) -> int:
        """Valuation of the translation lattice of the class."""
        if self.depth_c is None:
            return 2 * self.depth_a
        return min(2 * self.depth_a, 2 * self.depth_c + omega_valuation)


def _full(shift: int = 0) -> CoordRange:
    return CoordRange(shift)


def _units(shift: int = 0) -> CoordRange:
    return CoordRange(shift, unit=True)


def _unit_boxes(order: OrderSpec) -> Tuple[Box, ...]:
    if order.is_ramified:
        return (Box(_units(), _full()),)
    return (Box(_units(), _full()), Box(_full(1), _units()))


def _space(
    kind: SpaceKind,
    field: FieldParams,
    ext: Extension,
    boxes: Tuple[Box, ...],
    normaliser: Fraction,
    zeta: Optional[QuadExtElem] = None,
) -> MeasureSpace:
    if zeta == field.delta:
        zeta = None
    return MeasureSpace(kind, field, ext, boxes, normaliser, zeta)


def additive_pi_of(field: FieldParams) -> MeasureSpace:
    """πO_F in the additive measure normalised by O_F."""
    return _space(
        SpaceKind.additive_pi_of,
        field,
        Extension.unramified,
        (Box(_full(1)),),
        Fraction(1),
    )


def units_of(field: FieldParams) -> MeasureSpace:
    """O_F^× normalised to mass 1."""
    q = field.q
    return _space(
        SpaceKind.units_of,
        field,
        Extension.unramified,
        (Box(_units()),),
        1 - Fraction(1, q),
    )


def units_ok(order: OrderSpec) -> MeasureSpace:
    """O_K^× normalised to mass 1."""
    boxes = _unit_boxes(order)
    mass = sum((b.volume(order.field.q) for b in boxes), Fraction(0))
    return _space(SpaceKind.units_ok, order.field, order.ext, boxes, mass, order.zeta)


def units_order(order: OrderSpec) -> MeasureSpace:
    """
    O^× in the measure normalised by O_K^×.

    Its total mass is the inverse of the unit index.
    """
    if order.is_maximal and not order.is_ramified:
        boxes = _unit_boxes(order)
    else:
        boxes = (Box(_units(), _full(order.level)),)
    normaliser = units_ok(order).normaliser
    return _space(
        SpaceKind.units_order, order.field, order.ext, boxes, normaliser, order.zeta
    )


def split_units(order: OrderSpec) -> MeasureSpace:
    """Piece O_F^× ⊕ ζO_F of the unramified O_K^×, normalised by O_K^×."""
    normaliser = units_ok(order).normaliser
    return _space(
        SpaceKind.split_units,
        order.field,
        order.ext,
        (Box(_units(), _full()),),
        normaliser,
        order.zeta,
    )


def split_nonunits(order: OrderSpec) -> MeasureSpace:
    """Piece πO_F ⊕ ζO_F^× of the unramified O_K^×, normalised by O_K^×."""
    normaliser = units_ok(order).normaliser
    return _space(
        SpaceKind.split_nonunits,
        order.field,
        order.ext,
        (Box(_full(1), _units()),),
        normaliser,
        order.zeta,
    )


def image_space(order: OrderSpec) -> MeasureSpace:
    """
    Image O_F^× ⊕ ω̄O_F of the deep part, normalised by O_K^×.

    The image of l ↦ l22 + l21 μ⁻¹ is spanned by ζ⁻¹, a unit multiple
    of the conjugate ζ̄, in the unramified case and by Π in the ramified one.
    """
    normaliser = units_ok(order).normaliser
    zeta = order.zeta
    # ζ̄ = -ζ spans the same lattice when c = 0
    if zeta is not None and zeta.c != 0:
        zeta = order.field.element(zeta.c, -zeta.d)
    return _space(
        SpaceKind.image,
        order.field,
        order.ext,
        (Box(_units(), _full()),),
        normaliser,
        zeta,
    )


def _digit_series(
    field: FieldParams, rng: CoordRange, depth: int, precision: int
) -> Iterator[SeriesElem]:
    # Series with digits in [shift, depth), leading digit nonzero for units
    q = field.q
    count = depth - rng.shift
    if count <= 0:
        yield SeriesElem.zero(field, precision)
        return
    for digits in product(range(q), repeat=count):
        if rng.unit and digits[0] == 0:
            continue
        yield SeriesElem.from_digits(field, digits, rng.shift, precision)


def class_depths(
    space: MeasureSpace, box: Box, lattice: int
) -> Tuple[int, Optional[int]]:
    """
    Digit depths of the classes of a box at a lattice valuation.

    The depths are the smallest making the lattice valuation
    at least ``lattice``, clamped below by the box ranges.
    """
    depth_a = max(-(-lattice // 2), box.a.min_depth)
    if box.c is None:
        return depth_a, None
    depth_c = max(-(-(lattice - space.omega_valuation) // 2), box.c.min_depth, 0)
    return depth_a, depth_c


def make_class(
    space: MeasureSpace,
    box: Box,
    a: SeriesElem,
    c: Optional[SeriesElem],
    depth_a: int,
    depth_c: Optional[int],
    precision: int,
) -> UnitClass:
    """Assemble a class with its representative and measure."""
    q = space.field.q
    volume = abs_power(q, depth_a)
    rep = QuatElem.from_series(a)
    if c is not None:
        volume *= abs_power(q, depth_c)
        rep = rep + space.omega(precision) * c
    return UnitClass(box, a, c, depth_a, depth_c, rep, volume / space.normaliser)


def classes_at(
    space: MeasureSpace, lattice: int, precision: Optional[int] = None
) -> Iterator[UnitClass]:
    """Classes of all boxes at a lattice valuation, in box and digit order."""
    f = space.field
    precision = f.precision if precision is None else precision
    for box in space.boxes:
        depth_a, depth_c = class_depths(space, box, lattice)
        for a in _digit_series(f, box.a, depth_a, precision):
            if box.c is None:
                yield make_class(space, box, a, None, depth_a, None, precision)
                continue
            for c in _digit_series(f, box.c, depth_c, precision):
                yield make_class(space, box, a, c, depth_a, depth_c, precision)


def refine(space: MeasureSpace, cls: UnitClass, precision: int) -> Iterator[UnitClass]:
    """Split a class along the coordinates that attain its lattice valuation."""
    f = space.field
    lattice = cls.lattice_valuation(space.omega_valuation)
    step_a = 2 * cls.depth_a == lattice
    step_c = cls.depth_c is not None and (
        2 * cls.depth_c + space.omega_valuation == lattice
    )

    a_choices = [cls.a]
    if step_a:
        a_choices = [
            cls.a + make_series(f, cls.depth_a, [f.element(t)], precision)
            for t in range(f.q)
        ]
    depth_a = cls.depth_a + 1 if step_a else cls.depth_a

    if cls.depth_c is None:
        for a in a_choices:
            yield make_class(space, cls.box, a, None, depth_a, None, precision)
        return

    c_choices = [cls.c]
    if step_c:
        c_choices = [
            cls.c + make_series(f, cls.depth_c, [f.element(t)], precision)
            for t in range(f.q)
        ]
    depth_c = cls.depth_c + 1 if step_c else cls.depth_c

    for a in a_choices:
        for c in c_choices:
            yield make_class(space, cls.box, a, c, depth_a, depth_c, precision)


def enumerate_unit_classes(
    space: MeasureSpace, m: int, precision: Optional[int] = None
) -> Iterator[Tuple[QuatElem, Fraction]]:
    """
    Representatives and volumes of the classes at level m.

    Level m means classes modulo π_K^m, π_K a uniformizer of the ambient field.

    Parameters
    ----------
    space
        space to enumerate
    m
        level, positive
    precision
        precision of the representatives, the field precision if not specified

    Raises
    ------
    ParameterError
        if the level is not positive
    """
    if m < 1:
        raise ParameterError(f"Level must be positive, got {m!r}!", "m", m)
    lattice = m * space.uniformizer_valuation
    for cls in classes_at(space, lattice, precision):
        yield cls.rep, cls.volume
