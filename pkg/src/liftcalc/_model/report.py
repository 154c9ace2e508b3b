from typing import List, Optional

from pydantic import ConfigDict, Field

from .serialise import Model

schema_version = "liftcalc/1"
"""Schema identifier carried by every report."""


class Report(Model):
    """Report base with the schema identifier, serialised as ``schema``."""

    model_config = ConfigDict(populate_by_name=True)

    schema_id: str = Field(default=schema_version, alias="schema")

    def to_json(self) -> str:
        """Serialise with two space indentation and a trailing newline."""
        return self.model_dump_json(by_alias=True, indent=2) + "\n"


class ComputeReport(Report):
    """
    Lifting quantities of one automorphism.

    Values are ``num/den`` strings, ``Infinite`` or ``InsufficientPrecision``.
    A value is ``None`` when no formula applies, for example
    :attr:`v_abar` of unramified orders.
    """

    q: int
    ext: str
    level: int
    precision: int
    gamma: str
    mu: str
    index: str
    v_x: Optional[str] = None
    v_y: Optional[str] = None
    v_z: Optional[str] = None
    v_abar: Optional[str] = None
    classification: Optional[str] = None
    distance: Optional[str] = None
    phi_gamma_dprime: Optional[str] = None

    @property
    def insufficient(self) -> bool:
        """Some value could not be resolved at working precision."""
        values = self.model_dump(exclude={"schema_id"}).values()
        return any(v == "InsufficientPrecision" for v in values)


class IdentityRow(Model):
    """Outcome of one identity over its samples."""

    name: str
    samples: int
    failures: int
    skipped: int
    max_discrepancy: str

    @property
    def unresolved(self) -> bool:
        """Every sample was skipped, so nothing was verified."""
        return self.samples == 0 and self.skipped > 0


class VerifyReport(Report):
    """Outcome of a verification run."""

    q: int
    ext: str
    level: int
    precision: int
    gl2_level: int
    samples: int
    seed: int
    rows: List[IdentityRow] = Field(default_factory=list)

    @property
    def failed_rows(self) -> List[IdentityRow]:
        """Rows with failing samples."""
        return [row for row in self.rows if row.failures]

    @property
    def unresolved_rows(self) -> List[IdentityRow]:
        """Rows without a single resolved sample."""
        return [row for row in self.rows if row.unresolved]


class TableRow(Model):
    """Lifting depth of one automorphism at one level."""

    gamma: str
    level: int
    v_x: Optional[str] = None
    classification: Optional[str] = None
    distance: Optional[str] = None


class TableReport(Report):
    """Lifting depths of a family of automorphisms across levels."""

    q: int
    ext: str
    precision: int
    rows: List[TableRow] = Field(default_factory=list)
