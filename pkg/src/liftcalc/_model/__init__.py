from .report import (
    ComputeReport,
    IdentityRow,
    Report,
    TableReport,
    TableRow,
    VerifyReport,
    schema_version,
)
from .run import Command, Identity, OutputFormat, parse_levels
from .serialise import Model, StrEnum, UnknownModelAttributeWarning
