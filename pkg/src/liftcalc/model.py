"""Report and run configuration models."""

from liftcalc._model import (
    Command,
    ComputeReport,
    Identity,
    IdentityRow,
    Model,
    OutputFormat,
    Report,
    StrEnum,
    TableReport,
    TableRow,
    UnknownModelAttributeWarning,
    VerifyReport,
    schema_version,
)

_classes = [
    Command,
    ComputeReport,
    Identity,
    IdentityRow,
    Model,
    OutputFormat,
    Report,
    StrEnum,
    TableReport,
    TableRow,
    UnknownModelAttributeWarning,
    VerifyReport,
]

for _cls in _classes:
    _cls.__module__ = "liftcalc.model"
