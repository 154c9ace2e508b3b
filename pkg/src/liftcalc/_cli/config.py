from os import environ
from typing import Any, Dict, List, Mapping, Optional, Tuple

from pydantic import Field, ValidationError, field_validator

from .._config import read_ini, read_variables
from .._error import ParameterError
from .._field import FieldParams
from .._model import Command, Identity, Model, OutputFormat, parse_levels
from .._quaternion import Extension, OrderSpec

defaults: Dict[str, Any] = {
    "q": 3,
    "ext": Extension.unramified,
    "level": 0,
    "precision": 12,
    "gl2_level": 2,
    "samples": 20,
    "seed": 0,
    "format": OutputFormat.json,
}
"""Built-in run configuration defaults."""


class RunConfig(Model):
    """
    Parameters of a command line run.

    Use :meth:`from_sources` to merge flags, files and the environment.
    """

    command: Optional[Command] = None
    q: int = defaults["q"]
    ext: Extension = defaults["ext"]
    level: int = defaults["level"]
    precision: int = defaults["precision"]
    gl2_level: int = defaults["gl2_level"]
    samples: int = defaults["samples"]
    seed: int = defaults["seed"]
    format: OutputFormat = defaults["format"]
    gamma: List[str] = Field(default_factory=list)
    identity: List[Identity] = Field(default_factory=lambda: [Identity.all])
    levels: Optional[Tuple[int, int]] = None
    out: Optional[str] = None

    @field_validator("level", "gl2_level", "samples")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"must be non-negative, got {value!r}")
        return value

    @field_validator("levels", mode="before")
    @classmethod
    def _level_range(cls, value):
        if isinstance(value, str):
            return parse_levels(value)
        return value

    @property
    def field(self) -> FieldParams:
        """Field parameters, validated by :class:`FieldParams`."""
        return FieldParams(self.q, self.precision)

    @property
    def order(self) -> OrderSpec:
        """Order of the configured extension and level."""
        return OrderSpec(self.field, self.ext, self.level)

    @classmethod
    def from_sources(
        cls,
        args: Mapping[str, Any],
        defaults: Optional[Mapping[str, Any]] = None,
        environment: bool = True,
    ) -> "RunConfig":
        """
        Merge run parameters from their sources.

        Precedence from high to low: ``args``, the INI file named by
        ``args["config"]``, environment variables and ``defaults``.
        Values of ``None`` in ``args`` are treated as missing.

        Parameters
        ----------
        args
            command line values by field name, with optional keys
            ``config`` and ``section`` naming an INI file
        defaults
            lowest precedence values
        environment
            read environment variables

        Raises
        ------
        ParameterError
            if the merged values are invalid
        """
        merged: Dict[str, Any] = dict(defaults or {})
        if environment:
            merged.update(read_variables(environ, warn_missing=False))

        file_path = args.get("config")
        if file_path is not None:
            section = args.get("section") or "DEFAULT"
            parser = read_ini(file_path)
            if not parser.has_section(section) and section != "DEFAULT":
                msg = f"Section {section!r} not found in {file_path!r}!"
                raise ParameterError(msg, "section", section)
            merged.update(read_variables(parser[section], warn_missing=False))

        ignored = {"config", "section", "verbose"}
        merged.update(
            {k: v for k, v in args.items() if v is not None and k not in ignored}
        )

        try:
            config = cls(**merged)
        except ValidationError as e:
            error = e.errors()[0]
            name = ".".join(str(p) for p in error["loc"])
            msg = f"Invalid run parameter `{name}`: {error['msg']}!"
            raise ParameterError(msg, name, error.get("input")) from e

        # Field guards on q and the precision
        FieldParams(config.q, config.precision)
        return config
