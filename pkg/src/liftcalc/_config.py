from configparser import ConfigParser
from os import environ
from pathlib import Path
from typing import Dict, Iterable, Mapping, Tuple, Union
from warnings import warn

PathLike = Union[str, Path]


class MissingConfigurationWarning(RuntimeWarning):
    """A run parameter is absent from the configuration read."""


def _variables() -> Tuple[Tuple[str, str], ...]:
    # Names are looked up on each call to honour reassigned *_var values
    import liftcalc as lc

    return (
        ("q", lc.q_var),
        ("ext", lc.ext_var),
        ("level", lc.level_var),
        ("precision", lc.precision_var),
        ("gl2_level", lc.gl2_level_var),
        ("seed", lc.seed_var),
    )


def read_variables(source: Mapping, warn_missing: bool = True) -> Dict[str, str]:
    """
    Collect ``LIFTCALC_*`` variables from a mapping.

    Returns
    -------
    Dict[str, str]
        raw string values keyed by :class:`RunConfig` field,
        absent variables left out
    """
    found = {key: source[var] for key, var in _variables() if var in source}
    if warn_missing:
        for key, var in _variables():
            if key not in found:
                warn(
                    f"Run parameter `{var}` not configured, default applies.",
                    MissingConfigurationWarning,
                    stacklevel=3,
                )
    return found


def read_ini(file_path: PathLike, must_exist: bool = True) -> ConfigParser:
    """
    Parse an INI file keeping variable names case sensitive.

    Raises
    ------
    FileNotFoundError
        if ``must_exist`` and the file is absent
    """
    parser = ConfigParser()
    parser.optionxform = str
    if not must_exist:
        parser.read(file_path)
        return parser

    with open(file_path, "r", encoding="utf-8") as f:
        parser.read_file(f)
    return parser


def config_from_environment() -> Dict[str, str]:
    """
    Read run parameters from environment variables.

    A :class:`MissingConfigurationWarning` is issued for each
    parameter not set. Values are strings and are validated
    only when a :class:`RunConfig` is built from them.

    Examples
    --------
    .. code:: python

        import liftcalc as lc

        conf = lc.config_from_environment()   # {"q": "5", ...}
    """
    return read_variables(environ)


def config_from_file(file_path: PathLike, section: str = "DEFAULT") -> Dict[str, str]:
    """
    Read run parameters from an INI file.

    Parameters
    ----------
    file_path
        configuration file
    section
        section to read, values of ``DEFAULT`` are inherited

    Returns
    -------
    Dict[str, str]
        raw string values keyed by :class:`RunConfig` field

    Raises
    ------
    FileNotFoundError
        if the file does not exist
    KeyError
        if the section does not exist
    """
    return read_variables(read_ini(file_path)[section])


def config_to_file(
    file_path: PathLike, values: Union[Iterable, dict], section: str = "DEFAULT"
) -> None:
    """
    Write run parameters to an INI file.

    Other sections and variables already in the file are kept.

    Parameters
    ----------
    file_path
        configuration file, created if absent
    values
        a dictionary keyed by variable name, or a sequence in the order
        ``q, ext, level, precision, gl2_level, seed`` which may be cut
        short and whose ``None`` items are skipped
    section
        section to write to

    Examples
    --------
    .. code:: python

        import liftcalc as lc

        lc.config_to_file("liftcalc.ini", (5, "ramified", 2))
        lc.config_to_file("liftcalc.ini", {lc.seed_var: 7}, section="SEEDED")
    """
    if isinstance(values, dict):
        pairs = values.items()
    else:
        pairs = zip((var for _, var in _variables()), values)
    written = {var: str(value) for var, value in pairs if value is not None}

    parser = read_ini(file_path, must_exist=False)
    if section not in parser:
        parser[section] = {}
    parser[section].update(written)

    with open(file_path, "w", encoding="utf-8") as f:
        parser.write(f)
