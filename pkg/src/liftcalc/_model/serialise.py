from enum import Enum, EnumMeta
from warnings import warn

from pydantic import BaseModel


def _member_key(name: str) -> str:
    # "GL2-Pairing" -> "gl2_pairing"
    return name.strip().lower().replace("-", "_")


class StrEnumMeta(EnumMeta):
    """Member lookup ignoring case and accepting dashes for underscores."""

    def __getitem__(cls, name: str):
        return super().__getitem__(_member_key(name))


class StrEnum(str, Enum, metaclass=StrEnumMeta):
    """
    String enumeration converted to text by member name.

    Members are looked up case insensitively by name or value,
    so ``Identity("GL2-Pairing")`` and ``Identity["gl2_pairing"]`` agree.
    Member names are expected in lower case.
    """

    @classmethod
    def _missing_(cls, value):
        if not isinstance(value, str):
            return None
        key = _member_key(value)
        for member in cls:
            if member.name == key or _member_key(member.value) == key:
                return member
        return None

    def __str__(self):
        return self.name


class Model(BaseModel):
    """
    Report model base.

    Attributes not declared by the model are dropped when reading,
    and each one raises an :class:`UnknownModelAttributeWarning`.
    """

    def __init__(self, **data):
        super().__init__(**data)
        aliases = {f.alias for f in type(self).model_fields.values() if f.alias}
        for name in sorted(set(data) - set(self.__dict__) - aliases):
            warn(
                f"Unknown attribute `{name}` of {type(self).__name__} ignored,"
                " the report may come from a newer liftcalc.",
                UnknownModelAttributeWarning,
                stacklevel=5,
            )


class UnknownModelAttributeWarning(RuntimeWarning):
    """A report being read has an attribute its model does not declare."""
