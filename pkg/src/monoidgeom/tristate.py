"""Three-valued verdicts for operations whose bounded searches may not decide."""

from enum import Enum


class TriState(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def is_true(self) -> bool:
        return self is TriState.TRUE

    def is_false(self) -> bool:
        return self is TriState.FALSE

    def is_unknown(self) -> bool:
        return self is TriState.UNKNOWN

    @classmethod
    def of(cls, b: bool) -> "TriState":
        return cls.TRUE if b else cls.FALSE
