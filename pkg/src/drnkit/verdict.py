from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Truth(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> "Truth":
        return cls.TRUE if flag else cls.FALSE

    def __bool__(self):
        raise TypeError("Truth has three values; compare against Truth.TRUE explicitly")


@dataclass(frozen=True)
class Verdict:
    """A property value with the evidence that supports it.

    ``evidence`` always carries re-checkable data for TRUE/FALSE and the
    exhausted budget for UNKNOWN.
    """

    value: Truth
    evidence: dict[str, Any] = field(default_factory=dict)

    @property
    def is_true(self) -> bool:
        return self.value is Truth.TRUE

    @property
    def is_false(self) -> bool:
        return self.value is Truth.FALSE
