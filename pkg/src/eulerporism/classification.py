"""Verdicts shared by triangle classification and circle-pair checks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Kind(Enum):
    ACUTE = "Acute"
    RIGHT = "Right"
    OBTUSE = "Obtuse"
    INCOMPATIBLE = "Incompatible"


class Reason(Enum):
    RADIUS_MISMATCH = "RadiusMismatch"
    TOO_FAR_APART = "TooFarApart"


@dataclass(frozen=True)
class PairClassification:
    kind: Kind
    reason: Reason | None = None

    def __post_init__(self):
        if (self.kind is Kind.INCOMPATIBLE) != (self.reason is not None):
            raise ValueError("exactly the Incompatible verdict carries a reason")

    @property
    def compatible(self) -> bool:
        return self.kind is not Kind.INCOMPATIBLE

    def __str__(self) -> str:
        if self.reason is None:
            return self.kind.value
        return f"{self.kind.value}({self.reason.value})"

    @classmethod
    def parse(cls, text: str) -> PairClassification:
        if text.startswith("Incompatible(") and text.endswith(")"):
            return cls(Kind.INCOMPATIBLE, Reason(text[len("Incompatible(") : -1]))
        return cls(Kind(text))


ACUTE = PairClassification(Kind.ACUTE)
RIGHT = PairClassification(Kind.RIGHT)
OBTUSE = PairClassification(Kind.OBTUSE)
RADIUS_MISMATCH = PairClassification(Kind.INCOMPATIBLE, Reason.RADIUS_MISMATCH)
TOO_FAR_APART = PairClassification(Kind.INCOMPATIBLE, Reason.TOO_FAR_APART)
