"""Exception hierarchy and three-valued verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .fields import FieldMismatch  # noqa: F401  (re-exported)  # noqa: F401  (re-exported)


class AlgebraError(Exception):
    pass


class ValidationError(AlgebraError):
    pass


class UnsupportedCharacteristic(AlgebraError):
    pass


class InternalCheckFailed(AlgebraError):
    pass


class NotSplit(AlgebraError):
    pass


class IdempotentsRequired(AlgebraError):
    pass


class NotIdempotent(AlgebraError):
    pass


class NotAutomorphism(AlgebraError):
    pass


class AlgebraMismatch(AlgebraError):
    pass


class EmptySpan(AlgebraError):
    pass


class DualNotInvertible(AlgebraError):
    pass


class NotQuasiFrobenius(AlgebraError):
    pass


class Degenerate(AlgebraError):
    pass


class NotBimoduleMorphism(AlgebraError):
    pass


class NotAssociativeMorphism(AlgebraError):
    pass


class InvalidC(AlgebraError):
    pass


class BadParams(AlgebraError):
    pass


@dataclass
class Yes:
    witness: Any = None
    detail: dict = field(default_factory=dict)

    verdict = "yes"


@dataclass
class No:
    reason: str = ""
    witness: Any = None

    verdict = "no"


@dataclass
class Undecided:
    reason: str = ""
    trials: int = 0

    verdict = "undecided"


def is_yes(v) -> bool:
    return isinstance(v, Yes)


def is_no(v) -> bool:
    return isinstance(v, No)
