"""This module contains term contexts built from holes and introduction binders.

A context is ``*i``, ``\\x:A. C``, ``in<i>[F] C``, ``<C1, C2>`` or ``mu a:A. C``.
Holes are numbered 1..n from left to right; binders scope over the holes.
"""

from dataclasses import dataclass
from functools import cached_property

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.formula_vo import Formula, Or
from src.contexts.calculus.domain.value_objects.term_vo import validate_variable
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class ContextC(BaseValueObject):
    """Base class of contexts."""

    def validate(self) -> None:
        """Subclasses check their fields."""

    @cached_property
    def hole_indices(self) -> tuple[int, ...]:
        """Hole indices in left-to-right order."""
        match self:
            case Hole(index=index):
                return (index,)
            case CPair(left=left, right=right):
                return left.hole_indices + right.hole_indices
            case CLam(body=body) | CInj(body=body) | CMu(body=body):
                return body.hole_indices
        return ()

    @property
    def arity(self) -> int:
        """Number of holes."""
        return len(self.hole_indices)

    def is_well_numbered(self) -> bool:
        """Whether the holes are exactly 1..n from left to right."""
        return self.hole_indices == tuple(range(1, self.arity + 1))


@dataclass(frozen=True)
class Hole(ContextC):
    """The hole ``*index``."""

    index: int

    def validate(self) -> None:
        """Indices start at 1."""
        if not isinstance(self.index, int) or self.index < 1:
            raise InvalidTermException("hole index must be a positive integer")


@dataclass(frozen=True)
class CLam(ContextC):
    """Context under an abstraction."""

    var: str
    annot: Formula
    body: ContextC

    def validate(self) -> None:
        """Check binder and body."""
        validate_variable(self.var)
        _require_context(self.body)


@dataclass(frozen=True)
class CInj(ContextC):
    """Context under an injection."""

    side: int
    annot: Formula
    body: ContextC

    def validate(self) -> None:
        """Check side, annotation and body."""
        if self.side not in (1, 2) or not isinstance(self.annot, Or):
            raise InvalidTermException("context injection needs side 1|2 and a disjunction")
        _require_context(self.body)


@dataclass(frozen=True)
class CPair(ContextC):
    """Pair of contexts."""

    left: ContextC
    right: ContextC

    def validate(self) -> None:
        """Check both components."""
        _require_context(self.left)
        _require_context(self.right)


@dataclass(frozen=True)
class CMu(ContextC):
    """Context under a classical abstraction."""

    var: str
    annot: Formula
    body: ContextC

    def validate(self) -> None:
        """Check binder and body."""
        validate_variable(self.var)
        _require_context(self.body)


def _require_context(value: object) -> None:
    if not isinstance(value, ContextC):
        raise InvalidTermException("context component must be a context")
