"""This module contains the value objects describing reduction steps."""

from dataclasses import dataclass

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class RedexVO(BaseValueObject):
    """A redex position and its kind."""

    path: PathVO
    kind: RedexKind

    def validate(self) -> None:
        """Check field types."""
        if not isinstance(self.path, PathVO) or not isinstance(self.kind, RedexKind):
            raise InvalidTermException("redex needs a path and a kind")

    def __str__(self) -> str:
        """Render as ``<path> <kind>``."""
        return f"{self.path} {self.kind.value}"


@dataclass(frozen=True)
class ReductionStepVO(BaseValueObject):
    """A one-step reduct together with the redex that produced it."""

    redex: RedexVO
    term: Term

    def validate(self) -> None:
        """Check field types."""
        if not isinstance(self.redex, RedexVO) or not isinstance(self.term, Term):
            raise InvalidTermException("reduction step needs a redex and a term")


@dataclass(frozen=True)
class NormalizationResultVO(BaseValueObject):
    """Outcome of normalization: final term, step trace and budget flag."""

    term: Term
    trace: tuple[ReductionStepVO, ...]
    exhausted: bool

    def validate(self) -> None:
        """Check field types."""
        if not isinstance(self.term, Term):
            raise InvalidTermException("normalization result needs a term")

    @property
    def steps(self) -> int:
        """Number of steps performed."""
        return len(self.trace)
