"""This module contains the parsed form of one source unit."""

from dataclasses import dataclass, field

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.formula_vo import Formula
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class SourceUnitVO(BaseValueObject):
    """A context block, one term and an optional expected type."""

    term: Term
    context: TypingContextVO = field(default_factory=TypingContextVO.empty)
    expected: Formula | None = None

    def validate(self) -> None:
        """The unit holds a term."""
        if not isinstance(self.term, Term):
            raise InvalidTermException("a source unit holds a term")
