"""This module contains the head classification of a simple term."""

from dataclasses import dataclass

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.term_vo import Node, Term
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class HeadRowVO(BaseValueObject):
    """Row of the head table with head, arguments and head reduct.

    Row 0 has a variable head (its name) and no reduct. Rows 1 to 5 have a
    redex head located at ``head_path`` and its one-step reduct. Row 5 has no
    arguments.
    """

    case: int
    head: str | Term
    args: tuple[Node, ...]
    head_reduct: Term | None = None
    head_path: PathVO | None = None

    def validate(self) -> None:
        """Enforce the shape of each row."""
        if self.case not in range(6):
            raise InvalidTermException(f"head row must be 0..5, got {self.case}")
        if self.case == 0:
            if not isinstance(self.head, str) or self.head_reduct is not None:
                raise InvalidTermException("row 0 has a variable head and no reduct")
            return
        if not isinstance(self.head, Term) or self.head_reduct is None:
            raise InvalidTermException(f"row {self.case} needs a redex head and a reduct")
        if self.case == 5 and self.args:
            raise InvalidTermException("row 5 has no arguments")

    @property
    def has_head_redex(self) -> bool:
        """Whether the row carries a head redex."""
        return self.case != 0
