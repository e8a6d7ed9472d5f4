"""This module contains the induction measure of the substitution theorem."""

from dataclasses import astuple, dataclass

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True, order=True)
class SubstMeasureVO(BaseValueObject):
    """``(lgt(s), eta(M), cxty(M), eta(s), cxty(s))``, compared lexicographically.

    ``image_eta`` and ``image_cxty`` sum over actual occurrences: a variable
    occurring n times contributes its image n times.
    """

    type_size: int
    eta: int
    cxty: int
    image_eta: int
    image_cxty: int

    def validate(self) -> None:
        """Every component is a natural number."""
        if any(component < 0 for component in astuple(self)):
            raise InvalidTermException("measure components must be nonnegative")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        """The measure as a plain tuple."""
        return astuple(self)  # type: ignore[return-value]
