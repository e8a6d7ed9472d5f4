"""This module contains the report of a subject-reduction probe."""

from dataclasses import dataclass

from src.contexts.calculus.domain.value_objects.formula_vo import Formula
from src.contexts.calculus.domain.value_objects.redex_vo import RedexVO
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class TypeViolationVO(BaseValueObject):
    """A reduct whose type differs from its source's, or that has no type."""

    redex: RedexVO
    source: str
    reduct: str
    message: str

    def validate(self) -> None:
        """Nothing to check."""


@dataclass(frozen=True)
class SubjectReductionReportVO(BaseValueObject):
    """Type of a term and the violations found among its one-step reducts."""

    formula: Formula
    reducts_checked: int
    violations: tuple[TypeViolationVO, ...] = ()

    def validate(self) -> None:
        """Nothing to check."""

    @property
    def ok(self) -> bool:
        """Whether every reduct kept the type."""
        return not self.violations
