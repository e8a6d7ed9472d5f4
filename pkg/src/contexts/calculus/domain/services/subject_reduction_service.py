"""This module contains the subject-reduction probe."""

from src.contexts.calculus.domain.exceptions.exception import TypingException
from src.contexts.calculus.domain.services.printer_service import (
    render_formula,
    render_term,
)
from src.contexts.calculus.domain.services.reduction_service import step_all
from src.contexts.calculus.domain.services.typing_service import check
from src.contexts.calculus.domain.value_objects.formula_vo import Formula
from src.contexts.calculus.domain.value_objects.redex_vo import ReductionStepVO
from src.contexts.calculus.domain.value_objects.subject_reduction_report_vo import (
    SubjectReductionReportVO,
    TypeViolationVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)


def type_violation(
    context: TypingContextVO,
    source: Term,
    expected: Formula,
    step: ReductionStepVO,
) -> TypeViolationVO | None:
    """Check one reduct against the expected type; return the violation if any."""
    try:
        actual = check(context, step.term)
    except TypingException as exc:
        message = str(exc)
    else:
        if actual == expected:
            return None
        message = f"type changed from {render_formula(expected)} to {render_formula(actual)}"
    return TypeViolationVO(step.redex, render_term(source), render_term(step.term), message)


def subject_reduction_probe(
    context: TypingContextVO, term: Term
) -> SubjectReductionReportVO:
    """Check that every one-step reduct of ``term`` keeps its type.

    Raises:
        TypingException: If ``term`` itself does not typecheck.
    """
    expected = check(context, term)
    steps = step_all(term, context)
    violations = [
        violation
        for step in steps
        if (violation := type_violation(context, term, expected, step)) is not None
    ]
    return SubjectReductionReportVO(expected, len(steps), tuple(violations))
