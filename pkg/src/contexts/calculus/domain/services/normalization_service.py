"""This module contains strategy-driven normalization."""

import random

from src.contexts.calculus.domain.services.head_analysis_service import (
    head_redex_path,
)
from src.contexts.calculus.domain.services.reduction_service import (
    redex_kind,
    redexes,
    reduce_at,
)
from src.contexts.calculus.domain.services.term_service import subterm_at
from src.contexts.calculus.domain.value_objects.redex_kind_vo import StrategyKind
from src.contexts.calculus.domain.value_objects.redex_vo import (
    NormalizationResultVO,
    RedexVO,
    ReductionStepVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)


def select_redex(
    term: Term,
    strategy: StrategyKind,
    rng: random.Random | None = None,
) -> RedexVO | None:
    """Pick the next redex according to a strategy.

    ``head`` takes the head redex of the leftmost simple subterm that has one
    and otherwise falls back to ``leftmost``.
    """
    if strategy is StrategyKind.HEAD:
        path = head_redex_path(term)
        if path is not None:
            kind = redex_kind(subterm_at(term, path))
            if kind is not None:
                return RedexVO(path, kind)
    candidates = redexes(term)
    if not candidates:
        return None
    if strategy is StrategyKind.RANDOM:
        return (rng or random.Random(0)).choice(candidates)
    return candidates[0]


def normalize(
    term: Term,
    strategy: StrategyKind,
    max_steps: int,
    seed: int | None = None,
    context: TypingContextVO | None = None,
) -> NormalizationResultVO:
    """Reduce until no redex remains or ``max_steps`` steps were taken.

    The result is exhausted only when a redex is still left once the budget
    is spent. A normal form is never exhausted, even with ``max_steps=0``,
    and a term reaching its normal form on the last allowed step is not
    exhausted either.

    Args:
        term (Term): The starting term.
        strategy (StrategyKind): Redex selection strategy.
        max_steps (int): Step budget.
        seed (int | None): Seed of the random strategy.
        context (TypingContextVO | None): Context used to retype classical cuts.

    Returns:
        NormalizationResultVO: Final term, trace, and whether the budget ran out.
    """
    rng = random.Random(seed if seed is not None else 0)
    trace: list[ReductionStepVO] = []
    current = term
    while True:
        redex = select_redex(current, strategy, rng)
        if redex is None:
            return NormalizationResultVO(current, tuple(trace), False)
        if len(trace) >= max_steps:
            return NormalizationResultVO(current, tuple(trace), True)
        current = reduce_at(current, redex.path, context)
        trace.append(ReductionStepVO(redex, current))
