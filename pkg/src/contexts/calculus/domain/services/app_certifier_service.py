"""This module contains the certifier of the permutative-pivot theorem.

A reduction of S1 is lifted step by step to correct marked terms starting at
``M0``. Every marked step must move the ``T2`` image forward by zero or more
steps; a step that leaves it in place must commute a box or annihilate a
mark and shorten the way from marks to boxes, unless it only reduces inside
a box that owns no mark.
"""

from collections.abc import Sequence
from typing import Any

from src.contexts.calculus.domain.exceptions.exception import (
    CertificateViolationException,
    NoLiftException,
    PreconditionException,
)
from src.contexts.calculus.domain.ports.services.reduction_graph_service_port import (
    ReductionGraphServicePort,
)
from src.contexts.calculus.domain.services.marked_calculus_service import (
    box_owners,
    correctness_failure,
    inside_box_payload,
    is_box_commuting,
    lg,
    lift_with_steps,
    t1,
    t2,
)
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.services.term_service import alpha_eq, subterm_at
from src.contexts.calculus.domain.value_objects.app_scenario_vo import AppScenarioVO
from src.contexts.calculus.domain.value_objects.certificate_vo import (
    AppCertificateVO,
    CertificateStepVO,
)
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.redex_vo import ReductionStepVO
from src.contexts.calculus.domain.value_objects.term_vo import Term


class AppCertifierService:
    """Lifts traces of S1 and checks the lemmas relating them to S2."""

    def __init__(
        self, graph_service: ReductionGraphServicePort[Any], search_limit: int
    ) -> None:
        """Initialize the AppCertifierService.

        Args:
            graph_service (ReductionGraphServicePort): Searches reductions between T2 images.
            search_limit (int): Node bound of each of those searches.
        """
        self.graph_service = graph_service
        self.search_limit = search_limit

    def certify(self, scenario: AppScenarioVO, trace: Sequence[Term]) -> AppCertificateVO:
        """Lift ``trace`` and check every step.

        Args:
            scenario (AppScenarioVO): The scenario; its S1 starts the trace.
            trace (Sequence[Term]): Successive one-step reducts of S1; S1 itself may lead.

        Returns:
            AppCertificateVO: Marked terms, T2 images, lg values and checked steps.

        Raises:
            PreconditionException: If a payload mentions its binder or the trace is not a reduction of S1.
            CertificateViolationException: If a lemma fails on this instance.
            InconclusiveVerificationException: If a T2 search hits its limit.
        """
        if not scenario.payloads_closed:
            raise PreconditionException(
                "certify_app", "a case branch mentions its own binder"
            )
        context = scenario.context
        current = scenario.marked_root
        self._require_correct(current, scenario, 0)
        if not alpha_eq(t1(current), scenario.s1):
            raise CertificateViolationException("T1", 0, "T1(M0) differs from S1")
        image = t2(current, context)
        if not alpha_eq(image, scenario.s2):
            raise CertificateViolationException(
                "T2", 0, f"T2(M0) = {render_term(image)} differs from S2"
            )

        targets = list(trace)
        if targets and alpha_eq(targets[0], scenario.s1):
            targets = targets[1:]
        marked_trace = [current]
        t2_trace = [image]
        lg_values = [lg(current)]
        steps: list[CertificateStepVO] = []
        for index, target in enumerate(targets, start=1):
            try:
                redex, lifted = lift_with_steps(current, target, context)
            except NoLiftException as exc:
                raise CertificateViolationException("lift", index, str(exc)) from exc
            t2_steps = 0
            stalled = True
            for marked_step in lifted:
                after = marked_step.term
                self._require_correct(after, scenario, index)
                after_image = t2(after, context)
                distance = self.graph_service.distance(
                    image, after_image, self.search_limit, context
                )
                if distance is None:
                    raise CertificateViolationException(
                        "T2-monotonicity",
                        index,
                        f"{render_term(after_image)} is not reachable from {render_term(image)}",
                    )
                if distance == 0:
                    self._check_stall(current, marked_step, index)
                else:
                    stalled = False
                t2_steps += distance
                current, image = after, after_image
            if not alpha_eq(t1(current), target):
                raise CertificateViolationException(
                    "lift", index, "T1 of the lifted term differs from the trace"
                )
            steps.append(
                CertificateStepVO(
                    index=index,
                    redex=redex,
                    marked_kinds=tuple(step.redex.kind for step in lifted),
                    lg_before=lg_values[-1],
                    lg_after=lg(current),
                    t2_steps=t2_steps,
                    stalled=stalled,
                )
            )
            marked_trace.append(current)
            t2_trace.append(image)
            lg_values.append(steps[-1].lg_after)
        return AppCertificateVO(
            s2=scenario.s2,
            marked_trace=tuple(marked_trace),
            t2_trace=tuple(t2_trace),
            lg_values=tuple(lg_values),
            steps=tuple(steps),
        )

    def _require_correct(self, term: Term, scenario: AppScenarioVO, index: int) -> None:
        reason = correctness_failure(term, scenario.mode)
        if reason is not None:
            raise CertificateViolationException("correctness", index, reason)

    def _check_stall(self, before: Term, step: ReductionStepVO, index: int) -> None:
        path = step.redex.path
        node = subterm_at(before, path)
        if is_box_commuting(node) or step.redex.kind is RedexKind.ANNIHILATE:
            if lg(step.term) >= lg(before):
                raise CertificateViolationException(
                    "lg-decrease", index, f"lg does not decrease at {step.redex}"
                )
            return
        pair = inside_box_payload(before, path)
        if pair is not None and not box_owners(before).get(pair):
            return
        raise CertificateViolationException(
            "T2-stall", index, f"T2 image unchanged by {step.redex}, which commutes no box"
        )
