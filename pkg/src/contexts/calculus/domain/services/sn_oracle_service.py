"""This module contains the strong-normalization oracle and its verifiers.

A term is SN when its reduction graph, explored within the node limit, is
acyclic. Past the limit every verifier raises
``InconclusiveVerificationException`` instead of guessing.
"""

from collections.abc import Sequence
from typing import Any

from src.contexts.calculus.domain.exceptions.exception import (
    CycleDetectedException,
    InconclusiveVerificationException,
    NonNiceSequenceException,
    PreconditionException,
    TypingException,
)
from src.contexts.calculus.domain.ports.services.reduction_graph_service_port import (
    ReductionGraphServicePort,
)
from src.contexts.calculus.domain.services.head_analysis_service import (
    classify,
    fill,
    is_nice,
    is_simple,
)
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.services.reduction_service import (
    reduce_at,
    step_all,
)
from src.contexts.calculus.domain.services.term_service import (
    alpha_eq,
    all_names,
    cxty,
    fresh_name,
    occurrence_paths,
    occurrences,
    subst_class,
    subst_intu,
)
from src.contexts.calculus.domain.services.typing_service import check, lgt
from src.contexts.calculus.domain.value_objects.app_scenario_vo import AppScenarioVO
from src.contexts.calculus.domain.value_objects.context_vo import ContextC
from src.contexts.calculus.domain.value_objects.formula_vo import Formula
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.subst_measure_vo import (
    SubstMeasureVO,
)
from src.contexts.calculus.domain.value_objects.substitution_vo import (
    SubstClassVO,
    SubstIntuVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Elim,
    IVar,
    Pi,
    Term,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)


class SNOracleService:
    """Decides SN by exhaustive exploration and checks the SN theorems on instances."""

    def __init__(
        self, graph_service: ReductionGraphServicePort[Any], node_limit: int
    ) -> None:
        """Initialize the SNOracleService.

        Args:
            graph_service (ReductionGraphServicePort): Explores reduction graphs.
            node_limit (int): Node bound of every exploration.
        """
        self.graph_service = graph_service
        self.node_limit = node_limit

    def is_sn(self, term: Term, context: TypingContextVO | None = None) -> bool:
        """Whether every reduction from ``term`` terminates.

        Raises:
            InconclusiveVerificationException: If exploration hits the node limit.
        """
        graph = self._explore(term, context)
        try:
            self.graph_service.eta(graph)
        except CycleDetectedException:
            return False
        return True

    def is_sn_elim(self, elim: Elim, context: TypingContextVO | None = None) -> bool:
        """SN of an eliminator: a case is SN when both branches are."""
        match elim:
            case Box(payload=payload):
                return self.is_sn_elim(payload, context)
            case Pi():
                return True
            case Case(branch1=branch1, branch2=branch2):
                return self.is_sn(branch1, context) and self.is_sn(branch2, context)
            case Term():
                return self.is_sn(elim, context)
        return False

    def eta(self, term: Term, context: TypingContextVO | None = None) -> int:
        """Length of the longest reduction from ``term``.

        Raises:
            InconclusiveVerificationException: If exploration hits the node limit.
            CycleDetectedException: If ``term`` is not SN.
        """
        return self.graph_service.eta(self._explore(term, context))

    def verify_car_sn(self, term: Term, context: TypingContextVO) -> bool:
        """Check ``term in SN iff arg(term) in SN and hred(term) in SN`` on a simple typed term.

        Raises:
            PreconditionException: If ``term`` is not simple or not typed.
        """
        if not is_simple(term):
            raise PreconditionException("verify_car_sn", "term is not simple")
        self._require_typed("verify_car_sn", context, term)
        row = classify(term, context)
        left = self.is_sn(term, context)
        right = all(self.is_sn_elim(argument, context) for argument in row.args)
        if right and row.head_reduct is not None:
            right = self.is_sn(row.head_reduct, context)
        return left == right

    def verify_subst(
        self,
        context: TypingContextVO,
        term: Term,
        substitution: SubstIntuVO,
    ) -> bool:
        """Check that substituting SN terms of one type into a typed term yields an SN term.

        Raises:
            PreconditionException: If the term, the variables or the images break the hypotheses.
        """
        self._require_typed("verify_subst", context, term)
        common = self._common_type("verify_subst", context, substitution)
        for name, image in substitution.mapping.items():
            if self._type_of(context, image) != common:
                raise PreconditionException(
                    "verify_subst", f"image of {name} is not typed at the common type"
                )
            if not self.is_sn(image, context):
                raise PreconditionException("verify_subst", f"image of {name} is not SN")
        return self.is_sn(subst_intu(term, substitution), context)

    def verify_app(self, scenario: AppScenarioVO) -> bool:
        """Check that S1 is SN given that the nice-sequence scenario has a typed SN S2.

        Raises:
            NonNiceSequenceException: If ``eps V`` is not nice.
            PreconditionException: If S2 is untyped or not SN.
        """
        sequence = [scenario.eps, *scenario.tail]
        if not is_nice(sequence):
            raise NonNiceSequenceException(
                " ".join(render_term(elim) for elim in sequence)
            )
        context = scenario.context
        s2 = scenario.s2
        self._require_typed("verify_app", context, s2)
        if not self.is_sn(s2, context):
            raise PreconditionException("verify_app", "S2 is not SN")
        return self.is_sn(scenario.s1, context)

    def verify_context_preserves_sn(
        self,
        context_c: ContextC,
        terms: Sequence[Term],
        context: TypingContextVO | None = None,
    ) -> bool:
        """Check ``C[M1, ..., Mn] in SN iff every Mi in SN``."""
        filled = fill(context_c, terms)
        left = self.is_sn(filled, context)
        right = all(self.is_sn(term, context) for term in terms)
        return left == right

    def subst_measure(
        self,
        term: Term,
        substitution: SubstIntuVO,
        context: TypingContextVO,
    ) -> SubstMeasureVO:
        """The measure ``(lgt(s), eta(M), cxty(M), eta(s), cxty(s))`` the substitution theorem inducts on.

        Raises:
            PreconditionException: If the substituted variables do not share one type.
        """
        common = (
            self._common_type("subst_measure", context, substitution)
            if substitution.mapping
            else None
        )
        image_eta = 0
        image_cxty = 0
        for name, image in substitution.mapping.items():
            count = occurrences(term, name)
            if count:
                image_eta += count * self.eta(image, context)
                image_cxty += count * cxty(image)
        return SubstMeasureVO(
            type_size=lgt(common) if common is not None else 0,
            eta=self.eta(term, context),
            cxty=cxty(term),
            image_eta=image_eta,
            image_cxty=image_cxty,
        )

    def verify_head_data_substitution(
        self,
        term: Term,
        substitution: SubstIntuVO,
        context: TypingContextVO | None = None,
    ) -> bool:
        """Check that head, arguments and head reduct commute with an intuitionistic substitution.

        Raises:
            PreconditionException: If ``term`` is not simple or has no head redex.
        """
        if not is_simple(term):
            raise PreconditionException("verify_head_data_substitution", "term is not simple")
        row = classify(term, context)
        if not row.has_head_redex:
            raise PreconditionException("verify_head_data_substitution", "term has no head redex")
        substituted = subst_intu(term, substitution)
        if not is_simple(substituted):
            return False
        image = classify(substituted, context)
        if image.case != row.case or len(image.args) != len(row.args):
            return False
        head_ok = alpha_eq(image.head, subst_intu(row.head, substitution))  # type: ignore[arg-type]
        args_ok = all(
            alpha_eq(after, subst_intu(before, substitution))
            for before, after in zip(row.args, image.args, strict=True)
        )
        reduct_ok = alpha_eq(
            image.head_reduct,  # type: ignore[arg-type]
            subst_intu(row.head_reduct, substitution),  # type: ignore[type-var]
        )
        return head_ok and args_ok and reduct_ok

    def verify_step_under_substitution(
        self,
        term: Term,
        path: PathVO,
        substitution: SubstIntuVO | SubstClassVO,
        context: TypingContextVO | None = None,
    ) -> bool:
        """Check that the step at ``path`` survives a substitution: ``M[s] > M'[s]``.

        Raises:
            NotARedexException: If there is no redex at ``path``.
        """
        reduct = reduce_at(term, path, context)
        source = self._substitute(term, substitution)
        expected = self._substitute(reduct, substitution).alpha_key
        return any(step.term.alpha_key == expected for step in step_all(source, context))

    def verify_argument_step_lifts(
        self,
        term: Term,
        var: str,
        image: Term,
        path: PathVO,
        context: TypingContextVO | None = None,
    ) -> bool:
        """Check ``M[x:=N] >* M[x:=N']`` with one step per occurrence of ``x``.

        ``N'`` is the reduct of ``image`` at ``path``; the witness reduces every
        copy of ``image`` in turn.

        Raises:
            NotARedexException: If there is no redex of ``image`` at ``path``.
        """
        reduct = reduce_at(image, path, context)
        current = subst_intu(term, {var: image})
        for occurrence in occurrence_paths(term, var):
            current = reduce_at(current, occurrence.concat(path), context)
        return alpha_eq(current, subst_intu(term, {var: reduct}))

    def verify_sn_by_substitution(self, context: TypingContextVO, term: Term) -> bool:
        """Check the substitution argument for an application ``(N e)``.

        ``(N e)`` is ``(z e)[z:=N]`` for a fresh ``z``; the check holds when that
        identity holds and ``(z e)``, ``N`` and ``(N e)`` are all SN.

        Raises:
            PreconditionException: If ``term`` is not a typed application.
        """
        if not isinstance(term, App):
            raise PreconditionException("verify_sn_by_substitution", "term is not an application")
        self._require_typed("verify_sn_by_substitution", context, term)
        fresh = fresh_name("z", all_names(term) | context.names())
        skeleton = App(IVar(fresh), term.elim)
        if not alpha_eq(subst_intu(skeleton, {fresh: term.fun}), term):
            return False
        return (
            self.is_sn(skeleton, context)
            and self.is_sn(term.fun, context)
            and self.is_sn(term, context)
        )

    def verify_case_claim(
        self,
        term: Term,
        cvars: Sequence[str],
        case: Case,
        context: TypingContextVO | None = None,
    ) -> bool:
        """Check ``T[a :=* [x1.P1 | x2.P2]]`` is SN for every listed ``a``, given SN T, P1 and P2.

        Raises:
            PreconditionException: If T or a branch is not SN.
        """
        if not self.is_sn(term, context):
            raise PreconditionException("verify_case_claim", "T is not SN")
        if not self.is_sn_elim(case, context):
            raise PreconditionException("verify_case_claim", "a case branch is not SN")
        substituted = term
        for cvar in cvars:
            substituted = subst_class(substituted, SubstClassVO(cvar, case))
        return self.is_sn(substituted, context)

    def _explore(self, term: Term, context: TypingContextVO | None) -> Any:
        graph = self.graph_service.explore(term, self.node_limit, context)
        if not self.graph_service.is_complete(graph):
            raise InconclusiveVerificationException("strong normalization", self.node_limit)
        return graph

    def _substitute(self, term: Term, substitution: SubstIntuVO | SubstClassVO) -> Term:
        if isinstance(substitution, SubstClassVO):
            return subst_class(term, substitution)
        return subst_intu(term, substitution)

    def _type_of(self, context: TypingContextVO, term: Term) -> Formula | None:
        try:
            return check(context, term)
        except TypingException:
            return None

    def _require_typed(self, operation: str, context: TypingContextVO, term: Term) -> Formula:
        formula = self._type_of(context, term)
        if formula is None:
            raise PreconditionException(operation, f"{render_term(term)} is not typed")
        return formula

    def _common_type(
        self, operation: str, context: TypingContextVO, substitution: SubstIntuVO
    ) -> Formula:
        types = {context.intuitionistic.get(name) for name in substitution.domain}
        if None in types:
            raise PreconditionException(operation, "a substituted variable is undeclared")
        if len(types) != 1:
            raise PreconditionException(operation, "substituted variables differ in type")
        return types.pop()  # type: ignore[return-value]
