"""Integration tests for AppCertifierService over the networkx graph adapter."""

from unittest.mock import Mock

import pytest

from src.contexts.calculus.domain.exceptions.exception import (
    PreconditionException,
)
from src.contexts.calculus.domain.services.app_certifier_service import (
    AppCertifierService,
)
from src.contexts.calculus.domain.services.marked_calculus_service import t2
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.value_objects.app_scenario_vo import AppScenarioVO
from src.contexts.calculus.domain.value_objects.formula_vo import Atom
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Case,
    IVar,
    Lam,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)
from src.contexts.calculus.infrastructure.graph.networkx_reduction_graph_service_adapter import (
    NetworkxReductionGraphServiceAdapter,
)

A = Atom("A")
m, o, e = IVar("m"), IVar("o"), IVar("e")


def make_scenario(**changes) -> AppScenarioVO:
    """Scenario ``(m [x1.n | x2.o] e p)`` with optional overrides."""
    fields = {
        "context": TypingContextVO.empty(),
        "scrutinee": m,
        "var1": "x1",
        "branch1": IVar("n"),
        "var2": "x2",
        "branch2": o,
        "eps": e,
        "tail": (IVar("p"),),
    }
    fields.update(changes)
    return AppScenarioVO(**fields)


class TestAppCertifierService:
    """Integration tests for AppCertifierService."""

    def setup_method(self):
        """Setup the certifier over a real graph adapter."""
        graph_service = NetworkxReductionGraphServiceAdapter(logger=Mock())
        self.certifier = AppCertifierService(graph_service, search_limit=200)

    def test_should_certify_empty_trace(self):
        """Should check M0 alone when S1 takes no step."""
        scenario = make_scenario()
        certificate = self.certifier.certify(scenario, [scenario.s1])
        assert certificate.steps == ()
        assert certificate.marked_trace == (scenario.marked_root,)
        assert certificate.summary() == "steps=0 stalled=0 t2_steps=0 lg=8->8"

    def test_should_certify_pivot_step_as_stall(self):
        """Should lift the pivot step to a box commutation that leaves T2 in place."""
        scenario = make_scenario()
        certificate = self.certifier.certify(scenario, [scenario.s1, scenario.s2])
        assert [str(step) for step in certificate.steps] == [
            "1 /fun Perm marked=Perm lg=8->6 t2=0 stalled"
        ]
        assert certificate.summary() == "steps=1 stalled=1 t2_steps=0 lg=8->6"
        assert certificate.t2_trace == (scenario.s2, scenario.s2)

    def test_should_move_t2_after_annihilation(self):
        """Should annihilate a mark before firing the redex its payload forms."""
        scenario = make_scenario(branch1=Lam("u", A, IVar("u")), tail=())
        after_beta = App(m, Case("x1", e, "x2", App(o, e)))
        certificate = self.certifier.certify(scenario, [scenario.s2, after_beta])
        first, second = certificate.steps
        assert str(first.redex) == "/ Perm"
        assert first.stalled
        assert second.marked_kinds == (RedexKind.ANNIHILATE, RedexKind.BETA)
        assert second.t2_steps == 1
        assert not second.stalled
        assert certificate.lg_values[2] < certificate.lg_values[1]
        assert render_term(t2(certificate.marked_trace[-1])) == "(m [x1.e | x2.(o e)])"

    def test_should_refuse_payload_mentioning_its_binder(self):
        """Should require closed payloads."""
        scenario = make_scenario(branch1=IVar("x1"))
        with pytest.raises(PreconditionException) as exc_info:
            self.certifier.certify(scenario, [])
        assert str(exc_info.value) == "certify_app: a case branch mentions its own binder"

    def test_should_refuse_trace_that_does_not_reduce(self):
        """Should require each trace entry to be a reduct of the previous one."""
        scenario = make_scenario()
        with pytest.raises(PreconditionException):
            self.certifier.certify(scenario, [IVar("zzz")])

