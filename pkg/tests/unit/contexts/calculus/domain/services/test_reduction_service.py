"""Unit tests for the reduction service."""

import pytest

from src.contexts.calculus.domain.exceptions.exception import NotARedexException
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.services.reduction_service import (
    is_normal,
    redex_kind,
    redexes,
    reduce_at,
    step_all,
    successors,
)
from src.contexts.calculus.domain.value_objects.formula_vo import And, Atom, Imp, Or
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Inj,
    IVar,
    Lam,
    Mark,
    Mu,
    Name,
    Pair,
    Pi,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)

A = Atom("A")
B = Atom("B")
C = Atom("C")
x, y, z = IVar("x"), IVar("y"), IVar("z")
m, n, o, e = IVar("m"), IVar("n"), IVar("o"), IVar("e")
ROOT = PathVO.root()


class TestRedexKind:
    """Unit tests for redex detection."""

    def test_should_detect_every_cut(self):
        """Should classify each redex shape."""
        case = Case("x1", n, "x2", o)
        assert redex_kind(App(Lam("x", A, x), y)) is RedexKind.BETA
        assert redex_kind(App(Pair(x, y), Pi(1))) is RedexKind.PROJ
        assert redex_kind(App(Inj(1, Or(A, B), x), case)) is RedexKind.CASE_INJ
        assert redex_kind(App(App(m, case), e)) is RedexKind.PERM
        assert redex_kind(App(Mu("a", A, Name("a", x)), e)) is RedexKind.CLAS

    def test_should_reject_mismatched_shapes(self):
        """Should not match an introduction against the wrong eliminator."""
        assert redex_kind(App(Lam("x", A, x), Pi(1))) is None
        assert redex_kind(App(Pair(x, y), z)) is None
        assert redex_kind(x) is None

    def test_should_only_annihilate_in_marked_terms(self):
        """Should fire a mark against its box only in the marked calculus."""
        term = App(Mark(n), Box(e))
        assert redex_kind(term) is None
        assert redex_kind(term, marked=True) is RedexKind.ANNIHILATE

    def test_should_list_redexes_in_pre_order(self):
        """Should list outer redexes before inner ones."""
        term = App(Lam("x", A, App(Lam("y", A, y), x)), z)
        assert [str(redex) for redex in redexes(term)] == ["/ Beta", "/fun/body Beta"]


class TestContraction:
    """Unit tests for reduce_at."""

    def test_should_contract_beta(self):
        """Should substitute the argument."""
        term = App(Lam("x", A, Pair(x, x)), y)
        assert reduce_at(term, ROOT) == Pair(y, y)

    def test_should_contract_projection(self):
        """Should select a component."""
        assert reduce_at(App(Pair(x, y), Pi(2)), ROOT) == y

    def test_should_contract_case_of_injection(self):
        """Should run the selected branch on the injected term."""
        case = Case("u", App(IVar("f"), IVar("u")), "v", App(IVar("g"), IVar("v")))
        term = App(Inj(2, Or(A, B), IVar("b")), case)
        assert reduce_at(term, ROOT) == App(IVar("g"), IVar("b"))

    def test_should_push_eliminator_into_case(self):
        """Should copy the eliminator into both branches."""
        term = App(App(m, Case("x1", n, "x2", o)), e)
        assert render_term(reduce_at(term, ROOT)) == "(m [x1.(n e) | x2.(o e)])"

    def test_should_rename_case_binder_free_in_pushed_eliminator(self):
        """Should rename a binder the pushed eliminator mentions."""
        term = App(App(m, Case("x1", IVar("x1"), "x2", o)), IVar("x1"))
        assert render_term(reduce_at(term, ROOT)) == "(m [x1'.(x1' x1) | x2.(o x1)])"

    def test_should_retype_classical_cut_on_application(self):
        """Should apply named subterms and take the codomain."""
        term = App(Mu("a", Imp(A, B), Name("a", IVar("f"))), x)
        assert render_term(reduce_at(term, ROOT)) == "mu a:B. (a (f x))"

    def test_should_retype_classical_cut_on_projection(self):
        """Should take the projected conjunct."""
        term = App(Mu("a", And(A, B), Name("a", IVar("p"))), Pi(1))
        assert render_term(reduce_at(term, ROOT)) == "mu a:A. (a (p p1))"

    def test_should_retype_classical_cut_on_case_in_context(self):
        """Should type the case in the environment of the redex."""
        case = Case("u", IVar("c"), "v", IVar("c"))
        term = App(Mu("a", Or(A, B), Name("a", IVar("w"))), case)
        context = TypingContextVO({"w": Or(A, B), "c": C})
        assert render_term(reduce_at(term, ROOT, context)) == "mu a:C. (a (w [u.c | v.c]))"

    def test_should_keep_annotation_when_case_cannot_be_typed(self):
        """Should fall back to the old annotation without a context."""
        case = Case("u", IVar("c"), "v", IVar("c"))
        term = App(Mu("a", Or(A, B), Name("a", IVar("w"))), case)
        assert render_term(reduce_at(term, ROOT)) == "mu a:A \\/ B. (a (w [u.c | v.c]))"

    def test_should_annihilate_mark_against_box(self):
        """Should apply the payload to the box payload."""
        term = App(Mark(n), Box(e))
        assert reduce_at(term, ROOT, marked=True) == App(n, e)

    def test_should_raise_when_no_rule_matches(self):
        """Should report the path without a redex."""
        with pytest.raises(NotARedexException) as exc_info:
            reduce_at(App(App(m, n), o), PathVO(("fun",)))
        assert str(exc_info.value) == "no redex at /fun"

    def test_should_raise_for_annihilation_outside_marked_calculus(self):
        """Should not annihilate unless asked to."""
        with pytest.raises(NotARedexException):
            reduce_at(App(Mark(n), Box(e)), ROOT)


class TestSteps:
    """Unit tests for step_all, successors and is_normal."""

    def test_should_list_every_reduct(self):
        """Should produce one reduct per redex, in redex order."""
        identity = Lam("x", A, x)
        term = Pair(App(identity, y), App(identity, z))
        steps = step_all(term)
        assert [str(step.redex) for step in steps] == ["/left Beta", "/right Beta"]
        assert successors(term) == [Pair(y, App(identity, z)), Pair(App(identity, y), z)]

    def test_should_merge_alpha_equal_reducts(self):
        """Should keep one of two reducts equal up to renaming."""
        term = App(Lam("x", A, App(Lam("y", A, y), x)), z)
        steps = step_all(term)
        assert len(steps) == 1
        assert str(steps[0].redex) == "/ Beta"

    def test_should_tell_normal_forms(self):
        """Should ignore annihilation when deciding normality."""
        assert is_normal(App(m, Pi(1)))
        assert is_normal(App(Mark(n), Box(e)))
        assert not is_normal(App(Lam("x", A, x), y))
