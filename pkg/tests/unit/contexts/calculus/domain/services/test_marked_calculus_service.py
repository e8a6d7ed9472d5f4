"""Unit tests for the marked calculus."""

import pytest

from src.contexts.calculus.domain.exceptions.exception import (
    NoLiftException,
    NotAcceptableException,
    NotCorrectException,
    PreconditionException,
    UniquenessViolationException,
)
from src.contexts.calculus.domain.services.marked_calculus_service import (
    acceptable,
    box_owners,
    btr_normal_form,
    btr_step,
    correct,
    correctness_failure,
    eps_of,
    good_wrt,
    inside_box_payload,
    is_box_commuting,
    lg,
    lift_path,
    lift_step,
    lift_with_steps,
    marked_step_all,
    nb,
    require_correct,
    st_set,
    t1,
    t2,
    t2_equals_btr_normal_form,
)
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.value_objects.app_scenario_vo import (
    ScenarioModeKind,
)
from src.contexts.calculus.domain.value_objects.formula_vo import Atom, Imp
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    IVar,
    Lam,
    Mark,
    Mu,
    Name,
    Pair,
)

A = Atom("A")
B = Atom("B")
m, n, o, p, q, r, s = (IVar(name) for name in "mnopqrs")
e, e1, e2 = IVar("e"), IVar("e1"), IVar("e2")

MARKED_CASE = Case("x1", Mark(n), "x2", Mark(o))
# (m [x1.{n} | x2.{o}] [[e]] p)
SINGLE_BOX = App(App(App(m, MARKED_CASE), Box(e)), p)
# (m [x1.(n [y1.{o} | y2.mu a:A. p] [[e1]]) | x2.(mu b:A. (b mu c:A. (c (q [z1.mu d:A. r | z2.{s}]))) [[e2]])])
TWO_BOXES = App(
    m,
    Case(
        "x1",
        App(App(n, Case("y1", Mark(o), "y2", Mu("a", A, p))), Box(e1)),
        "x2",
        App(
            Mu(
                "b",
                A,
                Name(
                    "b",
                    Mu("c", A, Name("c", App(q, Case("z1", Mu("d", A, r), "z2", Mark(s))))),
                ),
            ),
            Box(e2),
        ),
    ),
)


class TestAcceptability:
    """Unit tests for acceptable terms and st."""

    def test_should_accept_marks_cases_and_mus(self):
        """Should accept a mark, a case of acceptable branches and a mu of acceptable namings."""
        assert acceptable(Mark(n))
        assert acceptable(App(m, MARKED_CASE))
        assert acceptable(Mu("a", A, Name("a", Mark(n))))
        assert acceptable(Mu("a", A, p))

    def test_should_refuse_plain_branches(self):
        """Should refuse a case with a plain branch."""
        assert not acceptable(App(m, Case("x1", Mark(n), "x2", o)))
        assert not acceptable(n)

    def test_should_collect_marks_of_acceptable_term(self):
        """Should return the mark paths, prefixed by the term path."""
        marks = st_set(App(m, MARKED_CASE), PathVO(("fun",)))
        assert {str(path) for path in marks} == {"/fun/elim/branch1", "/fun/elim/branch2"}

    def test_should_raise_for_unacceptable_term(self):
        """Should name the rejected term."""
        with pytest.raises(NotAcceptableException) as exc_info:
            st_set(o)
        assert str(exc_info.value) == "not acceptable: o"


class TestCorrectness:
    """Unit tests for correct marked terms."""

    def test_should_accept_single_box_term(self):
        """Should find one box owning both marks."""
        owners = box_owners(SINGLE_BOX)
        assert {str(path): sorted(map(str, marks)) for path, marks in owners.items()} == {
            "/fun": ["/fun/fun/elim/branch1", "/fun/fun/elim/branch2"]
        }
        assert correct(SINGLE_BOX)
        assert nb(SINGLE_BOX) == 1

    def test_should_accept_nested_boxes(self):
        """Should give each box the marks under its own mu chain."""
        assert correct(TWO_BOXES)
        assert nb(TWO_BOXES) == 2

    def test_should_reject_box_after_unacceptable_term(self):
        """Should require boxes to follow acceptable terms."""
        reason = correctness_failure(App(IVar("f"), Box(e)))
        assert reason == "box at /elim follows a term that is not acceptable"

    def test_should_reject_orphan_mark(self):
        """Should require every mark to have exactly one box."""
        with pytest.raises(NotCorrectException) as exc_info:
            require_correct(Pair(Mark(n), p))
        assert str(exc_info.value) == "marked term is not correct: mark at /left belongs to 0 boxes"

    def test_should_reject_box_of_another_mode(self):
        """Should check the shape of box payloads against the mode."""
        reason = correctness_failure(SINGLE_BOX, ScenarioModeKind.PROJ)
        assert reason == "box at /fun/elim does not hold a proj eliminator"
        assert correct(SINGLE_BOX, ScenarioModeKind.TERM)

    def test_should_reject_boxed_case_followed_by_eliminator_in_case_mode(self):
        """Should require in case mode that nothing follows a box."""
        boxed_case = Box(Case("y1", q, "y2", r))
        tailed = App(App(App(m, MARKED_CASE), boxed_case), p)
        assert correctness_failure(tailed, ScenarioModeKind.CASE) == (
            "a box is applied to a further eliminator"
        )
        assert correct(App(App(m, MARKED_CASE), boxed_case), ScenarioModeKind.CASE)

    def test_should_tell_good_terms(self):
        """Should accept a term in the set and cases of good branches."""
        occurrences = {PathVO(("elim", "branch1")), PathVO(("elim", "branch2"))}
        assert good_wrt(App(m, Case("x1", n, "x2", o)), occurrences)
        assert not good_wrt(App(m, n), occurrences)

    def test_should_find_eliminator_of_owning_box(self):
        """Should return the box payload owning a mark."""
        assert eps_of(SINGLE_BOX, PathVO(("fun", "fun", "elim", "branch1"))) == e

    def test_should_raise_for_mark_without_box(self):
        """Should require exactly one owner."""
        with pytest.raises(UniquenessViolationException) as exc_info:
            eps_of(Pair(Mark(n), p), PathVO(("left",)))
        assert str(exc_info.value) == "mark at /left belongs to 0 boxes"


class TestTranslations:
    """Unit tests for T1, T2, lg and the box-commuting rules."""

    def test_should_erase_marks_and_boxes(self):
        """Should give the plain term behind a marked one."""
        assert render_term(t1(SINGLE_BOX)) == "(m [x1.n | x2.o] e p)"
        assert render_term(t1(TWO_BOXES)) == (
            "(m [x1.(n [y1.o | y2.mu a:A. p] e1) | "
            "x2.(mu b:A. (b mu c:A. (c (q [z1.mu d:A. r | z2.s]))) e2)])"
        )

    def test_should_discharge_boxes_into_marks(self):
        """Should push each box payload onto the marks it owns."""
        assert render_term(t2(SINGLE_BOX)) == "(m [x1.(n e) | x2.(o e)] p)"
        assert render_term(t2(TWO_BOXES)) == (
            "(m [x1.(n [y1.(o e1) | y2.mu a:A. p]) | "
            "x2.mu b:A. (b mu c:A. (c (q [z1.mu d:A. r | z2.(s e2)])))])"
        )

    def test_should_retype_mu_on_the_way_to_marks(self):
        """Should give a discharged mu the eliminated type."""
        term = App(Mu("a", Imp(A, B), Name("a", Mark(IVar("f")))), Box(IVar("x")))
        assert render_term(t2(term)) == "mu a:B. (a (f x))"

    def test_should_measure_way_from_marks_to_boxes(self):
        """Should count each spine once on the way up and down."""
        assert lg(SINGLE_BOX) == 8
        assert lg(App(Mark(n), Box(e))) == 3

    def test_should_raise_for_lg_of_incorrect_term(self):
        """Should only measure correct terms."""
        with pytest.raises(NotCorrectException):
            lg(Pair(Mark(n), p))

    def test_should_commute_box_into_case(self):
        """Should push the box into both branches and shorten the way."""
        assert is_box_commuting(SINGLE_BOX.fun)
        assert not is_box_commuting(App(App(m, Case("x1", n, "x2", o)), e))
        steps = btr_step(SINGLE_BOX)
        assert [str(step.redex) for step in steps] == ["/fun Perm"]
        reduct = steps[0].term
        assert render_term(reduct) == "(m [x1.({n} [[e]]) | x2.({o} [[e]])] p)"
        assert lg(reduct) == 6

    def test_should_reach_t2_through_box_commuting_rules(self):
        """Should erase the box-commuting normal form to T2."""
        normal = btr_normal_form(SINGLE_BOX)
        assert render_term(normal) == "(m [x1.({n} [[e]]) | x2.({o} [[e]])] p)"
        assert t2_equals_btr_normal_form(SINGLE_BOX)

    def test_should_annihilate_among_marked_steps(self):
        """Should include annihilation next to the plain redexes."""
        reduct = btr_normal_form(SINGLE_BOX)
        kinds = [step.redex.kind for step in marked_step_all(reduct)]
        assert kinds == [RedexKind.PERM, RedexKind.ANNIHILATE, RedexKind.ANNIHILATE]


class TestLifting:
    """Unit tests for lifting reductions of T1."""

    def test_should_cross_marks_and_boxes(self):
        """Should descend through payloads on the way."""
        term = App(Mark(Lam("x", A, n)), Box(e))
        assert str(lift_path(term, PathVO(("fun", "body")))) == "/fun/payload/body"
        assert str(lift_path(term, PathVO(("elim",)))) == "/elim/payload"

    def test_should_lift_step_with_marked_counterpart(self):
        """Should lift the pivot step to one box-commuting step."""
        target = t2(SINGLE_BOX)
        redex, steps = lift_with_steps(SINGLE_BOX, target)
        assert str(redex) == "/fun Perm"
        assert [step.redex.kind for step in steps] == [RedexKind.PERM]
        assert render_term(steps[-1].term) == "(m [x1.({n} [[e]]) | x2.({o} [[e]])] p)"

    def test_should_annihilate_before_firing_payload_redex(self):
        """Should annihilate a mark whose payload forms the redex with the box."""
        term = App(Mark(Lam("x", A, IVar("x"))), Box(IVar("y")))
        _, steps = lift_with_steps(term, IVar("y"))
        assert [step.redex.kind for step in steps] == [RedexKind.ANNIHILATE, RedexKind.BETA]
        assert lift_step(term, IVar("y")) == IVar("y")

    def test_should_raise_when_target_is_not_a_reduct(self):
        """Should require a one-step reduct of T1."""
        with pytest.raises(PreconditionException) as exc_info:
            lift_step(SINGLE_BOX, IVar("zzz"))
        assert str(exc_info.value) == "lift_step: target is not a one-step reduct of T1"

    def test_should_raise_when_mark_hides_the_redex(self):
        """Should fail when the marked counterpart is no redex."""
        term = App(Mark(Lam("x", A, IVar("x"))), IVar("y"))
        with pytest.raises(NoLiftException) as exc_info:
            lift_step(term, IVar("y"))
        assert str(exc_info.value) == "cannot lift step of ({\\x:A. x} y) to y"

    def test_should_locate_enclosing_box(self):
        """Should return the pair whose box payload holds the path."""
        term = App(IVar("f"), Box(App(Lam("x", A, IVar("x")), IVar("y"))))
        assert inside_box_payload(term, PathVO(("elim", "payload"))) == PathVO.root()
        assert inside_box_payload(term, PathVO(("fun",))) is None
