"""Unit tests for the printer service."""

from src.contexts.calculus.domain.services.printer_service import (
    render_context,
    render_formula,
    render_term,
)
from src.contexts.calculus.domain.value_objects.formula_vo import (
    And,
    Atom,
    Bottom,
    Imp,
    Or,
)
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


class TestRenderFormula:
    """Unit tests for render_formula."""

    def test_should_associate_implication_to_the_right(self):
        """Should only parenthesize a left implication."""
        assert render_formula(Imp(A, Imp(B, A))) == "A -> B -> A"
        assert render_formula(Imp(Imp(A, B), A)) == "(A -> B) -> A"

    def test_should_respect_precedence(self):
        """Should bind /\\ tighter than \\/ tighter than ->."""
        assert render_formula(Or(A, And(B, A))) == "A \\/ B /\\ A"
        assert render_formula(And(Or(A, B), A)) == "(A \\/ B) /\\ A"
        assert render_formula(Imp(Or(A, B), And(A, B))) == "A \\/ B -> A /\\ B"

    def test_should_associate_binary_connectives_to_the_left(self):
        """Should parenthesize a right-nested disjunction."""
        assert render_formula(Or(Or(A, B), A)) == "A \\/ B \\/ A"
        assert render_formula(Or(A, Or(B, A))) == "A \\/ (B \\/ A)"

    def test_should_render_bottom(self):
        """Should spell absurdity Bot."""
        assert render_formula(Imp(A, Bottom())) == "A -> Bot"


class TestRenderTerm:
    """Unit tests for render_term."""

    def test_should_flatten_application_spines(self):
        """Should print a spine in one pair of parentheses."""
        f, a, b = IVar("f"), IVar("a"), IVar("b")
        assert render_term(App(App(f, a), b)) == "(f a b)"
        assert render_term(App(f, App(a, b))) == "(f (a b))"

    def test_should_render_introductions(self):
        """Should render abstractions, pairs and injections."""
        x, y = IVar("x"), IVar("y")
        assert render_term(Lam("x", Imp(A, B), x)) == "\\x:A -> B. x"
        assert render_term(Pair(x, y)) == "<x, y>"
        assert render_term(Inj(1, Or(A, B), x)) == "in1[A \\/ B] x"

    def test_should_render_classical_constructors(self):
        """Should render mu abstractions and namings."""
        assert render_term(Mu("a", A, Name("a", IVar("x")))) == "mu a:A. (a x)"

    def test_should_render_eliminators(self):
        """Should render projections and cases in application position."""
        m = IVar("m")
        assert render_term(App(m, Pi(1))) == "(m p1)"
        case = Case("x", IVar("x"), "y", IVar("y"))
        assert render_term(App(m, case)) == "(m [x.x | y.y])"

    def test_should_render_marks_and_boxes(self):
        """Should bracket boxed cases with spaces."""
        n, e = IVar("n"), IVar("e")
        assert render_term(App(Mark(n), Box(e))) == "({n} [[e]])"
        case = Case("x", IVar("x"), "y", IVar("y"))
        assert render_term(App(IVar("m"), Box(case))) == "(m [[ [x.x | y.y] ]])"


class TestRenderContext:
    """Unit tests for render_context."""

    def test_should_render_sorted_declarations(self):
        """Should list intuitionistic declarations first, each sort sorted."""
        context = TypingContextVO({"y": A, "x": Imp(A, B)}, {"b": A, "a": Imp(A, B)})
        assert render_context(context) == "ctx x:A -> B, y:A, a:~(A -> B), b:~A;"

    def test_should_render_empty_context_as_nothing(self):
        """Should render no block for an empty context."""
        assert render_context(TypingContextVO.empty()) == ""
