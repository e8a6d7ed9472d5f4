"""This module contains the syntax-directed typechecker and the lgt measure.

Contexts are read additively: one context serves every premise. Marks and
boxes are transparent for typing.
"""

from src.contexts.calculus.domain.exceptions.exception import (
    NestingLimitException,
    TypingException,
)
from src.contexts.calculus.domain.services.printer_service import render_formula
from src.contexts.calculus.domain.value_objects.formula_vo import (
    And,
    Bottom,
    Formula,
    Imp,
    Or,
    connective_count,
)
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Elim,
    Inj,
    IVar,
    Lam,
    Mark,
    Mu,
    Name,
    Node,
    Pair,
    Pi,
    Term,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)


def lgt(formula: Formula) -> int:
    """Number of connectives of a formula; atoms and Bot count zero."""
    return connective_count(formula)


def check(context: TypingContextVO, term: Term) -> Formula:
    """Return the type of ``term`` under ``context``.

    Args:
        context (TypingContextVO): Declarations of the free variables.
        term (Term): The term to type.

    Returns:
        Formula: The unique type of the term.

    Raises:
        TypingException: If no rule applies; carries the path of the failing node.
        NestingLimitException: If the term is too deep to walk.
    """
    try:
        return TypeChecker(context).infer(term)
    except RecursionError as exc:
        raise NestingLimitException("check") from exc


def check_elim(context: TypingContextVO, argument: Formula, elim: Elim) -> Formula:
    """Type of an eliminator applied to something of type ``argument``."""
    return TypeChecker(context).infer_elim(argument, elim, PathVO.root())


def environment_at(context: TypingContextVO, term: Term, path: PathVO) -> TypingContextVO:
    """Extend ``context`` with the declarations of the binders crossed by ``path``.

    Raises:
        TypingException: If the type of a case scrutinee on the way cannot be found.
    """
    checker = TypeChecker(context)
    current: Node = term
    for depth, selector in enumerate(path.steps):
        here = PathVO(path.steps[:depth])
        match current:
            case Lam(var=var, annot=annot):
                checker.intuitionistic[var] = annot
            case Mu(var=var, annot=annot):
                checker.classical[var] = annot
            case App(fun=fun, elim=elim) if selector == "elim":
                inner = elim.payload if isinstance(elim, Box) else elim
                if isinstance(inner, Case):
                    scrutinee = checker.infer(fun, here.child("fun"))
                    if not isinstance(scrutinee, Or):
                        raise TypingException(str(here), "case on a non-disjunction")
                    checker.pending_case = (inner, scrutinee)
            case Box():
                pass
            case Case(var1=var1, var2=var2):
                pending = checker.pending_case
                if pending is None or pending[0] is not current:
                    raise TypingException(str(here), "case without a typed scrutinee")
                scrutinee = pending[1]
                if selector == "branch1":
                    checker.intuitionistic[var1] = scrutinee.left
                else:
                    checker.intuitionistic[var2] = scrutinee.right
        current = getattr(current, selector)
    return TypingContextVO(checker.intuitionistic, {
        name: formula
        for name, formula in checker.classical.items()
        if name not in checker.intuitionistic
    })


class TypeChecker:
    """Typechecker over mutable scopes, restored on the way back up."""

    def __init__(self, context: TypingContextVO) -> None:
        """Initialize the TypeChecker.

        Args:
            context (TypingContextVO): Declarations of the free variables.
        """
        self.intuitionistic: dict[str, Formula] = dict(context.intuitionistic)
        self.classical: dict[str, Formula] = dict(context.classical)
        self.pending_case: tuple[Case, Or] | None = None

    def infer(self, term: Node, path: PathVO | None = None) -> Formula:
        """Infer the type of a term."""
        path = path if path is not None else PathVO.root()
        match term:
            case IVar(name=name):
                if name not in self.intuitionistic:
                    raise TypingException(str(path), f"unbound variable {name}")
                return self.intuitionistic[name]
            case Lam(var=var, annot=annot, body=body):
                result = self._under(self.intuitionistic, var, annot, body, path.child("body"))
                return Imp(annot, result)
            case App(fun=fun, elim=elim):
                argument = self.infer(fun, path.child("fun"))
                return self.infer_elim(argument, elim, path.child("elim"))
            case Pair(left=left, right=right):
                return And(
                    self.infer(left, path.child("left")),
                    self.infer(right, path.child("right")),
                )
            case Inj(side=side, annot=annot, body=body):
                expected = annot.left if side == 1 else annot.right
                actual = self.infer(body, path.child("body"))
                if actual != expected:
                    raise TypingException(
                        str(path),
                        f"in{side} expects {render_formula(expected)}, got {render_formula(actual)}",
                    )
                return annot
            case Mu(var=var, annot=annot, body=body):
                result = self._under(self.classical, var, annot, body, path.child("body"))
                if result != Bottom():
                    raise TypingException(
                        str(path), f"mu body must have type Bot, got {render_formula(result)}"
                    )
                return annot
            case Name(var=var, body=body):
                if var not in self.classical:
                    raise TypingException(str(path), f"unbound classical variable {var}")
                expected = self.classical[var]
                actual = self.infer(body, path.child("body"))
                if actual != expected:
                    raise TypingException(
                        str(path),
                        f"{var} expects {render_formula(expected)}, got {render_formula(actual)}",
                    )
                return Bottom()
            case Mark(payload=payload):
                return self.infer(payload, path.child("payload"))
            case _:
                raise TypingException(str(path), f"{type(term).__name__} is not a term")

    def infer_elim(self, argument: Formula, elim: Node, path: PathVO) -> Formula:
        """Type of ``elim`` applied to a term of type ``argument``."""
        match elim:
            case Box(payload=payload):
                return self.infer_elim(argument, payload, path.child("payload"))
            case Pi(side=side):
                if not isinstance(argument, And):
                    raise TypingException(
                        str(path), f"projection of non-conjunction {render_formula(argument)}"
                    )
                return argument.left if side == 1 else argument.right
            case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
                if not isinstance(argument, Or):
                    raise TypingException(
                        str(path), f"case on non-disjunction {render_formula(argument)}"
                    )
                first = self._under(
                    self.intuitionistic, var1, argument.left, branch1, path.child("branch1")
                )
                second = self._under(
                    self.intuitionistic, var2, argument.right, branch2, path.child("branch2")
                )
                if first != second:
                    raise TypingException(
                        str(path),
                        f"case branches disagree: {render_formula(first)} vs {render_formula(second)}",
                    )
                return first
            case Term():
                if not isinstance(argument, Imp):
                    raise TypingException(
                        str(path), f"application of non-function {render_formula(argument)}"
                    )
                actual = self.infer(elim, path)
                if actual != argument.left:
                    raise TypingException(
                        str(path),
                        f"argument expects {render_formula(argument.left)}, got {render_formula(actual)}",
                    )
                return argument.right
            case _:
                raise TypingException(str(path), f"{type(elim).__name__} is not an eliminator")

    def _under(
        self,
        table: dict[str, Formula],
        name: str,
        formula: Formula,
        body: Node,
        path: PathVO,
    ) -> Formula:
        missing = name not in table
        previous = table.get(name)
        table[name] = formula
        try:
            return self.infer(body, path)
        finally:
            if missing:
                del table[name]
            else:
                table[name] = previous  # type: ignore[assignment]
