"""This module contains the canonical text rendering of formulas, terms and contexts."""

from src.contexts.calculus.domain.value_objects.formula_vo import (
    And,
    Atom,
    Bottom,
    Formula,
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
    Node,
    Pair,
    Pi,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)

_IMP, _OR, _AND, _ATOM = 1, 2, 3, 4


def render_formula(formula: Formula, level: int = 0) -> str:
    """Render a formula with the fewest parentheses the grammar needs.

    Args:
        formula (Formula): The formula.
        level (int): Binding strength required by the surrounding operator.

    Returns:
        str: The rendering.
    """
    match formula:
        case Atom(name=name):
            return name
        case Bottom():
            return "Bot"
        case Imp(left=left, right=right):
            text, strength = f"{render_formula(left, _OR)} -> {render_formula(right, _IMP)}", _IMP
        case Or(left=left, right=right):
            text, strength = f"{render_formula(left, _OR)} \\/ {render_formula(right, _AND)}", _OR
        case And(left=left, right=right):
            text, strength = f"{render_formula(left, _AND)} /\\ {render_formula(right, _ATOM)}", _AND
        case _:
            raise TypeError(f"not a formula: {formula!r}")
    return f"({text})" if strength < level else text


def render_term(node: Node) -> str:
    """Render a term, marked term or eliminator.

    Application spines are flattened: ``(m n p1)`` rather than ``((m n) p1)``.
    """
    match node:
        case IVar(name=name):
            return name
        case Lam(var=var, annot=annot, body=body):
            return f"\\{var}:{render_formula(annot)}. {render_term(body)}"
        case App():
            parts: list[str] = []
            current: Node = node
            while isinstance(current, App):
                parts.append(render_term(current.elim))
                current = current.fun
            parts.append(render_term(current))
            return "(" + " ".join(reversed(parts)) + ")"
        case Pair(left=left, right=right):
            return f"<{render_term(left)}, {render_term(right)}>"
        case Inj(side=side, annot=annot, body=body):
            return f"in{side}[{render_formula(annot)}] {render_term(body)}"
        case Mu(var=var, annot=annot, body=body):
            return f"mu {var}:{render_formula(annot)}. {render_term(body)}"
        case Name(var=var, body=body):
            return f"({var} {render_term(body)})"
        case Mark(payload=payload):
            return "{" + render_term(payload) + "}"
        case Pi(side=side):
            return f"p{side}"
        case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
            return f"[{var1}.{render_term(branch1)} | {var2}.{render_term(branch2)}]"
        case Box(payload=payload):
            inner = render_term(payload)
            if isinstance(payload, Case):
                return f"[[ {inner} ]]"
            return f"[[{inner}]]"
        case _:
            raise TypeError(f"not a term: {node!r}")


def render_context(context: TypingContextVO) -> str:
    """Render a context block ``ctx x:A, a:~B;``; empty contexts render as ``""``."""
    declarations = [
        f"{name}:{render_formula(formula)}"
        for name, formula in sorted(context.intuitionistic.items())
    ]
    declarations += [
        f"{name}:~{render_formula(formula, _ATOM)}"
        for name, formula in sorted(context.classical.items())
    ]
    if not declarations:
        return ""
    return "ctx " + ", ".join(declarations) + ";"
