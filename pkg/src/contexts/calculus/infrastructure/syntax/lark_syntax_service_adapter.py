"""This module contains the lark adapter for the Syntax Service Port."""

from collections.abc import Callable
from typing import Any

from lark import Lark, Token, Transformer, Tree
from lark.exceptions import UnexpectedEOF, UnexpectedInput

from src.contexts.calculus.domain.exceptions.exception import (
    InvalidFormulaException,
    InvalidTermException,
    ShapeException,
    SyntaxErrorException,
    UnboundVariableException,
    VariableSortException,
)
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.services.printer_service import (
    render_context,
    render_formula,
    render_term,
)
from src.contexts.calculus.domain.services.term_service import (
    all_names,
    build_spine,
    fresh_name,
)
from src.contexts.calculus.domain.value_objects.app_scenario_vo import (
    AppScenarioVO,
    ScenarioModeKind,
)
from src.contexts.calculus.domain.value_objects.formula_vo import (
    And,
    Atom,
    Bottom,
    Formula,
    Imp,
    Or,
    neg,
)
from src.contexts.calculus.domain.value_objects.source_unit_vo import SourceUnitVO
from src.contexts.calculus.domain.value_objects.term_vo import (
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
from src.shared.infrastructure.logging.logger import Logger

GRAMMAR = r"""
source: unit (";" unit)* ";"?
unit: [ctx_block] term [annotation]
ctx_block: "ctx" [decl ("," decl)*] ";"
decl: VAR ":" formula
annotation: "::" formula

scenario: [ctx_block] binding+
binding: "M" "=" term ";"          -> bind_scrutinee
       | "N1" "=" term ";"         -> bind_branch1
       | "N2" "=" term ";"         -> bind_branch2
       | "eps" "=" elim ";"        -> bind_eps
       | "V" "=" elim* ";"         -> bind_tail
       | "mode" "=" VAR ";"        -> bind_mode

formula_only: formula

?formula: disj
        | disj "->" formula        -> imp
?disj: conj
     | disj "\\/" conj             -> or_
?conj: unary
     | conj "/\\" unary            -> and_
?unary: "~" unary                  -> neg
      | ATOM                       -> atom
      | "Bot"                      -> bot
      | "(" formula ")"

?term: "\\" VAR ":" formula "." term   -> lam
     | "mu" VAR ":" formula "." term    -> mu
     | "in1" "[" formula "]" term      -> inj1
     | "in2" "[" formula "]" term      -> inj2
     | atomic
?atomic: VAR                           -> var
       | "(" term elim* ")"            -> app
       | "<" term "," term ">"         -> pair
       | "{" term "}"                  -> mark
?elim: term
     | "p1"                            -> proj1
     | "p2"                            -> proj2
     | "[" VAR "." term "|" VAR "." term "]"  -> case
     | "[[" elim "]]"                  -> box

VAR: /[a-z][A-Za-z0-9_]*'*/
ATOM: /[A-Z][A-Za-z0-9_]*/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

MAX_NESTING = 200
"""Deepest node accepted from source text; an n-ary application counts one
level per eliminator."""

_ELIM_RULES = frozenset({"proj1", "proj2", "case", "box"})
_INTUITIONISTIC, _CLASSICAL = "intuitionistic", "classical"


class _FormulaBuilder(Transformer):
    """Builds formulas bottom up; ``~A`` becomes ``A -> Bot``."""

    def atom(self, children: list[Token]) -> Formula:
        return Atom(str(children[0]))

    def bot(self, _: list) -> Formula:
        return Bottom()

    def neg(self, children: list[Formula]) -> Formula:
        return neg(children[0])

    def imp(self, children: list[Formula]) -> Formula:
        return Imp(children[0], children[1])

    def or_(self, children: list[Formula]) -> Formula:
        return Or(children[0], children[1])

    def and_(self, children: list[Formula]) -> Formula:
        return And(children[0], children[1])


class _TermResolver:
    """Resolves a parse tree into a term, tracking the sort of every name in scope.

    Without a context block the term is open: undeclared free names are
    intuitionistic. With one, every free name must be declared.
    """

    def __init__(self, formulas: _FormulaBuilder, context: TypingContextVO, open_term: bool):
        self.formulas = formulas
        self.open_term = open_term
        self.scope: dict[str, list[str]] = {}
        for name in context.intuitionistic:
            self.scope[name] = [_INTUITIONISTIC]
        for name in context.classical:
            self.scope[name] = [_CLASSICAL]

    def formula(self, tree: Tree) -> Formula:
        try:
            return self.formulas.transform(tree)
        except InvalidFormulaException as exc:
            raise _located(tree, exc.message) from exc

    def term(self, tree: Tree) -> Term:
        match tree.data:
            case "var":
                token = tree.children[0]
                name = str(token)
                if self._sort(token) == _CLASSICAL:
                    raise VariableSortException(
                        name, _INTUITIONISTIC, token.line, token.column
                    )
                return _build(tree, lambda: IVar(name))
            case "lam" | "mu":
                var, annot, body = tree.children
                sort = _INTUITIONISTIC if tree.data == "lam" else _CLASSICAL
                formula = self.formula(annot)
                resolved = self._under(str(var), sort, body)
                node_type = Lam if tree.data == "lam" else Mu
                return _build(tree, lambda: node_type(str(var), formula, resolved))
            case "inj1" | "inj2":
                annot, body = tree.children
                formula = self.formula(annot)
                resolved = self.term(body)
                side = 1 if tree.data == "inj1" else 2
                return _build(tree, lambda: Inj(side, formula, resolved))
            case "app":
                return self._application(tree)
            case "pair":
                left, right = (self.term(child) for child in tree.children)
                return _build(tree, lambda: Pair(left, right))
            case "mark":
                payload = self.term(tree.children[0])
                return _build(tree, lambda: Mark(payload))
        raise _located(tree, f"expected a term, found {tree.data}")

    def elim(self, tree: Tree) -> Elim:
        match tree.data:
            case "proj1":
                return Pi(1)
            case "proj2":
                return Pi(2)
            case "case":
                var1, branch1, var2, branch2 = tree.children
                first = self._under(str(var1), _INTUITIONISTIC, branch1)
                second = self._under(str(var2), _INTUITIONISTIC, branch2)
                return _build(tree, lambda: Case(str(var1), first, str(var2), second))
            case "box":
                payload = self.elim(tree.children[0])
                return _build(tree, lambda: Box(payload))
        return self.term(tree)

    def _application(self, tree: Tree) -> Term:
        head, *elims = tree.children
        if not elims:
            return self.term(head)
        if head.data == "var" and self._sort(head.children[0]) == _CLASSICAL:
            token = head.children[0]
            if len(elims) != 1 or elims[0].data in _ELIM_RULES:
                raise ShapeException(str(token), token.line, token.column)
            body = self.term(elims[0])
            return _build(tree, lambda: Name(str(token), body))
        function = self.term(head)
        resolved = [self.elim(elim) for elim in elims]
        return _build(tree, lambda: build_spine(function, resolved))

    def _sort(self, token: Token) -> str:
        sorts = self.scope.get(str(token))
        if sorts:
            return sorts[-1]
        if self.open_term:
            return _INTUITIONISTIC
        raise UnboundVariableException(str(token), token.line, token.column)

    def _under(self, name: str, sort: str, body: Tree) -> Term:
        self.scope.setdefault(name, []).append(sort)
        try:
            return self.term(body)
        finally:
            self.scope[name].pop()


class LarkSyntaxServiceAdapter(SyntaxServicePort):
    """Adapter parsing the concrete syntax with a lark LALR parser."""

    parser = Lark(
        GRAMMAR,
        start=["source", "scenario", "formula_only"],
        parser="lalr",
        propagate_positions=True,
        maybe_placeholders=True,
    )

    def __init__(self, logger: Logger) -> None:
        """Initializes the lark syntax adapter.

        Args:
            logger (Logger): Logger instance for logging.
        """
        self.logger = logger
        self.formulas = _FormulaBuilder()

    def parse(self, text: str) -> SourceUnitVO:
        """Parse exactly one source unit."""
        units = self.parse_units(text)
        if len(units) != 1:
            line, column = _end_of(text)
            raise SyntaxErrorException(line, column, f"expected one unit, found {len(units)}")
        return units[0]

    def parse_units(self, text: str) -> list[SourceUnitVO]:
        """Parse units separated by ``;``."""
        tree = self._parse(text, "source")
        return [self._unit(unit, None) for unit in tree.children]

    def parse_formula(self, text: str) -> Formula:
        """Parse a formula."""
        tree = self._parse(text, "formula_only")
        return _TermResolver(self.formulas, TypingContextVO.empty(), True).formula(
            tree.children[0]
        )

    def parse_scenario(self, text: str) -> AppScenarioVO:
        """Parse a scenario file.

        Bindings ``M``, ``N1``, ``N2`` and ``eps`` are required; ``V`` defaults
        to no tail and ``mode`` to the shape of ``eps``. The case binders are
        ``x1`` and ``x2`` unless the context already uses those names.
        """
        tree = self._parse(text, "scenario")
        ctx_tree, *bindings = tree.children
        context, declared = self._context(ctx_tree)
        resolver = _TermResolver(self.formulas, context, not declared)
        values: dict[str, Any] = {}
        for binding in bindings:
            if binding.data in values:
                raise _located(binding, f"{binding.data.removeprefix('bind_')} bound twice")
            match binding.data:
                case "bind_tail":
                    values["bind_tail"] = tuple(resolver.elim(e) for e in binding.children)
                case "bind_eps":
                    values["bind_eps"] = resolver.elim(binding.children[0])
                case "bind_mode":
                    token = binding.children[0]
                    try:
                        values["bind_mode"] = ScenarioModeKind(str(token))
                    except ValueError as exc:
                        raise SyntaxErrorException(
                            token.line, token.column, f"unknown mode {token}"
                        ) from exc
                case _:
                    values[binding.data] = resolver.term(binding.children[0])
        for required, label in (
            ("bind_scrutinee", "M"),
            ("bind_branch1", "N1"),
            ("bind_branch2", "N2"),
            ("bind_eps", "eps"),
        ):
            if required not in values:
                line, column = _end_of(text)
                raise SyntaxErrorException(line, column, f"scenario does not bind {label}")

        taken = set(context.names())
        for key in ("bind_scrutinee", "bind_branch1", "bind_branch2", "bind_eps"):
            taken |= all_names(values[key])
        var1 = "x1" if "x1" not in taken else fresh_name("x1", taken)
        var2 = "x2" if "x2" not in taken else fresh_name("x2", taken)
        return AppScenarioVO(
            context=context,
            scrutinee=values["bind_scrutinee"],
            var1=var1,
            branch1=values["bind_branch1"],
            var2=var2,
            branch2=values["bind_branch2"],
            eps=values["bind_eps"],
            tail=values.get("bind_tail", ()),
            mode=values.get("bind_mode"),
        )

    def parse_trace(self, text: str, context: TypingContextVO) -> list[Term]:
        """Parse ``;``-separated terms, resolving free variables in ``context``."""
        tree = self._parse(text, "source")
        return [self._unit(unit, context).term for unit in tree.children]

    def print(self, node: Node) -> str:
        """Canonical rendering of a term, marked term or eliminator."""
        return render_term(node)

    def print_unit(self, unit: SourceUnitVO) -> str:
        """Rendering of a whole unit that parses back to it."""
        parts = [render_context(unit.context), render_term(unit.term)]
        if unit.expected is not None:
            parts.append(f":: {render_formula(unit.expected)}")
        return " ".join(part for part in parts if part)

    def print_scenario(self, scenario: AppScenarioVO) -> str:
        """Rendering of a scenario that parses back to it up to the case binders."""
        tail = " ".join(render_term(elim) for elim in scenario.tail)
        lines = [
            render_context(scenario.context),
            f"M = {render_term(scenario.scrutinee)};",
            f"N1 = {render_term(scenario.branch1)};",
            f"N2 = {render_term(scenario.branch2)};",
            f"eps = {render_term(scenario.eps)};",
            f"V = {tail};" if tail else "V = ;",
            f"mode = {scenario.mode.value};" if scenario.mode is not None else "",
        ]
        return "\n".join(line for line in lines if line) + "\n"

    def _parse(self, text: str, start: str) -> Tree:
        try:
            tree = self.parser.parse(text, start=start)
        except UnexpectedEOF as exc:
            line, column = _end_of(text)
            self.logger.debug(message="Parse failed", line=line, column=column)
            raise SyntaxErrorException(line, column, "unexpected end of input") from exc
        except UnexpectedInput as exc:
            self.logger.debug(message="Parse failed", line=exc.line, column=exc.column)
            raise SyntaxErrorException(exc.line, exc.column, _describe(exc)) from exc
        _check_nesting(tree)
        return tree

    def _unit(self, unit: Tree, fallback: TypingContextVO | None) -> SourceUnitVO:
        ctx_tree, term_tree, annotation = unit.children
        context, declared = self._context(ctx_tree)
        if not declared and fallback is not None:
            context, declared = fallback, True
        resolver = _TermResolver(self.formulas, context, not declared)
        term = resolver.term(term_tree)
        expected = resolver.formula(annotation.children[0]) if annotation is not None else None
        return SourceUnitVO(term=term, context=context, expected=expected)

    def _context(self, ctx_tree: Tree | None) -> tuple[TypingContextVO, bool]:
        """Context of a block; a declaration written ``a:~A`` is classical."""
        if ctx_tree is None:
            return TypingContextVO.empty(), False
        resolver = _TermResolver(self.formulas, TypingContextVO.empty(), True)
        intuitionistic: dict[str, Formula] = {}
        classical: dict[str, Formula] = {}
        for decl in ctx_tree.children:
            if decl is None:
                continue
            token, formula_tree = decl.children
            name = str(token)
            if name in intuitionistic or name in classical:
                raise SyntaxErrorException(token.line, token.column, f"{name} declared twice")
            if formula_tree.data == "neg":
                classical[name] = resolver.formula(formula_tree.children[0])
            else:
                intuitionistic[name] = resolver.formula(formula_tree)
        return _build(ctx_tree, lambda: TypingContextVO(intuitionistic, classical)), True


def _build(tree: Tree, factory: Callable[[], Any]) -> Any:
    """Run a constructor, reporting malformed nodes at the position of ``tree``."""
    try:
        return factory()
    except (InvalidTermException, InvalidFormulaException) as exc:
        raise _located(tree, exc.message) from exc


def _check_nesting(tree: Tree) -> None:
    stack = [(tree, 1)]
    while stack:
        node, depth = stack.pop()
        if depth > MAX_NESTING:
            raise _located(node, f"nesting deeper than {MAX_NESTING} levels")
        children = [child for child in node.children if isinstance(child, Tree)]
        if node.data == "app":
            stack.extend(
                (child, depth + max(1, len(children) - index))
                for index, child in enumerate(children)
            )
        else:
            stack.extend((child, depth + 1) for child in children)


def _located(tree: Tree, message: str) -> SyntaxErrorException:
    meta = tree.meta
    if getattr(meta, "empty", True):
        return SyntaxErrorException(1, 1, message)
    return SyntaxErrorException(meta.line, meta.column, message)


def _end_of(text: str) -> tuple[int, int]:
    lines = text.split("\n")
    return len(lines), len(lines[-1]) + 1


def _describe(exc: UnexpectedInput) -> str:
    token = getattr(exc, "token", None)
    if token is not None:
        return f"unexpected token {str(token)!r}"
    char = getattr(exc, "char", None)
    if char is not None:
        return f"unexpected character {char!r}"
    return "unexpected input"
