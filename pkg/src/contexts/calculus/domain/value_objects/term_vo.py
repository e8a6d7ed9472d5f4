"""This module contains the proof-term grammar and its marked extension.

Terms and eliminators are immutable trees. ``App`` spines associate to the
left, so ``(M e1 e2)`` is ``App(App(M, e1), e2)``. A term used as an
eliminator is the term itself.

``Mark`` and ``Box`` are the tracking constructors of marked terms. Their
payloads hold no marks or boxes, and the free variables of a payload are
constants: substitutions never enter a payload and host binders are renamed
away from payload variables instead of capturing them.

Every node exposes ``alpha_key``, a hashable canonical form that is equal for
two nodes exactly when they are alpha-equivalent.
"""

import re
from dataclasses import dataclass, fields
from functools import cached_property
from typing import Any, ClassVar

from src.contexts.calculus.domain.exceptions.exception import (
    InvalidTermException,
    NestingLimitException,
)
from src.contexts.calculus.domain.value_objects.formula_vo import Formula, Or
from src.shared.domain.value_objects.value_object import BaseValueObject

VARIABLE_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*'*")
RESERVED_WORDS = frozenset({"mu", "in1", "in2", "p1", "p2", "ctx"})


def validate_variable(name: object) -> None:
    """Raise unless ``name`` can name a variable.

    Args:
        name (object): Candidate variable name.

    Raises:
        InvalidTermException: If the name is not a lowercase identifier or is reserved.
    """
    if (
        not isinstance(name, str)
        or not VARIABLE_PATTERN.fullmatch(name)
        or name in RESERVED_WORDS
    ):
        raise InvalidTermException(f"invalid variable name {name!r}")


@dataclass(frozen=True)
class Node(BaseValueObject):
    """Common base of terms and eliminators."""

    CHILDREN: ClassVar[tuple[str, ...]] = ()

    def validate(self) -> None:
        """Check that every child field holds a node."""
        for selector in self.CHILDREN:
            if not isinstance(getattr(self, selector), Node):
                raise InvalidTermException(
                    f"{type(self).__name__}.{selector} must be a term or eliminator"
                )

    def children(self) -> list[tuple[str, "Node"]]:
        """List the child nodes with their selectors, left to right."""
        return [(selector, getattr(self, selector)) for selector in self.CHILDREN]

    @cached_property
    def alpha_key(self) -> tuple:
        """Canonical form, invariant under renaming of bound variables."""
        try:
            return _CanonicalKeyBuilder().key(self)
        except RecursionError as exc:
            raise NestingLimitException("alpha_key") from exc


@dataclass(frozen=True)
class Term(Node):
    """Base class of terms."""


@dataclass(frozen=True)
class Eliminator(Node):
    """Base class of eliminators that are not terms."""


Elim = Term | Eliminator


@dataclass(frozen=True)
class IVar(Term):
    """Intuitionistic variable occurrence."""

    name: str

    def validate(self) -> None:
        """Check the variable name."""
        validate_variable(self.name)


@dataclass(frozen=True)
class Lam(Term):
    """Abstraction ``\\var:annot. body``."""

    var: str
    annot: Formula
    body: Term

    CHILDREN: ClassVar[tuple[str, ...]] = ("body",)

    def validate(self) -> None:
        """Check binder, annotation and body."""
        validate_variable(self.var)
        _require_formula(self.annot, "Lam")
        _require_term(self.body, "Lam.body")


@dataclass(frozen=True)
class App(Term):
    """Application of a term to one eliminator."""

    fun: Term
    elim: Elim

    CHILDREN: ClassVar[tuple[str, ...]] = ("fun", "elim")

    def validate(self) -> None:
        """Check the function and the eliminator."""
        _require_term(self.fun, "App.fun")
        super().validate()


@dataclass(frozen=True)
class Pair(Term):
    """Pair ``<left, right>``."""

    left: Term
    right: Term

    CHILDREN: ClassVar[tuple[str, ...]] = ("left", "right")

    def validate(self) -> None:
        """Check both components."""
        _require_term(self.left, "Pair.left")
        _require_term(self.right, "Pair.right")


@dataclass(frozen=True)
class Inj(Term):
    """Injection ``in<side>[annot] body``; ``annot`` is the whole disjunction."""

    side: int
    annot: Formula
    body: Term

    CHILDREN: ClassVar[tuple[str, ...]] = ("body",)

    def validate(self) -> None:
        """Check side, disjunctive annotation and body."""
        _require_side(self.side, "Inj")
        if not isinstance(self.annot, Or):
            raise InvalidTermException("Inj annotation must be a disjunction")
        _require_term(self.body, "Inj.body")


@dataclass(frozen=True)
class Mu(Term):
    """Classical abstraction ``mu var:annot. body``; ``var`` has type ``~annot``."""

    var: str
    annot: Formula
    body: Term

    CHILDREN: ClassVar[tuple[str, ...]] = ("body",)

    def validate(self) -> None:
        """Check binder, annotation and body."""
        validate_variable(self.var)
        _require_formula(self.annot, "Mu")
        _require_term(self.body, "Mu.body")


@dataclass(frozen=True)
class Name(Term):
    """Naming ``(var body)`` of a classical variable."""

    var: str
    body: Term

    CHILDREN: ClassVar[tuple[str, ...]] = ("body",)

    def validate(self) -> None:
        """Check the classical variable and the body."""
        validate_variable(self.var)
        _require_term(self.body, "Name.body")


@dataclass(frozen=True)
class Pi(Eliminator):
    """Projection ``p1`` or ``p2``."""

    side: int

    def validate(self) -> None:
        """Check the side."""
        _require_side(self.side, "Pi")


@dataclass(frozen=True)
class Case(Eliminator):
    """Case eliminator ``[var1.branch1 | var2.branch2]``."""

    var1: str
    branch1: Term
    var2: str
    branch2: Term

    CHILDREN: ClassVar[tuple[str, ...]] = ("branch1", "branch2")

    def validate(self) -> None:
        """Check binders and branches."""
        validate_variable(self.var1)
        validate_variable(self.var2)
        _require_term(self.branch1, "Case.branch1")
        _require_term(self.branch2, "Case.branch2")


@dataclass(frozen=True)
class Mark(Term):
    """Mark ``{payload}`` of a marked term."""

    payload: Term

    CHILDREN: ClassVar[tuple[str, ...]] = ("payload",)

    def validate(self) -> None:
        """The payload is a plain term."""
        _require_term(self.payload, "Mark.payload")
        if contains_marks(self.payload):
            raise InvalidTermException("Mark payload must not contain marks or boxes")


@dataclass(frozen=True)
class Box(Eliminator):
    """Box ``[[payload]]`` of a marked term."""

    payload: Elim

    CHILDREN: ClassVar[tuple[str, ...]] = ("payload",)

    def validate(self) -> None:
        """The payload is a plain eliminator."""
        super().validate()
        if contains_marks(self.payload):
            raise InvalidTermException("Box payload must not contain marks or boxes")


def contains_marks(node: Node) -> bool:
    """Tell whether a node has a Mark or Box anywhere inside it."""
    stack: list[Node] = [node]
    while stack:
        current = stack.pop()
        if isinstance(current, Mark | Box):
            return True
        stack.extend(child for _, child in current.children())
    return False


def _require_term(value: Any, where: str) -> None:
    if not isinstance(value, Term):
        raise InvalidTermException(f"{where} must be a term")


def _require_formula(value: Any, where: str) -> None:
    if not isinstance(value, Formula):
        raise InvalidTermException(f"{where} annotation must be a formula")


def _require_side(value: Any, where: str) -> None:
    if value not in (1, 2) or isinstance(value, bool):
        raise InvalidTermException(f"{where} side must be 1 or 2")


class _CanonicalKeyBuilder:
    """Builds alpha keys with de Bruijn levels for bound variables.

    Intuitionistic and classical variables live in separate tables. Payloads
    of marks and boxes are keyed on their own, their variables being constants.
    """

    def __init__(self) -> None:
        self.ivars: dict[str, list[int]] = {}
        self.cvars: dict[str, list[int]] = {}
        self.depth = 0

    def key(self, node: Node) -> tuple:
        match node:
            case IVar(name=name):
                return ("var", self._lookup(self.ivars, name))
            case Lam(var=var, annot=annot, body=body):
                return ("lam", annot, self._under(self.ivars, var, body))
            case Mu(var=var, annot=annot, body=body):
                return ("mu", annot, self._under(self.cvars, var, body))
            case Name(var=var, body=body):
                return ("name", self._lookup(self.cvars, var), self.key(body))
            case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
                return (
                    "case",
                    self._under(self.ivars, var1, branch1),
                    self._under(self.ivars, var2, branch2),
                )
            case Mark(payload=payload) | Box(payload=payload):
                return (type(node).__name__.lower(), payload.alpha_key)
            case _:
                parts: list[Any] = [type(node).__name__.lower()]
                for field in fields(node):
                    value = getattr(node, field.name)
                    parts.append(self.key(value) if isinstance(value, Node) else value)
                return tuple(parts)

    def _lookup(self, table: dict[str, list[int]], name: str) -> tuple:
        levels = table.get(name)
        if levels:
            return ("bound", levels[-1])
        return ("free", name)

    def _under(self, table: dict[str, list[int]], name: str, body: Node) -> tuple:
        table.setdefault(name, []).append(self.depth)
        self.depth += 1
        try:
            return self.key(body)
        finally:
            self.depth -= 1
            table[name].pop()
