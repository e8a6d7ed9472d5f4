"""This module contains the propositional formulas typing proof terms.

Negation is not a constructor: ``~A`` is ``Imp(A, Bottom())``.
"""

import re
from dataclasses import dataclass

from src.contexts.calculus.domain.exceptions.exception import InvalidFormulaException
from src.shared.domain.value_objects.value_object import BaseValueObject

ATOM_PATTERN = re.compile(r"[A-Z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Formula(BaseValueObject):
    """Base class of formulas."""

    def validate(self) -> None:
        """Formulas without fields have nothing to check."""


@dataclass(frozen=True)
class Atom(Formula):
    """A propositional atom."""

    name: str

    def validate(self) -> None:
        """Atom names are uppercase identifiers."""
        if not isinstance(self.name, str) or not ATOM_PATTERN.fullmatch(self.name):
            raise InvalidFormulaException(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Bottom(Formula):
    """Absurdity."""


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    def validate(self) -> None:
        """Both operands must be formulas."""
        if not isinstance(self.left, Formula) or not isinstance(self.right, Formula):
            raise InvalidFormulaException(
                f"{type(self).__name__} operands must be formulas"
            )


@dataclass(frozen=True)
class Imp(_Binary):
    """Implication ``left -> right``."""


@dataclass(frozen=True)
class And(_Binary):
    """Conjunction ``left /\\ right``."""


@dataclass(frozen=True)
class Or(_Binary):
    """Disjunction ``left \\/ right``."""


def neg(formula: Formula) -> Imp:
    """Return ``formula -> Bot``."""
    return Imp(formula, Bottom())


def is_negation(formula: Formula) -> bool:
    """Tell whether a formula has the shape ``A -> Bot``."""
    return isinstance(formula, Imp) and isinstance(formula.right, Bottom)


def connective_count(formula: Formula) -> int:
    """Count the Imp, And and Or nodes of a formula."""
    if isinstance(formula, _Binary):
        return 1 + connective_count(formula.left) + connective_count(formula.right)
    return 0


def subformulas(formula: Formula) -> list[Formula]:
    """List the subformulas of a formula, outermost first, without duplicates."""
    seen: list[Formula] = []
    stack = [formula]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.append(current)
        if isinstance(current, _Binary):
            stack.append(current.right)
            stack.append(current.left)
    return seen
