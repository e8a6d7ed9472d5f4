"""This module contains the scenario of the permutative-pivot theorem.

A scenario fixes a scrutinee ``M``, case branches ``x1.N1`` and ``x2.N2``, a
pushed eliminator ``eps`` and a tail ``V``. It builds

* ``S1 = (M [x1.N1 | x2.N2] eps V)``,
* ``S2 = (M [x1.(N1 eps) | x2.(N2 eps)] V)``, the permutative reduct of S1,
* ``M0 = (M [x1.{N1} | x2.{N2}] [[eps]] V)``, the marked term whose T1 is S1
  and whose T2 is S2.
"""

from dataclasses import dataclass
from enum import Enum

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.services.term_service import (
    free_ivars,
    rename_binder_away,
)
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Elim,
    Mark,
    Pi,
    Term,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)
from src.shared.domain.value_objects.value_object import BaseValueObject


class ScenarioModeKind(str, Enum):
    """Shape of the pushed eliminator."""

    TERM = "term"
    PROJ = "proj"
    CASE = "case"

    @classmethod
    def of(cls, elim: Elim) -> "ScenarioModeKind":
        """Mode matching the shape of an eliminator."""
        if isinstance(elim, Case):
            return cls.CASE
        if isinstance(elim, Pi):
            return cls.PROJ
        return cls.TERM


@dataclass(frozen=True)
class AppScenarioVO(BaseValueObject):
    """Components of one instance of the permutative-pivot theorem."""

    context: TypingContextVO
    scrutinee: Term
    var1: str
    branch1: Term
    var2: str
    branch2: Term
    eps: Elim
    tail: tuple[Elim, ...] = ()
    mode: ScenarioModeKind | None = None

    def validate(self) -> None:
        """The mode agrees with ``eps`` and case mode has an empty tail.

        Case binders free in ``eps`` are renamed so pushing ``eps`` into the
        branches captures nothing.
        """
        if not isinstance(self.scrutinee, Term):
            raise InvalidTermException("scenario scrutinee must be a term")
        if isinstance(self.eps, Box) or any(isinstance(e, Box) for e in self.tail):
            raise InvalidTermException("scenario eliminators must be plain")
        actual = ScenarioModeKind.of(self.eps)
        if self.mode is None:
            object.__setattr__(self, "mode", actual)
        elif self.mode is not actual:
            raise InvalidTermException(
                f"mode {self.mode.value} does not match eps of shape {actual.value}"
            )
        if self.mode is ScenarioModeKind.CASE and self.tail:
            raise InvalidTermException("case mode requires an empty tail")
        pushed = free_ivars(self.eps)
        for var_field, branch_field in (("var1", "branch1"), ("var2", "branch2")):
            var, branch = rename_binder_away(
                getattr(self, var_field), getattr(self, branch_field), pushed
            )
            object.__setattr__(self, var_field, var)
            object.__setattr__(self, branch_field, branch)

    @property
    def case(self) -> Case:
        """The case eliminator of S1."""
        return Case(self.var1, self.branch1, self.var2, self.branch2)

    @property
    def pivot_depth(self) -> int:
        """Number of ``fun`` selectors from the root of S1 to its permutative pivot."""
        return len(self.tail)

    @property
    def s1(self) -> Term:
        """``(M [x1.N1 | x2.N2] eps V)``."""
        return _apply(App(App(self.scrutinee, self.case), self.eps), self.tail)

    @property
    def s2(self) -> Term:
        """``(M [x1.(N1 eps) | x2.(N2 eps)] V)``, the permutative reduct of S1 at its pivot."""
        pushed = Case(
            self.var1, App(self.branch1, self.eps), self.var2, App(self.branch2, self.eps)
        )
        return _apply(App(self.scrutinee, pushed), self.tail)

    @property
    def pivot(self) -> PathVO:
        """Path of the permutative redex in S1."""
        return PathVO(("fun",) * self.pivot_depth)

    @property
    def marked_root(self) -> Term:
        """``(M [x1.{N1} | x2.{N2}] [[eps]] V)``."""
        marked_case = Case(self.var1, Mark(self.branch1), self.var2, Mark(self.branch2))
        return _apply(App(App(self.scrutinee, marked_case), Box(self.eps)), self.tail)

    @property
    def payloads_closed(self) -> bool:
        """Whether neither payload mentions its own case binder."""
        return self.var1 not in free_ivars(self.branch1) and self.var2 not in free_ivars(
            self.branch2
        )


def _apply(head: Term, elims: tuple[Elim, ...]) -> Term:
    for elim in elims:
        head = App(head, elim)
    return head
