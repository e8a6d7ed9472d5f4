"""This module contains the certificate of a lifted reduction of S1."""

from dataclasses import dataclass

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.redex_vo import RedexVO
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class CertificateStepVO(BaseValueObject):
    """One step of the trace of S1 with its lift.

    ``marked_kinds`` lists the kinds of the marked steps fired, ``t2_steps``
    the number of steps taken by the ``T2`` images and ``stalled`` whether
    the ``T2`` image did not move.
    """

    index: int
    redex: RedexVO
    marked_kinds: tuple[RedexKind, ...]
    lg_before: int
    lg_after: int
    t2_steps: int
    stalled: bool

    def validate(self) -> None:
        """A step lifts to at least one marked step."""
        if not self.marked_kinds:
            raise InvalidTermException("a certificate step needs a marked step")
        if self.t2_steps < 0:
            raise InvalidTermException("T2 step count must be nonnegative")

    def __str__(self) -> str:
        """Render as ``<index> <path> <kind> marked=<kinds> lg=<before>-><after> t2=<count>``."""
        kinds = ",".join(kind.value for kind in self.marked_kinds)
        line = (
            f"{self.index} {self.redex} marked={kinds} "
            f"lg={self.lg_before}->{self.lg_after} t2={self.t2_steps}"
        )
        return line + " stalled" if self.stalled else line


@dataclass(frozen=True)
class AppCertificateVO(BaseValueObject):
    """Lift of a whole trace: marked terms, their ``T2`` images and the checked steps."""

    s2: Term
    marked_trace: tuple[Term, ...]
    t2_trace: tuple[Term, ...]
    lg_values: tuple[int, ...]
    steps: tuple[CertificateStepVO, ...] = ()

    def validate(self) -> None:
        """The traces line up with the steps."""
        expected = len(self.steps) + 1
        if not (
            len(self.marked_trace) == len(self.t2_trace) == len(self.lg_values) == expected
        ):
            raise InvalidTermException("certificate traces must have one entry per step plus one")

    @property
    def stalled_steps(self) -> int:
        """Number of steps on which ``T2`` did not move."""
        return sum(1 for step in self.steps if step.stalled)

    @property
    def t2_steps(self) -> int:
        """Total number of steps of the ``T2`` images."""
        return sum(step.t2_steps for step in self.steps)

    def summary(self) -> str:
        """One-line digest of the certificate."""
        return (
            f"steps={len(self.steps)} stalled={self.stalled_steps} "
            f"t2_steps={self.t2_steps} lg={self.lg_values[0]}->{self.lg_values[-1]}"
        )
