"""This module contains the one-line summary of an explored reduction graph."""

from dataclasses import dataclass

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class GraphSummaryVO(BaseValueObject):
    """Node and edge counts, longest reduction and normal-form count.

    ``eta`` and ``normal_forms`` are None when the graph is incomplete or
    cyclic.
    """

    nodes: int
    edges: int
    eta: int | None
    normal_forms: int | None
    complete: bool
    violations: int = 0

    def validate(self) -> None:
        """Counts are nonnegative."""
        if self.nodes < 1 or self.edges < 0:
            raise InvalidTermException("graph summary needs at least one node")

    def __str__(self) -> str:
        """Render as ``nodes=<n> edges=<m> eta=<k> nf=<count>``."""
        eta = "?" if self.eta is None else str(self.eta)
        normal_forms = "?" if self.normal_forms is None else str(self.normal_forms)
        line = f"nodes={self.nodes} edges={self.edges} eta={eta} nf={normal_forms}"
        if not self.complete:
            line += " complete=false"
        return line
