"""This module contains the interface for the Reduction Graph Service Port."""

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

from src.contexts.calculus.domain.value_objects.graph_summary_vo import (
    GraphSummaryVO,
)
from src.contexts.calculus.domain.value_objects.subject_reduction_report_vo import (
    TypeViolationVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)

GraphType = TypeVar("GraphType")


class ReductionGraphServicePort(ABC, Generic[GraphType]):  # noqa: UP046
    """Abstract interface for building and measuring reduction graphs.

    Nodes are alpha-equivalence classes of terms; edges are one-step
    reductions labelled by path and redex kind.
    """

    @abstractmethod
    def explore(
        self,
        term: Term,
        node_limit: int,
        context: TypingContextVO | None = None,
        marked: bool = False,
    ) -> GraphType:
        """Explore every reduct of ``term``.

        Args:
            term (Term): The root.
            node_limit (int): Maximum number of nodes before exploration stops.
            context (TypingContextVO | None): When given, every edge is checked for type preservation.
            marked (bool): Whether marked-term rules apply.

        Returns:
            GraphType: The graph, flagged incomplete when the limit was hit.
        """
        pass

    @abstractmethod
    def is_complete(self, graph: GraphType) -> bool:
        """Whether exploration finished within its node limit."""
        pass

    @abstractmethod
    def eta(self, graph: GraphType, term: Term | None = None) -> int:
        """Length of the longest reduction from the root, or from ``term``.

        Raises:
            IncompleteGraphException: If the graph is incomplete.
            CycleDetectedException: If the graph has a cycle.
        """
        pass

    @abstractmethod
    def eta_naive(self, graph: GraphType, term: Term | None = None) -> int:
        """Longest reduction recomputed without memoization, for cross-checking."""
        pass

    @abstractmethod
    def normal_forms(self, graph: GraphType) -> list[Term]:
        """Terms of the graph without redexes.

        Raises:
            IncompleteGraphException: If the graph is incomplete.
        """
        pass

    @abstractmethod
    def violations(self, graph: GraphType) -> tuple[TypeViolationVO, ...]:
        """Subject-reduction violations recorded during exploration."""
        pass

    @abstractmethod
    def summary(self, graph: GraphType) -> GraphSummaryVO:
        """Counts, eta and normal forms of the graph."""
        pass

    @abstractmethod
    def to_dot(self, graph: GraphType) -> str:
        """Render the graph in DOT."""
        pass

    @abstractmethod
    def distance(
        self,
        source: Term,
        target: Term,
        node_limit: int,
        context: TypingContextVO | None = None,
    ) -> int | None:
        """Fewest steps from ``source`` to a term alpha-equal to ``target``.

        Returns:
            int | None: The step count, or None when ``target`` is unreachable.

        Raises:
            InconclusiveVerificationException: If the node limit is hit first.
        """
        pass
