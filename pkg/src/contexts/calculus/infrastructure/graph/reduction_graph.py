"""This module contains the networkx-backed reduction graph."""

from collections.abc import Hashable

import networkx as nx

from src.contexts.calculus.domain.value_objects.subject_reduction_report_vo import (
    TypeViolationVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import Term


class ReductionGraph:
    """Directed graph of one-step reductions keyed by alpha keys.

    Node attributes: ``term`` (a representative), ``normal`` (no redex) and,
    once computed, ``eta``. Edge attributes: ``path`` and ``kind``.
    """

    def __init__(self, root: Term, node_limit: int) -> None:
        """Initialize the ReductionGraph with its root only.

        Args:
            root (Term): The starting term.
            node_limit (int): Limit the exploration ran under.
        """
        self.graph = nx.DiGraph()
        self.root_key: Hashable = root.alpha_key
        self.node_limit = node_limit
        self.complete = True
        self.violations: list[TypeViolationVO] = []
        self.graph.add_node(self.root_key, term=root, normal=None, order=0)

    @property
    def root(self) -> Term:
        """The root term."""
        return self.graph.nodes[self.root_key]["term"]

    def __contains__(self, key: Hashable) -> bool:
        """Whether an alpha key is a node."""
        return key in self.graph

    def add_term(self, term: Term) -> Hashable:
        """Add a term as a new node and return its key."""
        key = term.alpha_key
        self.graph.add_node(
            key, term=term, normal=None, order=self.graph.number_of_nodes()
        )
        return key

    def term(self, key: Hashable) -> Term:
        """Representative term of a node."""
        return self.graph.nodes[key]["term"]

    def keys_in_order(self) -> list[Hashable]:
        """Node keys in discovery order."""
        return sorted(self.graph.nodes, key=lambda key: self.graph.nodes[key]["order"])

    def number_of_nodes(self) -> int:
        """Node count."""
        return self.graph.number_of_nodes()

    def number_of_edges(self) -> int:
        """Edge count."""
        return self.graph.number_of_edges()
