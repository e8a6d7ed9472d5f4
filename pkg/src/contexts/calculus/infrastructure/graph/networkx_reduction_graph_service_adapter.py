"""This module contains the networkx adapter for the Reduction Graph Service Port."""

from collections import deque
from collections.abc import Hashable
from concurrent.futures import ThreadPoolExecutor

import networkx as nx

from src.contexts.calculus.domain.exceptions.exception import (
    CycleDetectedException,
    IncompleteGraphException,
    InconclusiveVerificationException,
    TypingException,
)
from src.contexts.calculus.domain.ports.services.reduction_graph_service_port import (
    ReductionGraphServicePort,
)
from src.contexts.calculus.domain.services.printer_service import (
    render_formula,
    render_term,
)
from src.contexts.calculus.domain.services.reduction_service import step_all
from src.contexts.calculus.domain.services.typing_service import check
from src.contexts.calculus.domain.value_objects.formula_vo import Formula
from src.contexts.calculus.domain.value_objects.graph_summary_vo import (
    GraphSummaryVO,
)
from src.contexts.calculus.domain.value_objects.redex_vo import ReductionStepVO
from src.contexts.calculus.domain.value_objects.subject_reduction_report_vo import (
    TypeViolationVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)
from src.contexts.calculus.infrastructure.graph.reduction_graph import ReductionGraph
from src.shared.infrastructure.logging.logger import Logger


class NetworkxReductionGraphServiceAdapter(ReductionGraphServicePort[ReductionGraph]):
    """Adapter exploring reduction graphs breadth first into ``nx.DiGraph``.

    Each BFS level may be expanded by a thread pool; results are merged in
    frontier order, so the graph is the same for any number of workers.
    """

    def __init__(self, logger: Logger, workers: int = 1) -> None:
        """Initializes the networkx reduction graph adapter.

        Args:
            logger (Logger): Logger instance for logging.
            workers (int): Threads expanding each BFS level.
        """
        self.logger = logger
        self.workers = max(1, workers)

    def explore(
        self,
        term: Term,
        node_limit: int,
        context: TypingContextVO | None = None,
        marked: bool = False,
    ) -> ReductionGraph:
        """Explore every reduct of ``term`` up to ``node_limit`` nodes.

        Args:
            term (Term): The root.
            node_limit (int): Maximum number of nodes.
            context (TypingContextVO | None): Context for the subject-reduction check.
            marked (bool): Whether marked-term rules apply.

        Returns:
            ReductionGraph: The explored graph.
        """
        graph = ReductionGraph(term, node_limit)
        types: dict[Hashable, Formula | None] = {}
        if context is not None:
            types[graph.root_key] = self._type_of(context, term)

        self.logger.debug(
            message="Exploration started", root=render_term(term), node_limit=node_limit
        )

        def expand(key: Hashable) -> list[ReductionStepVO]:
            return step_all(graph.term(key), context, marked)

        frontier: list[Hashable] = [graph.root_key]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            while frontier and graph.complete:
                if self.workers > 1:
                    expansions = list(pool.map(expand, frontier))
                else:
                    expansions = [expand(key) for key in frontier]
                next_frontier: list[Hashable] = []
                for key, steps in zip(frontier, expansions, strict=True):
                    graph.graph.nodes[key]["normal"] = not steps
                    for step in steps:
                        target = step.term.alpha_key
                        if target not in graph:
                            if graph.number_of_nodes() >= node_limit:
                                graph.complete = False
                                break
                            graph.add_term(step.term)
                            next_frontier.append(target)
                            if context is not None:
                                types[target] = self._type_of(context, step.term)
                        graph.graph.add_edge(
                            key,
                            target,
                            path=str(step.redex.path),
                            kind=step.redex.kind.value,
                        )
                        if context is not None and types[target] != types[key]:
                            self._record_violation(graph, key, step, types)
                    if not graph.complete:
                        break
                frontier = next_frontier

        if not graph.complete:
            self.logger.warning(
                message="Exploration hit node limit",
                node_limit=node_limit,
                nodes=graph.number_of_nodes(),
            )
        self.logger.info(
            message="Exploration finished",
            nodes=graph.number_of_nodes(),
            edges=graph.number_of_edges(),
            complete=graph.complete,
            violations=len(graph.violations),
        )
        return graph

    def _type_of(self, context: TypingContextVO, term: Term) -> Formula | None:
        try:
            return check(context, term)
        except TypingException:
            return None

    def _record_violation(
        self,
        graph: ReductionGraph,
        key: Hashable,
        step: ReductionStepVO,
        types: dict[Hashable, Formula | None],
    ) -> None:
        before = types[key]
        after = types[step.term.alpha_key]
        message = (
            f"type changed from {render_formula(before) if before else 'untyped'} "
            f"to {render_formula(after) if after else 'untyped'}"
        )
        violation = TypeViolationVO(
            step.redex, render_term(graph.term(key)), render_term(step.term), message
        )
        graph.violations.append(violation)
        self.logger.warning(
            message="Subject reduction violated",
            redex=str(step.redex),
            source=violation.source,
            reduct=violation.reduct,
        )

    def is_complete(self, graph: ReductionGraph) -> bool:
        """Whether exploration finished within its node limit."""
        return graph.complete

    def eta(self, graph: ReductionGraph, term: Term | None = None) -> int:
        """Longest reduction length, memoized over a reverse topological order.

        Raises:
            IncompleteGraphException: If the graph is incomplete.
            CycleDetectedException: If the graph has a cycle.
        """
        self._require_complete(graph)
        if "eta" not in graph.graph.nodes[graph.root_key]:
            for key in reversed(self._topological_order(graph)):
                heights = [
                    graph.graph.nodes[successor]["eta"]
                    for successor in graph.graph.successors(key)
                ]
                graph.graph.nodes[key]["eta"] = 1 + max(heights) if heights else 0
        key = graph.root_key if term is None else term.alpha_key
        return graph.graph.nodes[key]["eta"]

    def eta_naive(self, graph: ReductionGraph, term: Term | None = None) -> int:
        """Longest path among the descendants of a node, recomputed from scratch."""
        self._require_complete(graph)
        self._topological_order(graph)
        key = graph.root_key if term is None else term.alpha_key
        reachable = nx.descendants(graph.graph, key) | {key}
        return nx.dag_longest_path_length(graph.graph.subgraph(reachable))

    def normal_forms(self, graph: ReductionGraph) -> list[Term]:
        """Sink nodes in discovery order.

        Raises:
            IncompleteGraphException: If the graph is incomplete.
        """
        self._require_complete(graph)
        return [
            graph.term(key)
            for key in graph.keys_in_order()
            if graph.graph.out_degree(key) == 0
        ]

    def violations(self, graph: ReductionGraph) -> tuple[TypeViolationVO, ...]:
        """Subject-reduction violations recorded during exploration."""
        return tuple(graph.violations)

    def summary(self, graph: ReductionGraph) -> GraphSummaryVO:
        """Counts, eta and normal-form count; eta is unknown on incomplete or cyclic graphs."""
        eta: int | None = None
        normal_forms: int | None = None
        if graph.complete:
            normal_forms = len(self.normal_forms(graph))
            try:
                eta = self.eta(graph)
            except CycleDetectedException:
                eta = None
        return GraphSummaryVO(
            nodes=graph.number_of_nodes(),
            edges=graph.number_of_edges(),
            eta=eta,
            normal_forms=normal_forms,
            complete=graph.complete,
            violations=len(graph.violations),
        )

    def to_dot(self, graph: ReductionGraph) -> str:
        """Render the graph in DOT, nodes numbered in discovery order."""
        ids = {key: f"n{index}" for index, key in enumerate(graph.keys_in_order())}
        lines = ["digraph reductions {"]
        for key, node_id in ids.items():
            attributes = [f'label="{_escape(render_term(graph.term(key)))}"']
            if key == graph.root_key:
                attributes.append("shape=box")
            if graph.graph.nodes[key].get("normal"):
                attributes.append("peripheries=2")
            lines.append(f"  {node_id} [{', '.join(attributes)}];")
        for source, target, data in sorted(
            graph.graph.edges(data=True), key=lambda edge: (ids[edge[0]], ids[edge[1]])
        ):
            label = _escape(f"{data['path']} {data['kind']}")
            lines.append(f'  {ids[source]} -> {ids[target]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def distance(
        self,
        source: Term,
        target: Term,
        node_limit: int,
        context: TypingContextVO | None = None,
    ) -> int | None:
        """Breadth-first search for ``target`` from ``source``.

        Raises:
            InconclusiveVerificationException: If the node limit is hit first.
        """
        goal = target.alpha_key
        if source.alpha_key == goal:
            return 0
        seen = {source.alpha_key}
        queue: deque[tuple[Term, int]] = deque([(source, 0)])
        while queue:
            term, depth = queue.popleft()
            for step in step_all(term, context):
                key = step.term.alpha_key
                if key == goal:
                    return depth + 1
                if key in seen:
                    continue
                if len(seen) >= node_limit:
                    raise InconclusiveVerificationException("reachability", node_limit)
                seen.add(key)
                queue.append((step.term, depth + 1))
        return None

    def _require_complete(self, graph: ReductionGraph) -> None:
        if not graph.complete:
            raise IncompleteGraphException(graph.number_of_nodes())

    def _topological_order(self, graph: ReductionGraph) -> list[Hashable]:
        try:
            return list(nx.topological_sort(graph.graph))
        except nx.NetworkXUnfeasible as exc:
            cycle = nx.find_cycle(graph.graph, source=graph.root_key)
            raise CycleDetectedException(render_term(graph.term(cycle[0][0]))) from exc


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')
