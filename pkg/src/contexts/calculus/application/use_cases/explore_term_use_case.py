"""This module contains the ExploreTermUseCase class."""

from typing import Any

from src.contexts.calculus.application.dto.command import ExploreTermCommand
from src.contexts.calculus.application.dto.response import ExploreTermResponse
from src.contexts.calculus.domain.ports.services.reduction_graph_service_port import (
    ReductionGraphServicePort,
)
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.value_objects.term_vo import contains_marks
from src.shared.infrastructure.logging.logger import Logger


class ExploreTermUseCase:
    """Use case for exploring the whole reduction graph of a term."""

    def __init__(
        self,
        syntax_service_port: SyntaxServicePort,
        reduction_graph_service_port: ReductionGraphServicePort[Any],
        logger: Logger,
    ) -> None:
        """Initializes the ExploreTermUseCase.

        Args:
            syntax_service_port (SyntaxServicePort): Parser of the source text.
            reduction_graph_service_port (ReductionGraphServicePort): Graph builder.
            logger (Logger): Logger instance for logging.
        """
        self.syntax_service_port = syntax_service_port
        self.reduction_graph_service_port = reduction_graph_service_port
        self.logger = logger

    def execute(self, command: ExploreTermCommand) -> ExploreTermResponse:
        """Executes the explore use case.

        Args:
            command (ExploreTermCommand): Source, node limit and DOT flag.

        Returns:
            ExploreTermResponse: Summary line, optional DOT and violations.
        """
        unit = self.syntax_service_port.parse(command.source)
        graphs = self.reduction_graph_service_port
        graph = graphs.explore(
            unit.term, command.limit, unit.context, marked=contains_marks(unit.term)
        )
        violations = [
            f"{violation.redex} {violation.message}" for violation in graphs.violations(graph)
        ]
        for violation in violations:
            self.logger.warning(message="Subject reduction violated", violation=violation)
        return ExploreTermResponse(
            summary=str(graphs.summary(graph)),
            dot=graphs.to_dot(graph) if command.dot else None,
            violations=violations,
        )
