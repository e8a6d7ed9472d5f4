"""This module contains the NormalizeTermUseCase class."""

from src.contexts.calculus.application.dto.command import NormalizeTermCommand
from src.contexts.calculus.application.dto.response import NormalizeTermResponse
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.services.normalization_service import normalize
from src.contexts.calculus.domain.value_objects.redex_kind_vo import StrategyKind
from src.shared.infrastructure.logging.logger import Logger


class NormalizeTermUseCase:
    """Use case for strategy-driven normalization."""

    def __init__(self, syntax_service_port: SyntaxServicePort, logger: Logger) -> None:
        """Initializes the NormalizeTermUseCase.

        Args:
            syntax_service_port (SyntaxServicePort): Parser of the source text.
            logger (Logger): Logger instance for logging.
        """
        self.syntax_service_port = syntax_service_port
        self.logger = logger

    def execute(self, command: NormalizeTermCommand) -> NormalizeTermResponse:
        """Executes the normalize use case.

        Args:
            command (NormalizeTermCommand): Source, strategy, budget and seed.

        Returns:
            NormalizeTermResponse: Final term, trace and budget flag.
        """
        unit = self.syntax_service_port.parse(command.source)
        result = normalize(
            unit.term,
            StrategyKind(command.strategy),
            command.max_steps,
            command.seed,
            unit.context,
        )
        if result.exhausted:
            self.logger.warning(
                message="Normalization budget exhausted", max_steps=command.max_steps
            )
        self.logger.debug(message="Normalization finished", steps=result.steps)
        return NormalizeTermResponse.from_vo(result)
