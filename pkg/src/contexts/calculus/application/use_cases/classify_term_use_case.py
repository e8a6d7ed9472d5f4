"""This module contains the ClassifyTermUseCase class."""

from src.contexts.calculus.application.dto.command import ClassifyTermCommand
from src.contexts.calculus.application.dto.response import ClassifyTermResponse
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.services.head_analysis_service import classify
from src.shared.infrastructure.logging.logger import Logger


class ClassifyTermUseCase:
    """Use case for placing a simple term in the head table."""

    def __init__(self, syntax_service_port: SyntaxServicePort, logger: Logger) -> None:
        """Initializes the ClassifyTermUseCase.

        Args:
            syntax_service_port (SyntaxServicePort): Parser of the source text.
            logger (Logger): Logger instance for logging.
        """
        self.syntax_service_port = syntax_service_port
        self.logger = logger

    def execute(self, command: ClassifyTermCommand) -> ClassifyTermResponse:
        """Executes the classify use case.

        Raises:
            NotSimpleException: If the term is not simple.
            UnclassifiableTermException: If the spine fits no row.
        """
        unit = self.syntax_service_port.parse(command.source)
        row = classify(unit.term, unit.context)
        self.logger.debug(message="Term classified", row=row.case)
        return ClassifyTermResponse.from_vo(row)
