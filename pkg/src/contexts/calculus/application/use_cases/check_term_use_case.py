"""This module contains the CheckTermUseCase class for typechecking a source unit."""

from src.contexts.calculus.application.dto.command import CheckTermCommand
from src.contexts.calculus.application.dto.response import CheckTermResponse
from src.contexts.calculus.domain.exceptions.exception import TypingException
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.services.printer_service import render_formula
from src.contexts.calculus.domain.services.typing_service import check
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.shared.infrastructure.logging.logger import Logger


class CheckTermUseCase:
    """Use case for typechecking a source unit against its optional annotation."""

    def __init__(self, syntax_service_port: SyntaxServicePort, logger: Logger) -> None:
        """Initializes the CheckTermUseCase.

        Args:
            syntax_service_port (SyntaxServicePort): Parser of the source text.
            logger (Logger): Logger instance for logging.
        """
        self.syntax_service_port = syntax_service_port
        self.logger = logger

    def execute(self, command: CheckTermCommand) -> CheckTermResponse:
        """Executes the check use case.

        Args:
            command (CheckTermCommand): The source unit.

        Returns:
            CheckTermResponse: The rendered type.

        Raises:
            TypingException: If the term has no type or not the annotated one.
        """
        unit = self.syntax_service_port.parse(command.source)
        formula = check(unit.context, unit.term)
        if unit.expected is not None and unit.expected != formula:
            raise TypingException(
                str(PathVO.root()),
                f"expected {render_formula(unit.expected)}, got {render_formula(formula)}",
            )
        self.logger.debug(message="Term checked", formula=render_formula(formula))
        return CheckTermResponse(render_formula(formula))
