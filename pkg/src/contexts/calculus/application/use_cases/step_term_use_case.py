"""This module contains the StepTermUseCase class for one reduction step."""

from src.contexts.calculus.application.dto.command import StepTermCommand
from src.contexts.calculus.application.dto.response import StepTermResponse
from src.contexts.calculus.domain.exceptions.exception import NotARedexException
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.services.normalization_service import select_redex
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.services.reduction_service import (
    redex_kind,
    redexes,
    reduce_at,
)
from src.contexts.calculus.domain.services.term_service import subterm_at
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.redex_kind_vo import StrategyKind
from src.contexts.calculus.domain.value_objects.redex_vo import RedexVO
from src.contexts.calculus.domain.value_objects.term_vo import contains_marks
from src.shared.infrastructure.logging.logger import Logger


class StepTermUseCase:
    """Use case for contracting one redex, chosen by path or by strategy.

    Marked terms reduce with the marked rules, annihilation included.
    """

    def __init__(self, syntax_service_port: SyntaxServicePort, logger: Logger) -> None:
        """Initializes the StepTermUseCase.

        Args:
            syntax_service_port (SyntaxServicePort): Parser of the source text.
            logger (Logger): Logger instance for logging.
        """
        self.syntax_service_port = syntax_service_port
        self.logger = logger

    def execute(self, command: StepTermCommand) -> StepTermResponse:
        """Executes the step use case.

        Args:
            command (StepTermCommand): Source, optional path and strategy.

        Returns:
            StepTermResponse: The redex and the reduct.

        Raises:
            NotARedexException: If the path holds no redex or the term is normal.
        """
        unit = self.syntax_service_port.parse(command.source)
        marked = contains_marks(unit.term)
        if command.path is not None:
            path = PathVO.parse(command.path)
            kind = redex_kind(subterm_at(unit.term, path), marked)
            if kind is None:
                raise NotARedexException(str(path))
            redex: RedexVO | None = RedexVO(path, kind)
        elif marked:
            candidates = redexes(unit.term, marked=True)
            redex = candidates[0] if candidates else None
        else:
            redex = select_redex(unit.term, StrategyKind(command.strategy))
        if redex is None:
            raise NotARedexException(str(PathVO.root()))
        reduct = reduce_at(unit.term, redex.path, unit.context, marked)
        self.logger.debug(message="Step taken", redex=str(redex))
        return StepTermResponse(str(redex), render_term(reduct))
