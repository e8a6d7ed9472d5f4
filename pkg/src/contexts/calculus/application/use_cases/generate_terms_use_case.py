"""This module contains the GenerateTermsUseCase class."""

from src.contexts.calculus.application.dto.command import GenerateTermsCommand
from src.contexts.calculus.application.dto.response import GenerateTermsResponse
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.services.generator_service import GeneratorService
from src.contexts.calculus.domain.services.typing_service import check
from src.contexts.calculus.domain.value_objects.app_scenario_vo import ScenarioModeKind
from src.contexts.calculus.domain.value_objects.gen_config_vo import (
    GenConfigVO,
    derive_seed,
)
from src.contexts.calculus.domain.value_objects.source_unit_vo import SourceUnitVO
from src.shared.infrastructure.logging.logger import Logger


class GenerateTermsUseCase:
    """Use case for generating well-typed terms or pivot scenarios."""

    def __init__(self, syntax_service_port: SyntaxServicePort, logger: Logger) -> None:
        """Initializes the GenerateTermsUseCase.

        Args:
            syntax_service_port (SyntaxServicePort): Parser of goals and printer of samples.
            logger (Logger): Logger instance for logging.
        """
        self.syntax_service_port = syntax_service_port
        self.logger = logger

    def execute(self, command: GenerateTermsCommand) -> GenerateTermsResponse:
        """Executes the generate use case.

        Sample ``i`` is generated from ``derive_seed(seed, i)``, so a run of
        ``count`` samples extends every shorter run with the same seed.

        Args:
            command (GenerateTermsCommand): Seed, size, count and options.

        Returns:
            GenerateTermsResponse: One printed unit or scenario per sample.

        Raises:
            BudgetInfeasibleException: If a sample cannot be built within its attempts.
        """
        goal = (
            None if command.goal is None else self.syntax_service_port.parse_formula(command.goal)
        )
        mode = None if command.mode is None else ScenarioModeKind(command.mode)
        units: list[str] = []
        for index in range(command.count):
            config = GenConfigVO(
                seed=derive_seed(command.seed, index),
                size_budget=command.size,
                goal=goal,
                atom_pool=command.atom_pool,
                max_attempts=command.max_attempts,
            )
            generator = GeneratorService(config)
            if mode is None:
                context, term = generator.gen_typed()
                unit = SourceUnitVO(term, context, check(context, term))
                units.append(self.syntax_service_port.print_unit(unit))
            else:
                scenario = generator.gen_app_scenario(mode)
                units.append(self.syntax_service_port.print_scenario(scenario))
            self.logger.debug(message="Sample generated", index=index, seed=config.seed)
        self.logger.info(
            message="Generation finished", count=command.count, size=command.size
        )
        return GenerateTermsResponse(units)
