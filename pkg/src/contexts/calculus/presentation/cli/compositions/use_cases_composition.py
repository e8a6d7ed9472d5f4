"""This module contains the use cases composition for the CLI commands."""

from src.config import settings
from src.contexts.calculus.application.use_cases.check_term_use_case import (
    CheckTermUseCase,
)
from src.contexts.calculus.application.use_cases.classify_term_use_case import (
    ClassifyTermUseCase,
)
from src.contexts.calculus.application.use_cases.explore_term_use_case import (
    ExploreTermUseCase,
)
from src.contexts.calculus.application.use_cases.generate_terms_use_case import (
    GenerateTermsUseCase,
)
from src.contexts.calculus.application.use_cases.normalize_term_use_case import (
    NormalizeTermUseCase,
)
from src.contexts.calculus.application.use_cases.run_app_harness_use_case import (
    RunAppHarnessUseCase,
)
from src.contexts.calculus.application.use_cases.step_term_use_case import (
    StepTermUseCase,
)
from src.contexts.calculus.presentation.cli.compositions.infrastructure_composition import (
    get_app_certifier_service,
    get_reduction_graph_service,
    get_sn_oracle_service,
    get_syntax_service,
)
from src.shared.infrastructure.logging.logger import Logger


def get_check_term_use_case(logger: Logger) -> CheckTermUseCase:
    """Get the CheckTermUseCase instance."""
    return CheckTermUseCase(get_syntax_service(logger), logger)


def get_step_term_use_case(logger: Logger) -> StepTermUseCase:
    """Get the StepTermUseCase instance."""
    return StepTermUseCase(get_syntax_service(logger), logger)


def get_normalize_term_use_case(logger: Logger) -> NormalizeTermUseCase:
    """Get the NormalizeTermUseCase instance."""
    return NormalizeTermUseCase(get_syntax_service(logger), logger)


def get_explore_term_use_case(logger: Logger) -> ExploreTermUseCase:
    """Get the ExploreTermUseCase instance."""
    return ExploreTermUseCase(
        get_syntax_service(logger), get_reduction_graph_service(logger), logger
    )


def get_classify_term_use_case(logger: Logger) -> ClassifyTermUseCase:
    """Get the ClassifyTermUseCase instance."""
    return ClassifyTermUseCase(get_syntax_service(logger), logger)


def get_generate_terms_use_case(logger: Logger) -> GenerateTermsUseCase:
    """Get the GenerateTermsUseCase instance."""
    return GenerateTermsUseCase(get_syntax_service(logger), logger)


def get_run_app_harness_use_case(logger: Logger) -> RunAppHarnessUseCase:
    """Get the RunAppHarnessUseCase instance.

    Args:
        logger (Logger): The logger instance.

    Returns:
        RunAppHarnessUseCase: Wired with one graph service shared by oracle and certifier.
    """
    graph_service = get_reduction_graph_service(logger)
    return RunAppHarnessUseCase(
        get_syntax_service(logger),
        get_sn_oracle_service(graph_service),
        get_app_certifier_service(graph_service),
        logger,
        settings.NORMALIZE_MAX_STEPS,
    )
