"""This module contains the infrastructure composition for the CLI commands."""

from src.config import settings
from src.contexts.calculus.domain.services.app_certifier_service import (
    AppCertifierService,
)
from src.contexts.calculus.domain.services.sn_oracle_service import SNOracleService
from src.contexts.calculus.infrastructure.graph.networkx_reduction_graph_service_adapter import (
    NetworkxReductionGraphServiceAdapter,
)
from src.contexts.calculus.infrastructure.syntax.lark_syntax_service_adapter import (
    LarkSyntaxServiceAdapter,
)
from src.shared.infrastructure.logging.logger import Logger


def get_logger(level: str | None = None) -> Logger:
    """Get the logger instance.

    Args:
        level (str | None): Logging level; the configured one when absent.

    Returns:
        Logger: An instance of Logger.
    """
    return Logger(level or settings.LOG_LEVEL, "cut-workbench")


def get_syntax_service(logger: Logger) -> LarkSyntaxServiceAdapter:
    """Get the lark syntax service adapter.

    Args:
        logger (Logger): The logger instance.

    Returns:
        LarkSyntaxServiceAdapter: An instance of LarkSyntaxServiceAdapter.
    """
    return LarkSyntaxServiceAdapter(logger)


def get_reduction_graph_service(logger: Logger) -> NetworkxReductionGraphServiceAdapter:
    """Get the networkx reduction graph service adapter.

    Args:
        logger (Logger): The logger instance.

    Returns:
        NetworkxReductionGraphServiceAdapter: An instance of NetworkxReductionGraphServiceAdapter.
    """
    return NetworkxReductionGraphServiceAdapter(logger, settings.EXPLORE_WORKERS)


def get_sn_oracle_service(
    graph_service: NetworkxReductionGraphServiceAdapter, node_limit: int | None = None
) -> SNOracleService:
    """Get the strong-normalization oracle.

    Args:
        graph_service (NetworkxReductionGraphServiceAdapter): The graph service.
        node_limit (int | None): Node bound; the configured one when absent.

    Returns:
        SNOracleService: An instance of SNOracleService.
    """
    return SNOracleService(graph_service, node_limit or settings.EXPLORE_NODE_LIMIT)


def get_app_certifier_service(
    graph_service: NetworkxReductionGraphServiceAdapter,
) -> AppCertifierService:
    """Get the certifier of marked traces.

    Args:
        graph_service (NetworkxReductionGraphServiceAdapter): The graph service.

    Returns:
        AppCertifierService: An instance of AppCertifierService.
    """
    return AppCertifierService(graph_service, settings.T2_SEARCH_LIMIT)
