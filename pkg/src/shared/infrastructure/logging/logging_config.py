"""This module contains the logging configuration."""

import logging
import sys

import structlog


class LoggingConfig:
    """Logging configuration class.

    Log events are rendered as JSON lines on stderr; stdout carries command
    output only.
    """

    @staticmethod
    def configure(level: str, name: str) -> structlog.BoundLogger:
        """Configures the logging settings.

        Args:
            level (str): The logging level.
            name (str): The name of the logger.

        Returns:
            logger (structlog.BoundLogger): Configured logger instance.
        """
        level = level.upper()

        logging.basicConfig(
            format="%(message)s",
            stream=sys.stderr,
            level=level,
        )

        structlog.configure(
            processors=[
                structlog.contextvars.merge_contextvars,
                structlog.processors.add_log_level,
                structlog.processors.StackInfoRenderer(),
                structlog.dev.set_exc_info,
                structlog.processors.format_exc_info,
                structlog.processors.TimeStamper(fmt="iso"),
                structlog.processors.JSONRenderer(sort_keys=True),
            ],
            wrapper_class=structlog.make_filtering_bound_logger(
                logging.getLevelName(level)
            ),
            context_class=dict,
            logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
            cache_logger_on_first_use=False,
        )

        return structlog.get_logger(name).bind(logger=name)
