"""This module contains the exception handling of the CLI commands."""

from typing import Any

import click

from src.shared.domain.exceptions.exception import BaseDomainException


def format_domain_error(exc: BaseDomainException) -> str:
    """Render a domain exception as the single ``error:`` line of the CLI.

    Args:
        exc (BaseDomainException): The raised exception.

    Returns:
        str: ``error: <ExceptionName>: <message>`` on one line.
    """
    message = " ".join(str(exc).split())
    return f"error: {type(exc).__name__}: {message}"


class DomainErrorGroup(click.Group):
    """Click group turning domain exceptions into exit status 1.

    Usage errors keep click's own handling and exit with status 2.
    """

    def invoke(self, ctx: click.Context) -> Any:
        """Invoke the subcommand, mapping domain exceptions to exit 1.

        Args:
            ctx (click.Context): The click context.

        Returns:
            Any: Whatever the subcommand returns.
        """
        try:
            return super().invoke(ctx)
        except BaseDomainException as exc:
            logger = (ctx.obj or {}).get("logger")
            if logger is not None:
                logger.error(
                    message="Command failed",
                    error=type(exc).__name__,
                    detail=str(exc),
                )
            click.echo(format_domain_error(exc), err=True)
            ctx.exit(1)
