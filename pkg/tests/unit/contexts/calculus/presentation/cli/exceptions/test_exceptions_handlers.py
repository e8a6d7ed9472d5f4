"""Unit tests for the CLI exception handling."""

from unittest.mock import Mock

import click
from click.testing import CliRunner

from src.contexts.calculus.domain.exceptions.exception import NotARedexException
from src.contexts.calculus.presentation.cli.exceptions.exceptions_handlers import (
    DomainErrorGroup,
    format_domain_error,
)


def build_group(logger=None) -> click.Group:
    """Group with one failing command and one usage-checked command."""

    @click.group(cls=DomainErrorGroup)
    @click.pass_context
    def group(ctx):
        ctx.obj = {"logger": logger}

    @group.command()
    def fail():
        raise NotARedexException("/")

    @group.command()
    @click.argument("count", type=int)
    def need(count):
        click.echo(count)

    return group


class TestFormatDomainError:
    """Unit tests for format_domain_error."""

    def test_should_flatten_to_one_line(self):
        """Should collapse whitespace inside the message."""
        exc = NotARedexException("/\nfun")
        assert format_domain_error(exc) == "error: NotARedexException: no redex at / fun"


class TestDomainErrorGroup:
    """Unit tests for DomainErrorGroup."""

    def test_should_exit_1_on_domain_error(self):
        """Should print the error line and log the failure."""
        logger = Mock()
        result = CliRunner().invoke(build_group(logger), ["fail"])

        assert result.exit_code == 1
        assert result.stderr == "error: NotARedexException: no redex at /\n"
        logger.error.assert_called_once_with(
            message="Command failed",
            error="NotARedexException",
            detail="no redex at /",
        )

    def test_should_exit_2_on_usage_error(self):
        """Should leave usage errors to click."""
        result = CliRunner().invoke(build_group(), ["need", "many"])

        assert result.exit_code == 2

    def test_should_pass_success_through(self):
        """Should not touch successful commands."""
        result = CliRunner().invoke(build_group(), ["need", "3"])

        assert result.exit_code == 0
        assert result.stdout == "3\n"
