"""This module contains the console entry point of the workbench."""

from src.config import settings
from src.contexts.calculus.presentation.cli.commands import cli


def main() -> None:
    """Run the click command group."""
    cli(prog_name=settings.APP_NAME)


if __name__ == "__main__":
    main()
