"""This module contains the click command group of the workbench."""

from pathlib import Path

import click

from src.config import settings
from src.contexts.calculus.application.dto.command import (
    CheckTermCommand,
    ClassifyTermCommand,
    ExploreTermCommand,
    GenerateTermsCommand,
    NormalizeTermCommand,
    RunAppHarnessCommand,
    StepTermCommand,
)
from src.contexts.calculus.domain.exceptions.exception import SyntaxErrorException
from src.contexts.calculus.presentation.cli.compositions.infrastructure_composition import (
    get_logger,
)
from src.contexts.calculus.presentation.cli.compositions.use_cases_composition import (
    get_check_term_use_case,
    get_classify_term_use_case,
    get_explore_term_use_case,
    get_generate_terms_use_case,
    get_normalize_term_use_case,
    get_run_app_harness_use_case,
    get_step_term_use_case,
)
from src.contexts.calculus.presentation.cli.exceptions.exceptions_handlers import (
    DomainErrorGroup,
)
from src.shared.infrastructure.logging.logger import Logger

SOURCE = click.Path(exists=True, dir_okay=False, path_type=Path)


def _read(path: Path) -> str:
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        before = data[: exc.start]
        line = before.count(b"\n") + 1
        column = exc.start - (before.rfind(b"\n") + 1) + 1
        raise SyntaxErrorException(
            line, column, f"{path.name}: invalid UTF-8 byte at offset {exc.start}"
        ) from exc


def _logger(ctx: click.Context) -> Logger:
    return ctx.obj["logger"]


@click.group(cls=DomainErrorGroup)
@click.option("--verbose", is_flag=True, help="Log debug events on stderr.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """Workbench for proof terms of classical natural deduction."""
    ctx.ensure_object(dict)
    ctx.obj["logger"] = get_logger("DEBUG" if verbose else None)


@cli.command()
@click.argument("file", type=SOURCE)
@click.pass_context
def check(ctx: click.Context, file: Path) -> None:
    """Print the type of the term in FILE."""
    response = get_check_term_use_case(_logger(ctx)).execute(CheckTermCommand(_read(file)))
    click.echo(response.formula)


@cli.command()
@click.argument("file", type=SOURCE)
@click.option("--path", "path", default=None, help="Path of the redex, e.g. /fun/body.")
@click.option(
    "--strategy",
    type=click.Choice(["head", "leftmost"]),
    default="head",
    show_default=True,
)
@click.pass_context
def step(ctx: click.Context, file: Path, path: str | None, strategy: str) -> None:
    """Contract one redex of the term in FILE and print the reduct."""
    response = get_step_term_use_case(_logger(ctx)).execute(
        StepTermCommand(_read(file), path, strategy)
    )
    click.echo(response.term)


@cli.command()
@click.argument("file", type=SOURCE)
@click.option(
    "--strategy",
    type=click.Choice(["head", "leftmost", "random"]),
    default="head",
    show_default=True,
)
@click.option("--max-steps", type=click.IntRange(min=0), default=None)
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Seed of --strategy random.")
@click.option("--trace", is_flag=True, help="Print every step before the normal form.")
@click.pass_context
def normalize(
    ctx: click.Context,
    file: Path,
    strategy: str,
    max_steps: int | None,
    seed: int | None,
    trace: bool,
) -> None:
    """Reduce the term in FILE with a strategy and print the result."""
    response = get_normalize_term_use_case(_logger(ctx)).execute(
        NormalizeTermCommand(
            _read(file),
            strategy,
            settings.NORMALIZE_MAX_STEPS if max_steps is None else max_steps,
            seed,
        )
    )
    if trace:
        for redex, term in zip(response.steps, response.terms, strict=True):
            click.echo(f"{redex}\t{term}")
    click.echo(response.term)


@cli.command()
@click.argument("file", type=SOURCE)
@click.option("--limit", type=click.IntRange(min=1), default=None, help="Node limit.")
@click.option(
    "--dot",
    "dot_path",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    default=None,
    help="Write the graph in DOT to this file.",
)
@click.pass_context
def explore(ctx: click.Context, file: Path, limit: int | None, dot_path: Path | None) -> None:
    """Explore the reduction graph of the term in FILE and print its summary."""
    response = get_explore_term_use_case(_logger(ctx)).execute(
        ExploreTermCommand(
            _read(file),
            settings.EXPLORE_NODE_LIMIT if limit is None else limit,
            dot=dot_path is not None,
        )
    )
    if dot_path is not None and response.dot is not None:
        dot_path.write_text(response.dot, encoding="utf-8")
    click.echo(response.summary)


@cli.command()
@click.argument("file", type=SOURCE)
@click.pass_context
def classify(ctx: click.Context, file: Path) -> None:
    """Print the head-table row of the simple term in FILE."""
    response = get_classify_term_use_case(_logger(ctx)).execute(
        ClassifyTermCommand(_read(file))
    )
    for line in response.lines():
        click.echo(line)


@cli.command()
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), required=True)
@click.option("--size", type=click.IntRange(min=1), default=None, help="Size budget.")
@click.option("--count", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--goal", default=None, help="Goal formula, e.g. 'A -> A'.")
@click.option(
    "--mode",
    type=click.Choice(["term", "proj", "case"]),
    default=None,
    help="Generate pivot scenarios of this mode instead of terms.",
)
@click.option(
    "--out",
    "out_dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Write one file per sample into this directory.",
)
@click.pass_context
def gen(
    ctx: click.Context,
    seed: int,
    size: int | None,
    count: int,
    goal: str | None,
    mode: str | None,
    out_dir: Path | None,
) -> None:
    """Generate well-typed terms, or pivot scenarios with --mode."""
    response = get_generate_terms_use_case(_logger(ctx)).execute(
        GenerateTermsCommand(
            seed=seed,
            size=settings.GEN_SIZE_BUDGET if size is None else size,
            count=count,
            goal=goal,
            mode=mode,
            atom_pool=settings.atom_pool,
            max_attempts=settings.GEN_MAX_ATTEMPTS,
        )
    )
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        suffix = "scn" if mode else "nd"
        for index, unit in enumerate(response.units):
            (out_dir / f"sample_{index:04d}.{suffix}").write_text(unit + "\n", encoding="utf-8")
        return
    # scenarios hold their own `;`, so they are separated by a blank line
    click.echo(("\n\n" if mode else ";\n").join(response.units))


@cli.group()
def harness() -> None:
    """Check theorem instances on concrete terms."""


@harness.command("app")
@click.argument("scenario", type=SOURCE)
@click.option("--trace", "trace_file", type=SOURCE, default=None, help="Trace of S1.")
@click.pass_context
def harness_app(ctx: click.Context, scenario: Path, trace_file: Path | None) -> None:
    """Check S1 is SN from S2 and certify a trace of S1 against S2."""
    response = get_run_app_harness_use_case(_logger(ctx)).execute(
        RunAppHarnessCommand(
            _read(scenario), None if trace_file is None else _read(trace_file)
        )
    )
    click.echo(f"sn={'true' if response.verified else 'false'} {response.summary}")
    for line in response.steps:
        click.echo(line)
