"""This module contains the command DTOs of the workbench use cases."""

from dataclasses import dataclass


@dataclass
class CheckTermCommand:
    """Command DTO for typechecking a source unit.

    Attributes:
        source (str): Text of the unit.
    """

    source: str


@dataclass
class StepTermCommand:
    """Command DTO for one reduction step.

    Attributes:
        source (str): Text of the unit.
        path (str | None): Path of the redex; the strategy picks one when absent.
        strategy (str): ``head`` or ``leftmost``.
    """

    source: str
    path: str | None = None
    strategy: str = "head"


@dataclass
class NormalizeTermCommand:
    """Command DTO for normalization.

    Attributes:
        source (str): Text of the unit.
        strategy (str): ``head``, ``leftmost`` or ``random``.
        max_steps (int): Step budget.
        seed (int | None): Seed of the random strategy.
    """

    source: str
    strategy: str
    max_steps: int
    seed: int | None = None


@dataclass
class ExploreTermCommand:
    """Command DTO for reduction-graph exploration.

    Attributes:
        source (str): Text of the unit.
        limit (int): Node limit.
        dot (bool): Whether the DOT rendering is wanted.
    """

    source: str
    limit: int
    dot: bool = False


@dataclass
class ClassifyTermCommand:
    """Command DTO for head classification.

    Attributes:
        source (str): Text of the unit; its term must be simple.
    """

    source: str


@dataclass
class GenerateTermsCommand:
    """Command DTO for term or scenario generation.

    Attributes:
        seed (int): Seed of the run; sample ``i`` uses a seed derived from it.
        size (int): Size budget of each sample.
        count (int): Number of samples.
        goal (str | None): Goal formula; random per sample when absent.
        mode (str | None): Generate scenarios of this mode instead of terms.
        atom_pool (tuple[str, ...]): Atoms of random formulas.
        max_attempts (int): Attempts per sample before giving up.
    """

    seed: int
    size: int
    count: int = 1
    goal: str | None = None
    mode: str | None = None
    atom_pool: tuple[str, ...] = ("A", "B", "C")
    max_attempts: int = 64


@dataclass
class RunAppHarnessCommand:
    """Command DTO for the permutative-pivot harness.

    Attributes:
        scenario (str): Text of the scenario file.
        trace (str | None): Text of a trace of S1; head normalization of S1 when absent.
    """

    scenario: str
    trace: str | None = None
