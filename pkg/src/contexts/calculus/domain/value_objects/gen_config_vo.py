"""This module contains the configuration of the term generator."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.formula_vo import ATOM_PATTERN, Formula
from src.shared.domain.value_objects.value_object import BaseValueObject

SEED_BOUND = 2**64


class RuleNameKind(str, Enum):
    """Typing rules the backward search can apply."""

    AX = "ax"
    IMP_I = "imp_i"
    IMP_E = "imp_e"
    AND_I = "and_i"
    AND_E = "and_e"
    OR_I = "or_i"
    OR_E = "or_e"
    ABS_I = "abs_i"
    ABS_E = "abs_e"


DEFAULT_WEIGHTS: Mapping[RuleNameKind, float] = MappingProxyType(
    {
        RuleNameKind.AX: 3.0,
        RuleNameKind.IMP_I: 3.0,
        RuleNameKind.IMP_E: 3.0,
        RuleNameKind.AND_I: 2.0,
        RuleNameKind.AND_E: 2.0,
        RuleNameKind.OR_I: 2.0,
        RuleNameKind.OR_E: 2.0,
        RuleNameKind.ABS_I: 1.0,
        RuleNameKind.ABS_E: 1.0,
    }
)


@dataclass(frozen=True)
class GenConfigVO(BaseValueObject):
    """Seed, size budget, goal, atoms and rule weights of one generation run."""

    seed: int
    size_budget: int
    goal: Formula | None = None
    atom_pool: tuple[str, ...] = ("A", "B", "C")
    weights: Mapping[RuleNameKind, float] = field(default_factory=lambda: DEFAULT_WEIGHTS)
    max_attempts: int = 64

    def validate(self) -> None:
        """Check ranges and freeze the weights."""
        if isinstance(self.seed, bool) or not 0 <= self.seed < SEED_BOUND:
            raise InvalidTermException("seed must be a 64-bit unsigned integer")
        if self.size_budget < 1:
            raise InvalidTermException("size budget must be at least 1")
        if self.max_attempts < 1:
            raise InvalidTermException("at least one attempt is required")
        if self.goal is not None and not isinstance(self.goal, Formula):
            raise InvalidTermException("goal must be a formula")
        if not self.atom_pool:
            raise InvalidTermException("atom pool must not be empty")
        for atom in self.atom_pool:
            if not ATOM_PATTERN.fullmatch(atom):
                raise InvalidTermException(f"invalid atom name {atom!r}")
        weights = {RuleNameKind(rule): float(weight) for rule, weight in self.weights.items()}
        if any(weight < 0 for weight in weights.values()):
            raise InvalidTermException("rule weights must be nonnegative")
        if not any(weights.values()):
            raise InvalidTermException("at least one rule weight must be positive")
        object.__setattr__(self, "atom_pool", tuple(self.atom_pool))
        object.__setattr__(self, "weights", MappingProxyType(weights))

    def weight(self, rule: RuleNameKind) -> float:
        """Weight of a rule; rules left out weigh zero."""
        return self.weights.get(rule, 0.0)


def derive_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th sample of a run seeded with ``seed``; sample 0 keeps it."""
    if index == 0:
        return seed
    return (seed * 6364136223846793005 + 1442695040888963407 * (index + 1)) % SEED_BOUND
