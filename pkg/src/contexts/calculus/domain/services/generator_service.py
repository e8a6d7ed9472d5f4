"""This module contains the deterministic generator of typed terms and scenarios.

Terms are built by backward proof search: a goal formula picks one of the
typing rules that can conclude it, with probability proportional to the
rule's weight, and the premises become smaller goals. Every constructor
spends one unit of the size budget, so ``cxty`` never exceeds it. All
randomness comes from one ``random.Random`` seeded by the configuration.
"""

from collections.abc import Callable
from itertools import count
from random import Random
from typing import TypeVar

from src.contexts.calculus.domain.exceptions.exception import BudgetInfeasibleException
from src.contexts.calculus.domain.services.printer_service import render_formula
from src.contexts.calculus.domain.value_objects.app_scenario_vo import (
    AppScenarioVO,
    ScenarioModeKind,
)
from src.contexts.calculus.domain.value_objects.formula_vo import (
    And,
    Atom,
    Bottom,
    Formula,
    Imp,
    Or,
    neg,
    subformulas,
)
from src.contexts.calculus.domain.value_objects.gen_config_vo import (
    GenConfigVO,
    RuleNameKind,
)
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Case,
    Elim,
    Inj,
    IVar,
    Lam,
    Mu,
    Name,
    Pair,
    Pi,
    Term,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)

T = TypeVar("T")

CALL_LIMIT = 5_000

_MIN_BUDGET = {
    RuleNameKind.AX: 1,
    RuleNameKind.IMP_I: 2,
    RuleNameKind.IMP_E: 3,
    RuleNameKind.AND_I: 3,
    RuleNameKind.AND_E: 3,
    RuleNameKind.OR_I: 2,
    RuleNameKind.OR_E: 5,
    RuleNameKind.ABS_I: 3,
    RuleNameKind.ABS_E: 2,
}

_IVAR_BASES = ("x", "y", "z", "u", "v", "w")
_CVAR_BASES = ("a", "b", "c", "d")


class _Unsynthesizable(Exception):
    """No inhabitant found for a goal within its budget."""


class GeneratorService:
    """Backward proof search driven by a :class:`GenConfigVO`."""

    def __init__(self, config: GenConfigVO) -> None:
        """Initialize the GeneratorService.

        Args:
            config (GenConfigVO): Seed, budget, goal, atoms and weights.
        """
        self.config = config
        self.random = Random(config.seed)
        self._failures: set[tuple] = set()
        self._used: set[str] = set()
        self._calls = 0

    def gen_typed(self) -> tuple[TypingContextVO, Term]:
        """Generate a context and a term of the configured goal.

        Returns:
            tuple[TypingContextVO, Term]: The context and a term typed by the goal in it.

        Raises:
            BudgetInfeasibleException: If every attempt fails.
        """
        goal = self.config.goal or self._random_formula(2)

        def build() -> tuple[TypingContextVO, Term]:
            context = self._context()
            return context, self._synth(context, goal, self.config.size_budget)

        return self._attempts(build, render_formula(goal))

    def gen_app_scenario(
        self, mode: ScenarioModeKind, binder_payloads: bool | None = None
    ) -> AppScenarioVO:
        """Generate a typed scenario whose pushed eliminator has the shape ``mode``.

        Case mode has no tail.

        Args:
            mode (ScenarioModeKind): Shape of the pushed eliminator.
            binder_payloads (bool | None): Whether each branch may use its case
                binder; drawn from the seed when None. False keeps the payloads
                closed, as certification requires.

        Raises:
            BudgetInfeasibleException: If every attempt fails.
        """
        return self._attempts(
            lambda: self._scenario(mode, binder_payloads), f"{mode.value} scenario"
        )

    def _attempts(self, build: Callable[[], T], goal: str) -> T:
        for _ in range(self.config.max_attempts):
            self._failures = set()
            self._used = set()
            self._calls = 0
            try:
                return build()
            except _Unsynthesizable:
                continue
        raise BudgetInfeasibleException(
            goal, self.config.size_budget, self.config.max_attempts
        )

    def _scenario(
        self, mode: ScenarioModeKind, binder_payloads: bool | None
    ) -> AppScenarioVO:
        context = self._context()
        share = max(3, self.config.size_budget // 5)
        left, right = self._cut_formula(context, None), self._cut_formula(context, None)
        scrutinee = self._synth(context, Or(left, right), share)

        tail: list[Elim] = []
        result = self._cut_formula(context, None)
        if mode is not ScenarioModeKind.CASE:
            for _ in range(self.random.randint(0, 2)):
                if self.random.random() < 0.5:
                    argument = self._cut_formula(context, None)
                    tail.append(self._synth(context, argument, share))
                    result = Imp(argument, result)
                else:
                    side = self.random.randint(1, 2)
                    other = self._cut_formula(context, None)
                    tail.append(Pi(side))
                    result = And(result, other) if side == 1 else And(other, result)
            tail.reverse()

        eps: Elim
        match mode:
            case ScenarioModeKind.TERM:
                argument = self._cut_formula(context, None)
                eps = self._synth(context, argument, share)
                branch_type: Formula = Imp(argument, result)
            case ScenarioModeKind.PROJ:
                side = self.random.randint(1, 2)
                other = self._cut_formula(context, None)
                eps = Pi(side)
                branch_type = And(result, other) if side == 1 else And(other, result)
            case ScenarioModeKind.CASE:
                first, second = (
                    self._cut_formula(context, None),
                    self._cut_formula(context, None),
                )
                y1, y2 = self._fresh(_IVAR_BASES), self._fresh(_IVAR_BASES)
                eps = Case(
                    y1,
                    self._synth(context.with_intuitionistic(y1, first), result, share),
                    y2,
                    self._synth(context.with_intuitionistic(y2, second), result, share),
                )
                branch_type = Or(first, second)

        var1, var2 = self._preferred("x1"), self._preferred("x2")
        if binder_payloads is None:
            binder_payloads = self.random.random() < 0.5
        scope1, scope2 = context, context
        if binder_payloads:
            scope1 = context.with_intuitionistic(var1, left)
            scope2 = context.with_intuitionistic(var2, right)
        return AppScenarioVO(
            context=context,
            scrutinee=scrutinee,
            var1=var1,
            branch1=self._synth(scope1, branch_type, share),
            var2=var2,
            branch2=self._synth(scope2, branch_type, share),
            eps=eps,
            tail=tuple(tail),
            mode=mode,
        )

    def _synth(self, scope: TypingContextVO, goal: Formula, budget: int) -> Term:
        self._calls += 1
        if self._calls > CALL_LIMIT:
            raise _Unsynthesizable()
        key = (scope.signature(), goal, budget)
        if key in self._failures:
            raise _Unsynthesizable()
        for rule in self._weighted_order(self._alternatives(scope, goal, budget)):
            try:
                return self._apply(rule, scope, goal, budget)
            except _Unsynthesizable:
                continue
        self._failures.add(key)
        raise _Unsynthesizable()

    def _alternatives(
        self, scope: TypingContextVO, goal: Formula, budget: int
    ) -> list[RuleNameKind]:
        candidates: list[RuleNameKind] = []
        if self._hypotheses(scope, goal):
            candidates.append(RuleNameKind.AX)
        match goal:
            case Imp():
                candidates.append(RuleNameKind.IMP_I)
            case And():
                candidates.append(RuleNameKind.AND_I)
            case Or():
                candidates.append(RuleNameKind.OR_I)
        candidates += [RuleNameKind.IMP_E, RuleNameKind.AND_E, RuleNameKind.OR_E]
        if not isinstance(goal, Bottom):
            candidates.append(RuleNameKind.ABS_I)
        elif scope.classical:
            candidates.append(RuleNameKind.ABS_E)
        return [
            rule
            for rule in candidates
            if budget >= _MIN_BUDGET[rule] and self.config.weight(rule) > 0
        ]

    def _weighted_order(self, rules: list[RuleNameKind]) -> list[RuleNameKind]:
        pool = list(rules)
        order: list[RuleNameKind] = []
        while pool:
            (rule,) = self.random.choices(
                pool, weights=[self.config.weight(rule) for rule in pool]
            )
            pool.remove(rule)
            order.append(rule)
        return order

    def _apply(
        self, rule: RuleNameKind, scope: TypingContextVO, goal: Formula, budget: int
    ) -> Term:
        match rule, goal:
            case RuleNameKind.AX, _:
                return IVar(self.random.choice(self._hypotheses(scope, goal)))
            case RuleNameKind.IMP_I, Imp(left=left, right=right):
                var = self._fresh(_IVAR_BASES)
                body = self._synth(scope.with_intuitionistic(var, left), right, budget - 1)
                return Lam(var, left, body)
            case RuleNameKind.AND_I, And(left=left, right=right):
                first, second = self._split(budget - 1, 2)
                return Pair(self._synth(scope, left, first), self._synth(scope, right, second))
            case RuleNameKind.OR_I, Or(left=left, right=right):
                side = self.random.randint(1, 2)
                body = self._synth(scope, left if side == 1 else right, budget - 1)
                return Inj(side, goal, body)
            case RuleNameKind.IMP_E, _:
                argument = self._cut_formula(scope, goal)
                first, second = self._split(budget - 1, 2)
                function = self._synth(scope, Imp(argument, goal), first)
                return App(function, self._synth(scope, argument, second))
            case RuleNameKind.AND_E, _:
                side = self.random.randint(1, 2)
                other = self._cut_formula(scope, goal)
                pair_type = And(goal, other) if side == 1 else And(other, goal)
                return App(self._synth(scope, pair_type, budget - 2), Pi(side))
            case RuleNameKind.OR_E, _:
                left = self._cut_formula(scope, goal)
                right = self._cut_formula(scope, goal)
                first, second, third = self._split(budget - 2, 3)
                scrutinee = self._synth(scope, Or(left, right), first)
                var1 = self._fresh(_IVAR_BASES)
                branch1 = self._synth(scope.with_intuitionistic(var1, left), goal, second)
                var2 = self._fresh(_IVAR_BASES)
                branch2 = self._synth(scope.with_intuitionistic(var2, right), goal, third)
                return App(scrutinee, Case(var1, branch1, var2, branch2))
            case RuleNameKind.ABS_I, _:
                var = self._fresh(_CVAR_BASES)
                body = self._synth(scope.with_classical(var, goal), Bottom(), budget - 1)
                return Mu(var, goal, body)
            case RuleNameKind.ABS_E, _:
                var = self.random.choice(sorted(scope.classical))
                return Name(var, self._synth(scope, scope.classical[var], budget - 1))
        raise _Unsynthesizable()

    def _hypotheses(self, scope: TypingContextVO, goal: Formula) -> list[str]:
        return sorted(name for name, formula in scope.intuitionistic.items() if formula == goal)

    def _split(self, total: int, parts: int) -> list[int]:
        """Random composition of ``total`` into ``parts`` positive budgets."""
        if total < parts:
            raise _Unsynthesizable()
        cuts = sorted(self.random.sample(range(1, total), parts - 1))
        bounds = [0, *cuts, total]
        return [bounds[i + 1] - bounds[i] for i in range(parts)]

    def _cut_formula(self, scope: TypingContextVO, goal: Formula | None) -> Formula:
        """Pick a formula for a premise that the goal does not determine."""
        if self.random.random() < 0.2:
            return self._random_formula(1)
        candidates: list[Formula] = [Atom(name) for name in self.config.atom_pool]
        sources = [*scope.intuitionistic.values(), *scope.classical.values()]
        if goal is not None:
            sources.append(goal)
        for source in sources:
            for formula in subformulas(source):
                if formula not in candidates and not isinstance(formula, Bottom):
                    candidates.append(formula)
        return self.random.choice(candidates)

    def _random_formula(self, depth: int) -> Formula:
        atom = Atom(self.random.choice(self.config.atom_pool))
        if depth == 0 or self.random.random() < 0.3:
            return atom
        left, right = self._random_formula(depth - 1), self._random_formula(depth - 1)
        connective = self.random.choice((Imp, And, Or, None))
        return neg(left) if connective is None else connective(left, right)

    def _context(self) -> TypingContextVO:
        """Random hypotheses: some atoms, a compound or two and maybe a classical name."""
        context = TypingContextVO.empty()
        for atom in self.config.atom_pool:
            if self.random.random() < 0.5:
                context = context.with_intuitionistic(self._fresh(("h",)), Atom(atom))
        for _ in range(self.random.randint(0, 2)):
            context = context.with_intuitionistic(self._fresh(("h",)), self._random_formula(1))
        if self.random.random() < 0.25:
            context = context.with_classical(self._fresh(("k",)), self._random_formula(1))
        return context

    def _fresh(self, bases: tuple[str, ...]) -> str:
        for index in count():
            for base in bases:
                name = base if index == 0 else f"{base}{index}"
                if name not in self._used:
                    self._used.add(name)
                    return name
        raise AssertionError("unreachable")

    def _preferred(self, name: str) -> str:
        if name not in self._used:
            self._used.add(name)
            return name
        return self._fresh((name,))


def gen_typed(config: GenConfigVO) -> tuple[TypingContextVO, Term]:
    """Generate a context and a term of ``config.goal`` (random when absent).

    Same configuration, same output.
    """
    return GeneratorService(config).gen_typed()


def gen_app_scenarios(
    config: GenConfigVO, mode: ScenarioModeKind, binder_payloads: bool | None = None
) -> AppScenarioVO:
    """Generate one scenario of the permutative-pivot theorem in ``mode``."""
    return GeneratorService(config).gen_app_scenario(mode, binder_payloads)


def shrink_budget(
    config: GenConfigVO, fails: Callable[[TypingContextVO, Term], bool]
) -> GenConfigVO:
    """Halve the size budget while the generated term still fails ``fails``.

    Returns the configuration with the smallest budget found that still fails.
    """
    current = config
    while current.size_budget > 1:
        smaller = current.with_changes(size_budget=current.size_budget // 2)
        try:
            context, term = gen_typed(smaller)
        except BudgetInfeasibleException:
            break
        if not fails(context, term):
            break
        current = smaller
    return current
