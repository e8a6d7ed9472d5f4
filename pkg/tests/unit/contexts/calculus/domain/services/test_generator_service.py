"""Unit tests for the generator service."""

import pytest

from src.contexts.calculus.domain.exceptions.exception import BudgetInfeasibleException
from src.contexts.calculus.domain.services.generator_service import (
    GeneratorService,
    gen_app_scenarios,
    gen_typed,
    shrink_budget,
)
from src.contexts.calculus.domain.services.head_analysis_service import is_nice
from src.contexts.calculus.domain.services.term_service import (
    cxty,
    free_ivars,
)
from src.contexts.calculus.domain.services.typing_service import check
from src.contexts.calculus.domain.value_objects.app_scenario_vo import (
    ScenarioModeKind,
)
from src.contexts.calculus.domain.value_objects.formula_vo import And, Atom, Imp
from src.contexts.calculus.domain.value_objects.gen_config_vo import (
    GenConfigVO,
    RuleNameKind,
)
from src.contexts.calculus.domain.value_objects.term_vo import IVar, Lam

A = Atom("A")
B = Atom("B")
SEEDS = range(20)


class TestGenTyped:
    """Unit tests for typed term generation."""

    @pytest.mark.parametrize("seed", SEEDS)
    def test_should_generate_typed_terms_within_budget(self, seed):
        """Should produce a term of the goal no larger than the budget."""
        config = GenConfigVO(seed=seed, size_budget=15, goal=Imp(A, A))
        context, term = gen_typed(config)
        assert check(context, term) == Imp(A, A)
        assert cxty(term) <= 15
        assert free_ivars(term) <= context.names()

    def test_should_generate_random_goal_when_none_given(self):
        """Should typecheck every term it manages to build without a goal."""
        built = 0
        for seed in SEEDS:
            try:
                context, term = gen_typed(GenConfigVO(seed=seed, size_budget=25))
            except BudgetInfeasibleException:
                continue
            check(context, term)
            assert cxty(term) <= 25
            built += 1
        assert built > 0

    def test_should_be_deterministic(self):
        """Should give the same output for the same configuration."""
        config = GenConfigVO(seed=99, size_budget=30)
        first_context, first = gen_typed(config)
        second_context, second = gen_typed(config)
        assert first_context == second_context
        assert first == second

    def test_should_reach_identity_at_smallest_budget(self):
        """Should find \\x:A. x for A -> A with two constructors."""
        found = []
        for seed in range(50):
            config = GenConfigVO(
                seed=seed,
                size_budget=2,
                goal=Imp(A, A),
                weights={RuleNameKind.AX: 1, RuleNameKind.IMP_I: 1},
            )
            try:
                _, term = gen_typed(config)
            except BudgetInfeasibleException:
                continue
            found.append(term)
        assert any(isinstance(term, Lam) and term.body == IVar(term.var) for term in found)
        assert all(cxty(term) <= 2 for term in found)

    def test_should_raise_when_budget_is_infeasible(self):
        """Should give up after every attempt fails."""
        goal = And(And(A, B), And(A, B))
        config = GenConfigVO(seed=1, size_budget=2, goal=goal, max_attempts=3)
        with pytest.raises(BudgetInfeasibleException) as exc_info:
            gen_typed(config)
        assert str(exc_info.value) == (
            "no inhabitant of A /\\ B /\\ (A /\\ B) within size 2 after 3 attempts"
        )

    def test_should_only_use_weighted_rules(self):
        """Should not apply a rule of weight zero."""
        config = GenConfigVO(
            seed=5,
            size_budget=12,
            goal=Imp(A, Imp(B, A)),
            weights={RuleNameKind.AX: 1, RuleNameKind.IMP_I: 1},
        )
        context, term = gen_typed(config)
        assert check(context, term) == Imp(A, Imp(B, A))
        assert isinstance(term, Lam)


class TestGenAppScenario:
    """Unit tests for scenario generation."""

    @pytest.mark.parametrize("mode", list(ScenarioModeKind))
    @pytest.mark.parametrize("seed", range(4))
    def test_should_generate_typed_scenarios(self, mode, seed):
        """Should build a scenario whose two sides have one type."""
        generator = GeneratorService(GenConfigVO(seed=seed, size_budget=40))
        scenario = generator.gen_app_scenario(mode, binder_payloads=False)
        assert scenario.mode is mode
        assert scenario.payloads_closed
        assert is_nice([scenario.eps, *scenario.tail])
        assert check(scenario.context, scenario.s1) == check(scenario.context, scenario.s2)
        if mode is ScenarioModeKind.CASE:
            assert scenario.tail == ()

    def test_should_generate_same_scenario_for_same_seed(self):
        """Should be deterministic per configuration."""
        config = GenConfigVO(seed=17, size_budget=40)
        first = gen_app_scenarios(config, ScenarioModeKind.PROJ)
        second = gen_app_scenarios(config, ScenarioModeKind.PROJ)
        assert first == second

    def test_should_let_branches_use_their_binders(self):
        """Should type branches under their case binders when asked."""
        using_binder = []
        for seed in range(15):
            for mode in ScenarioModeKind:
                config = GenConfigVO(seed=seed, size_budget=40)
                try:
                    scenario = gen_app_scenarios(config, mode, binder_payloads=True)
                except BudgetInfeasibleException:
                    continue
                assert check(scenario.context, scenario.s1) == check(
                    scenario.context, scenario.s2
                )
                if not scenario.payloads_closed:
                    using_binder.append(scenario)
        assert using_binder

    def test_should_draw_payload_shape_from_seed(self):
        """Should produce both closed and binder-using payloads without a choice."""
        shapes = set()
        for seed in range(30):
            try:
                scenario = gen_app_scenarios(
                    GenConfigVO(seed=seed, size_budget=40), ScenarioModeKind.TERM
                )
            except BudgetInfeasibleException:
                continue
            shapes.add(scenario.payloads_closed)
        assert shapes == {True, False}


class TestShrinkBudget:
    """Unit tests for shrink_budget."""

    def test_should_halve_budget_while_failure_persists(self):
        """Should keep the smallest budget whose term still fails."""
        config = GenConfigVO(seed=3, size_budget=32, goal=Imp(A, A))
        shrunk = shrink_budget(config, lambda context, term: True)
        assert shrunk.size_budget < 32
        assert shrunk.seed == 3

    def test_should_keep_budget_when_smaller_term_passes(self):
        """Should stop at once when the halved term no longer fails."""
        config = GenConfigVO(seed=3, size_budget=32, goal=Imp(A, A))
        assert shrink_budget(config, lambda context, term: False) == config
