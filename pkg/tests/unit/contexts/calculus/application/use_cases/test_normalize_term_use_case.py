"""Unit tests for NormalizeTermUseCase."""

from unittest.mock import Mock

from src.contexts.calculus.application.dto.command import NormalizeTermCommand
from src.contexts.calculus.application.dto.response import NormalizeTermResponse
from src.contexts.calculus.application.use_cases.normalize_term_use_case import (
    NormalizeTermUseCase,
)
from src.contexts.calculus.domain.value_objects.formula_vo import Atom
from src.contexts.calculus.domain.value_objects.source_unit_vo import SourceUnitVO
from src.contexts.calculus.domain.value_objects.term_vo import App, IVar, Lam, Pair

A = Atom("A")
x, y, z = IVar("x"), IVar("y"), IVar("z")
DUPLICATING = App(Lam("x", A, Pair(x, x)), App(Lam("y", A, y), z))


class TestNormalizeTermUseCase:
    """Unit tests for NormalizeTermUseCase."""

    def setup_method(self):
        """Setup mock dependencies for the use case."""
        self.syntax_service_port = Mock()
        self.syntax_service_port.parse.return_value = SourceUnitVO(DUPLICATING)
        self.logger = Mock()
        self.use_case = NormalizeTermUseCase(
            syntax_service_port=self.syntax_service_port, logger=self.logger
        )

    def test_should_return_trace_and_normal_form(self):
        """Should render every step and the final term."""
        command = NormalizeTermCommand(source="", strategy="leftmost", max_steps=10)

        response = self.use_case.execute(command)

        assert isinstance(response, NormalizeTermResponse)
        assert response.term == "<z, z>"
        assert response.steps == ["/ Beta", "/left Beta", "/right Beta"]
        assert response.terms[-1] == "<z, z>"
        assert not response.exhausted
        self.logger.warning.assert_not_called()

    def test_should_warn_when_budget_runs_out(self):
        """Should flag and log an exhausted budget."""
        command = NormalizeTermCommand(source="", strategy="head", max_steps=1)

        response = self.use_case.execute(command)

        assert response.exhausted
        assert len(response.steps) == 1
        self.logger.warning.assert_called_once_with(
            message="Normalization budget exhausted", max_steps=1
        )
