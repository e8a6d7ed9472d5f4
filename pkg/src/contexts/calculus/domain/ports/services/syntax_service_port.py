"""This module contains the interface for the Syntax Service Port."""

from abc import ABC, abstractmethod

from src.contexts.calculus.domain.value_objects.app_scenario_vo import AppScenarioVO
from src.contexts.calculus.domain.value_objects.formula_vo import Formula
from src.contexts.calculus.domain.value_objects.source_unit_vo import SourceUnitVO
from src.contexts.calculus.domain.value_objects.term_vo import Node, Term
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)


class SyntaxServicePort(ABC):
    """Abstract interface for reading and writing the concrete syntax."""

    @abstractmethod
    def parse(self, text: str) -> SourceUnitVO:
        """Parse exactly one source unit.

        Raises:
            SyntaxErrorException: If the text is outside the grammar.
            UnboundVariableException: If a free variable is not declared.
            VariableSortException: If a variable is used with the wrong sort.
            ShapeException: If a classical head has a bad spine.
        """
        pass

    @abstractmethod
    def parse_units(self, text: str) -> list[SourceUnitVO]:
        """Parse units separated by ``;``."""
        pass

    @abstractmethod
    def parse_formula(self, text: str) -> Formula:
        """Parse a formula."""
        pass

    @abstractmethod
    def parse_scenario(self, text: str) -> AppScenarioVO:
        """Parse a scenario file binding ``M``, ``N1``, ``N2``, ``eps``, ``V`` and ``mode``."""
        pass

    @abstractmethod
    def parse_trace(self, text: str, context: TypingContextVO) -> list[Term]:
        """Parse ``;``-separated terms, resolving free variables in ``context``."""
        pass

    @abstractmethod
    def print(self, node: Node) -> str:
        """Canonical rendering of a term, marked term or eliminator."""
        pass

    @abstractmethod
    def print_unit(self, unit: SourceUnitVO) -> str:
        """Rendering of a whole unit that parses back to it."""
        pass

    @abstractmethod
    def print_scenario(self, scenario: AppScenarioVO) -> str:
        """Rendering of a scenario that parses back to it up to the case binders."""
        pass
