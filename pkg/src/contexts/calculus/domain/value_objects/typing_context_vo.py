"""This module contains the typing context value object."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.formula_vo import Formula
from src.contexts.calculus.domain.value_objects.term_vo import validate_variable
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class TypingContextVO(BaseValueObject):
    """Declarations ``x:A`` (intuitionistic) and ``a:~A`` (classical).

    ``classical`` maps each classical variable to the ``A`` of its ``~A``.
    """

    intuitionistic: Mapping[str, Formula] = field(default_factory=dict)
    classical: Mapping[str, Formula] = field(default_factory=dict)

    def validate(self) -> None:
        """Names are valid, types are formulas and the two maps are disjoint."""
        for table in (self.intuitionistic, self.classical):
            for name, formula in table.items():
                validate_variable(name)
                if not isinstance(formula, Formula):
                    raise InvalidTermException(f"declared type of {name} must be a formula")
        clash = set(self.intuitionistic) & set(self.classical)
        if clash:
            raise InvalidTermException(
                f"variables declared both ways: {', '.join(sorted(clash))}"
            )
        object.__setattr__(
            self, "intuitionistic", MappingProxyType(dict(self.intuitionistic))
        )
        object.__setattr__(self, "classical", MappingProxyType(dict(self.classical)))

    @classmethod
    def empty(cls) -> "TypingContextVO":
        """The context without declarations."""
        return cls()

    def with_intuitionistic(self, name: str, formula: Formula) -> "TypingContextVO":
        """Add or shadow an intuitionistic declaration."""
        classical = {k: v for k, v in self.classical.items() if k != name}
        return TypingContextVO({**self.intuitionistic, name: formula}, classical)

    def with_classical(self, name: str, formula: Formula) -> "TypingContextVO":
        """Add or shadow a classical declaration ``name:~formula``."""
        intuitionistic = {k: v for k, v in self.intuitionistic.items() if k != name}
        return TypingContextVO(intuitionistic, {**self.classical, name: formula})

    def names(self) -> frozenset[str]:
        """All declared variable names."""
        return frozenset(self.intuitionistic) | frozenset(self.classical)

    def signature(self) -> tuple:
        """Hashable, order-independent summary of the declarations."""
        return (
            tuple(sorted(self.intuitionistic.items(), key=lambda item: item[0])),
            tuple(sorted(self.classical.items(), key=lambda item: item[0])),
        )

    def __hash__(self) -> int:
        """Hash by the declarations."""
        return hash(self.signature())

    def __eq__(self, other: object) -> bool:
        """Equal when the declarations coincide."""
        if not isinstance(other, TypingContextVO):
            return NotImplemented
        return self.signature() == other.signature()
