"""This module contains the two substitution value objects."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.term_vo import (
    Eliminator,
    Term,
    validate_variable,
)
from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class SubstIntuVO(BaseValueObject):
    """Simultaneous substitution of terms for intuitionistic variables."""

    mapping: Mapping[str, Term] = field(default_factory=dict)

    def validate(self) -> None:
        """Keys are variable names and images are terms."""
        for name, image in self.mapping.items():
            validate_variable(name)
            if not isinstance(image, Term):
                raise InvalidTermException(f"image of {name} must be a term")
        object.__setattr__(self, "mapping", MappingProxyType(dict(self.mapping)))

    @classmethod
    def single(cls, name: str, image: Term) -> "SubstIntuVO":
        """Substitution of one variable."""
        return cls({name: image})

    @property
    def domain(self) -> frozenset[str]:
        """The substituted variables."""
        return frozenset(self.mapping)

    def __hash__(self) -> int:
        """Hash by variables and image alpha keys."""
        return hash(tuple(sorted((k, v.alpha_key) for k, v in self.mapping.items())))

    def __eq__(self, other: object) -> bool:
        """Equal when both map the same variables to alpha-equal images."""
        if not isinstance(other, SubstIntuVO):
            return NotImplemented
        return self.mapping.keys() == other.mapping.keys() and all(
            image.alpha_key == other.mapping[name].alpha_key
            for name, image in self.mapping.items()
        )


@dataclass(frozen=True)
class SubstClassVO(BaseValueObject):
    """Structural substitution ``[var :=* elim]`` of an eliminator for a classical variable."""

    var: str
    elim: Term | Eliminator

    def validate(self) -> None:
        """The variable must be a name and the image an eliminator."""
        validate_variable(self.var)
        if not isinstance(self.elim, Term | Eliminator):
            raise InvalidTermException("classical substitution image must be an eliminator")
