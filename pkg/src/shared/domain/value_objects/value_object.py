"""This module contains the base class for value objects in the domain layer."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from typing_extensions import Self


@dataclass(frozen=True)
class BaseValueObject(ABC):
    """Base class for immutable value objects.

    Subclasses are frozen dataclasses; validation runs once at construction, so
    an instance that exists is always well formed.
    """

    def __post_init__(self) -> None:
        """Post-initialization hook to perform validation after the object is created."""
        self.validate()

    @abstractmethod
    def validate(self) -> None:  # pragma: no cover
        """Override this method to implement validation logic for the value object."""
        pass

    def with_changes(self, **changes: object) -> Self:
        """Return a copy with some fields replaced, validated again.

        Args:
            **changes: Field names mapped to their new values.

        Returns:
            Self: The new value object.
        """
        return replace(self, **changes)
