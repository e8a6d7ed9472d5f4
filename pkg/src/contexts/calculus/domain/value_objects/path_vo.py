"""This module contains the path value object addressing nodes inside a term."""

from dataclasses import dataclass

from src.contexts.calculus.domain.exceptions.exception import InvalidPathException
from src.shared.domain.value_objects.value_object import BaseValueObject

SELECTORS = frozenset(
    {"fun", "elim", "body", "left", "right", "branch1", "branch2", "payload"}
)


@dataclass(frozen=True, order=True)
class PathVO(BaseValueObject):
    """Sequence of child selectors leading from the root to a node.

    Rendered as ``/`` for the root and ``/fun/elim`` otherwise.
    """

    steps: tuple[str, ...] = ()

    def validate(self) -> None:
        """Every step must be a known selector."""
        if not isinstance(self.steps, tuple):
            raise InvalidPathException(repr(self.steps), "steps must be a tuple")
        for step in self.steps:
            if step not in SELECTORS:
                raise InvalidPathException(self._render(), f"unknown selector {step!r}")

    @classmethod
    def root(cls) -> "PathVO":
        """The empty path."""
        return cls(())

    @classmethod
    def parse(cls, text: str) -> "PathVO":
        """Parse ``/a/b``, ``a/b`` or ``a.b`` into a path.

        Args:
            text (str): The rendered path.

        Returns:
            PathVO: The parsed path.
        """
        cleaned = text.strip().replace(".", "/").strip("/")
        if not cleaned:
            return cls.root()
        return cls(tuple(part for part in cleaned.split("/") if part))

    def child(self, selector: str) -> "PathVO":
        """Extend the path by one selector."""
        return PathVO((*self.steps, selector))

    def concat(self, other: "PathVO") -> "PathVO":
        """Append another path."""
        return PathVO(self.steps + other.steps)

    def is_prefix_of(self, other: "PathVO") -> bool:
        """Tell whether ``other`` starts with this path."""
        return other.steps[: len(self.steps)] == self.steps

    def relative_to(self, prefix: "PathVO") -> "PathVO":
        """Strip a prefix from this path."""
        if not prefix.is_prefix_of(self):
            raise InvalidPathException(str(self), f"{prefix} is not a prefix")
        return PathVO(self.steps[len(prefix.steps) :])

    def __len__(self) -> int:
        """Number of selectors."""
        return len(self.steps)

    def __str__(self) -> str:
        """Render the path."""
        return self._render()

    def _render(self) -> str:
        return "/" + "/".join(self.steps)
