"""This module contains unit tests for BaseValueObject."""

from dataclasses import FrozenInstanceError, dataclass

import pytest

from src.shared.domain.value_objects.value_object import BaseValueObject


@dataclass(frozen=True)
class BoundedVO(BaseValueObject):
    """Value object holding a count no larger than its bound."""

    count: int
    bound: int = 10

    def validate(self) -> None:
        """Refuse counts above the bound."""
        if self.count > self.bound:
            raise ValueError("count exceeds bound")


class TestBaseValueObject:
    """Unit tests for BaseValueObject."""

    def test_should_validate_on_construction(self):
        """Should refuse an ill-formed instance."""
        assert BoundedVO(count=3).count == 3
        with pytest.raises(ValueError):
            BoundedVO(count=11)

    def test_should_be_immutable(self):
        """Should refuse attribute assignment."""
        vo = BoundedVO(count=3)
        with pytest.raises(FrozenInstanceError):
            vo.count = 4

    def test_should_copy_with_changes(self):
        """Should replace fields without touching the original."""
        vo = BoundedVO(count=3)
        changed = vo.with_changes(count=5)

        assert changed == BoundedVO(count=5)
        assert vo.count == 3

    def test_should_validate_changed_copy(self):
        """Should run validation again on the copy."""
        with pytest.raises(ValueError):
            BoundedVO(count=3).with_changes(bound=2)
