"""This module contains custom exceptions for the domain layer."""


class BaseDomainException(Exception):
    """Base class for domain-specific exceptions."""

    pass


class InvalidSettingException(BaseDomainException):
    """Exception raised when a runtime setting is outside its allowed range."""

    def __init__(self, name: str, value: object, reason: str) -> None:
        """Initialize the InvalidSettingException.

        Args:
            name (str): The name of the setting.
            value (object): The rejected value.
            reason (str): Why the value was rejected.
        """
        self.name = name
        self.value = value
        self.reason = reason
        super().__init__(f"{name}={value!r}: {reason}")
