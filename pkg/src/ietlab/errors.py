"""Shared exception types."""


class ParameterError(ValueError):
    """Invalid user-supplied parameter, literal, or argument combination."""


class NumberParseError(ParameterError):
    """Syntax error in a number literal; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class FieldMismatchError(ParameterError):
    """Operands lie in incompatible quadratic fields (different radicands)."""


class InsufficientCoefficientsError(ParameterError):
    """A continued-fraction expansion does not reach the requested depth."""


class BlockParseError(Exception):
    """A word could not be decomposed into the two expected block shapes."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position
