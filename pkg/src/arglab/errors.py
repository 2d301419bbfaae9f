"""Exception types shared across the package."""


class ArglabError(Exception):
    """Base class for all errors raised by this package."""


class TheoryParseError(ArglabError):
    """Syntax or validation error in a theory / distribution file."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, col {column}: {message}"
        super().__init__(message)


class CapExceededError(ArglabError):
    """A configurable resource cap was exceeded."""


class DistributionError(ArglabError):
    """Invalid probability distribution or weights input."""
