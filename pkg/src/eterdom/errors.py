"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph input (bad line, self-loop, duplicate edge, bad graph6)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotATreeError(ValueError):
    """Graph failed tree validation (disconnected or wrong edge count)."""


class GuardRailError(RuntimeError):
    """Instance exceeds a configured size guard for an exhaustive solver."""
