"""Exception hierarchy shared by all modules."""


class OrigamiError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(OrigamiError):
    """Text could not be parsed. ``column`` is 1-based when known."""

    def __init__(self, message, text=None, column=None):
        self.text = text
        self.column = column
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


class MalformedCycle(ParseError):
    pass


class PointOutOfRange(ParseError):
    pass


class RepeatedPointInCycle(ParseError):
    pass


class DegreeMismatch(OrigamiError):
    pass


class NotConnected(OrigamiError):
    pass


class InvalidCombination(OrigamiError):
    pass


class SeedValidationFailed(OrigamiError):
    pass


class BudgetExceeded(OrigamiError):
    pass


class InvalidFamilyDegree(OrigamiError):
    pass


class ValidationFailed(OrigamiError):
    pass


class EndpointMismatch(OrigamiError):
    pass


class VertexNotInOrbit(OrigamiError):
    pass
