"""Exception hierarchy shared by every module."""


class CircnetError(Exception):
    """Base class for all errors raised by circnet."""


class DisconnectedNetwork(CircnetError):
    pass


class SingularSystem(CircnetError):
    pass


class SizeLimitExceeded(CircnetError):
    pass


class NotEligible(CircnetError):
    """Star-triangle requested at a vertex that is not an inner degree-3 vertex."""


class NotSymmetric(CircnetError):
    pass


class NonzeroDiagonal(CircnetError):
    pass


class RankMismatch(CircnetError):
    pass


class ZeroColumn(CircnetError):
    pass


class NotInvolution(CircnetError):
    pass


class NotRealizable(CircnetError):
    """The chord diagram does not yield a network with distinct boundary vertices."""


class RoundTripFailure(CircnetError):
    pass


class MissingRotation(CircnetError):
    pass


class NotElectrical(CircnetError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParseError(CircnetError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class ValidationError(ParseError):
    pass
