"""Exception hierarchy shared by every module of the package."""


class TokenHamError(Exception):
    """Base class for all package errors."""


class InvalidEdge(TokenHamError, ValueError):
    pass


class InvalidOrder(TokenHamError, ValueError):
    pass


class InvalidVertex(TokenHamError, ValueError):
    pass


class InvalidK(TokenHamError, ValueError):
    pass


class InvalidPair(TokenHamError, ValueError):
    pass


class InvalidCut(TokenHamError, ValueError):
    pass


class InvalidHamPath(TokenHamError, ValueError):
    pass


class RangeExceeded(TokenHamError, ValueError):
    """Raised when a join is outside the range where a cycle is guaranteed."""


class ConstructionInvalid(TokenHamError, RuntimeError):
    """A constructed cycle failed verification. Always an implementation bug."""
