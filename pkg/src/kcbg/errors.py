"""Exception hierarchy shared by every kcbg module."""


class KCBGError(Exception):
    """Base class for all errors raised by kcbg."""


class IndexOutOfRange(KCBGError, ValueError):
    pass


class DuplicateEdge(KCBGError, ValueError):
    pass


class ParseError(KCBGError, ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class OrderMismatch(KCBGError, ValueError):
    pass


class InvalidOrder(KCBGError, ValueError):
    """Raised when (n, m) violates an operation's ordering precondition."""


class NotSurplus(InvalidOrder):
    """Raised when a surplus (n > m) is required but absent."""


class InvalidParameter(KCBGError, ValueError):
    pass


class InvalidA(InvalidParameter):
    pass


class NotIntegerA(InvalidParameter):
    pass


class InvalidProfileArgs(InvalidParameter):
    pass


class InvalidC(InvalidParameter):
    pass


class InvalidKappa(InvalidParameter):
    pass


class NotSorted(KCBGError, ValueError):
    pass


class BudgetExceeded(KCBGError, RuntimeError):
    """Raised when an enumeration would exceed its subset budget."""


class UnequalClasses(KCBGError, ValueError):
    pass


class NotKCB(KCBGError, ValueError):
    pass


class NotPerfectMatching(KCBGError, ValueError):
    pass


class AdjacentPair(KCBGError, ValueError):
    pass


class AdjacentPairInS(AdjacentPair):
    pass


class SameVertex(KCBGError, ValueError):
    pass


class Degenerate(KCBGError, ValueError):
    pass


class TooFewVertices(KCBGError, ValueError):
    pass
