"""Exception hierarchy shared by every module of the package."""


class PosetError(Exception):
    """Base class for all errors raised by posetdist."""


class CyclicInput(PosetError, ValueError):
    pass


class BadIndex(PosetError, IndexError):
    pass


class ParseError(PosetError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TooLarge(PosetError):
    pass


class NotALattice(PosetError):
    pass


class NotDistributive(PosetError):
    pass


class CapExceeded(PosetError):
    pass


class NotTwoDistinguishable(PosetError):
    pass


class BadQColoring(PosetError, ValueError):
    pass


class NeedsThreeColors(PosetError, ValueError):
    pass


class NotRanked(PosetError):
    pass


class NotRankConnected(PosetError):
    pass


class HasTwins(PosetError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"points {self.pair[0]} and {self.pair[1]} are twins")


class EmbeddingNotPlanar(PosetError):
    pass


class LeftmostNotAChain(PosetError):
    pass


class ConstructionFailed(PosetError):
    """A construction produced a coloring that failed its own verification."""
