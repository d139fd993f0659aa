"""Exception hierarchy.

Every domain error derives from :class:`BruhatTitsError`; the CLI prints the
class name on stderr and exits with status 1.
"""


class BruhatTitsError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(BruhatTitsError, ValueError):
    pass


class InvalidRank(BruhatTitsError, ValueError):
    pass


class RankMismatch(BruhatTitsError, ValueError):
    pass


class IndexOutOfRange(BruhatTitsError, IndexError):
    pass


class EmptySet(BruhatTitsError, ValueError):
    pass


class EmptySubset(BruhatTitsError, ValueError):
    pass


class NotConcave(BruhatTitsError, ValueError):
    pass


class NotIntegral(BruhatTitsError, ValueError):
    pass


class UnboundedRegularization(BruhatTitsError, ArithmeticError):
    """The linear program behind f' has no finite minimum."""


class NegativeDepth(BruhatTitsError, ValueError):
    pass


class WrongType(BruhatTitsError, ValueError):
    pass


class SizeMismatch(BruhatTitsError, ValueError):
    pass


class PoleOverflow(BruhatTitsError, ArithmeticError):
    """A term fell below the pole cap of a truncated series.

    This means the truncation window is too small for the computation; it is
    never a membership verdict.
    """


class BadTypeVector(BruhatTitsError, ValueError):
    pass
