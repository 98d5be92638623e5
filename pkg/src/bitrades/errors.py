"""Exception types shared across the package."""


class BitradeError(Exception):
    """Base class for all domain errors raised by this package."""


class NotABitrade(BitradeError):
    """The pair of entry sets violates disjointness or unique agreement."""


class NotSeparated(BitradeError):
    """Some row, column or symbol splits into more than one cycle."""


class NonIntegralGenus(BitradeError):
    """The cycle counts give an odd or negative genus value."""


class InvalidSite(BitradeError):
    """A slide move was requested at a point/direction where it is undefined."""


class NoParent(BitradeError):
    """A contraction was requested on a triple with no valid contraction."""


class InvalidSize(BitradeError):
    """A size argument is odd or below the smallest bitrade size."""


class BoundExceeded(BitradeError):
    """A request exceeds the configured safety bound of the naive engine."""
