"""Exception hierarchy shared by all rootspace modules."""


class RootspaceError(Exception):
    """Base class for all domain errors raised by this package."""


class IllegalType(RootspaceError):
    """The (family, rank, twist) combination is not a legal type."""


class EmptySubset(RootspaceError):
    pass


class NotFiniteType(RootspaceError):
    pass


class WindowTooSmall(RootspaceError):
    pass


class EmptyI(RootspaceError):
    pass


class InfiniteOrbit(RootspaceError):
    pass


class NoSingleStep(RootspaceError):
    """No single unit-I-height step exists (possible in affine type only)."""


class NotAPositiveRoot(RootspaceError):
    pass


class SearchExhausted(RootspaceError):
    """The bounded decomposition search ran out of room; treated as a bug signal."""


class NotDominantIntegralOnJ(RootspaceError):
    pass


class JEqualsWholeSet(RootspaceError):
    pass


class DimensionTooLarge(RootspaceError):
    pass


class TooLarge(RootspaceError):
    pass


class NotSupported(RootspaceError):
    pass


class SingularCartan(RootspaceError):
    pass


class NoWordFound(RootspaceError):
    """No nonzero right-normed word was found; must not happen in finite type."""


class UsageError(RootspaceError):
    """Bad command-line request."""
