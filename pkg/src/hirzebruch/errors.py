"""Exception hierarchy shared by every module of the package."""


class HirzebruchError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HirzebruchError, ValueError):
    """An argument lies outside the domain of an operation."""


class GermError(DomainError):
    """A triple (m, k, l) does not describe an admissible germ."""


class IrreducibilityError(GermError):
    pass


class NotSingularError(GermError):
    pass


class OrderingError(GermError):
    pass


class UnsupportedCaseError(HirzebruchError):
    """The operation is only defined on a narrower class of germs."""


class UnsupportedShapeError(HirzebruchError):
    """A plumbing graph is neither a bamboo nor a star."""


class InvariantViolation(HirzebruchError, AssertionError):
    """An internal identity failed. This always indicates a bug."""
