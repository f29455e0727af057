"""Exception hierarchy shared by all symtc modules."""


class SymtcError(Exception):
    """Base class for all errors raised by this package."""


class UnknownVertex(SymtcError):
    pass


class EmptyFacet(SymtcError):
    pass


class NotASubcomplex(SymtcError):
    pass


class UnorderedInput(SymtcError):
    pass


class UnknownElement(SymtcError):
    pass


class CycleDetected(SymtcError):
    pass


class BadArity(SymtcError):
    pass


class BudgetExceeded(SymtcError):
    pass


class SizeLimitExceeded(BudgetExceeded):
    """An enumeration stream exceeded its configured budget."""


class LevelMismatch(SymtcError):
    pass


class NotEquivariant(SymtcError):
    pass


class NotGInvariant(SymtcError):
    pass


class SourceMismatch(SymtcError):
    pass


class NotMonotone(SymtcError):
    """Internal interpolation step produced a non-monotone map (a bug)."""


class DisconnectedPoset(SymtcError):
    pass


class InvalidTable(SymtcError):
    pass


class InvalidChain(SymtcError):
    pass


class MonotonicityViolation(SymtcError):
    """A value sequence that must be non-increasing increased (a bug)."""


class ParseError(SymtcError):
    pass


class ValidationError(SymtcError):
    pass
