"""Exception types shared across the package."""


class DomchromError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(DomchromError, ValueError):
    """An edge-list or DIMACS document could not be parsed."""


class InvalidParameterError(DomchromError, ValueError):
    """Family parameters outside the family's domain."""


class UndefinedInvariantError(DomchromError, ValueError):
    """The requested parameter is undefined for this graph (e.g. total
    domination with an isolated vertex present)."""


class NoPredictionError(DomchromError, LookupError):
    """No closed-form prediction is available for the given family spec."""


class OracleCapError(DomchromError, ValueError):
    """Graph exceeds the brute-force oracle's vertex cap."""


class BudgetExceededError(DomchromError, RuntimeError):
    """An exhaustive sweep was refused or aborted by the complexity guard."""
