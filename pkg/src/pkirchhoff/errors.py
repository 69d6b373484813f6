"""Exception types shared across the package."""


class PKirchhoffError(Exception):
    """Base class for all package errors."""


class OutOfRange(PKirchhoffError, ValueError):
    """A problem parameter violates its admissible range; message names the bound."""


class NonFinite(PKirchhoffError, ValueError):
    """A profile or intermediate quantity contains NaN/Inf."""


class StepFailure(PKirchhoffError, RuntimeError):
    """The ODE state left its admissible bracket during integration."""


class BracketNotFound(PKirchhoffError, RuntimeError):
    """No (rebound, crossing) shooting bracket exists in the scanned range."""


class TailTooFat(PKirchhoffError, RuntimeError):
    """Profile has not decayed below the tail bound at the truncation radius."""


class NoInteriorExtremum(PKirchhoffError, RuntimeError):
    """The fibering function has no interior critical point (nonexistence branch)."""


class WrongRegime(PKirchhoffError, ValueError):
    """A threshold or flow was requested outside the exponent regime it belongs to."""


class RegimeError(WrongRegime):
    """A flow was requested in a regime where its objective is unbounded below."""


class MassMismatch(PKirchhoffError, ValueError):
    """Profile mass differs from the prescribed constraint beyond tolerance."""


class GridUnderresolved(PKirchhoffError, RuntimeError):
    """A rescaled profile cannot be represented on the working grid."""


class NoRoot(PKirchhoffError, RuntimeError):
    """The fiber stationarity equation has no root for the given profile."""


class ZeroFunction(PKirchhoffError, ValueError):
    """An operation requiring a nonzero profile received (numerically) zero."""


class DegeneratePair(PKirchhoffError, ValueError):
    """The monotonicity-ratio operands coincide, so the ratio is undefined."""


class ParseError(PKirchhoffError, ValueError):
    """A profile or config file is malformed; message carries the line number."""
