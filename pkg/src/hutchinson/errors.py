"""Exception types raised across the package."""


class HutchinsonError(Exception):
    """Base class for errors raised by this package."""


class InvalidInput(HutchinsonError, ValueError):
    """An argument violates an operation's precondition."""


class HypothesisViolation(InvalidInput):
    """The quotient sequence does not meet an interval criterion's hypotheses."""


class WitnessSearchExhausted(HutchinsonError, RuntimeError):
    """No sign-alternation point was found within the refinement budget."""


class OracleDisagreement(HutchinsonError, RuntimeError):
    """Two computations that must agree did not (an implementation bug)."""


class NonMonotoneThreshold(HutchinsonError, RuntimeError):
    """Hyperbolicity of a one-parameter family was not monotone in the parameter."""
