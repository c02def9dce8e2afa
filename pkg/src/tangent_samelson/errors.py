"""Exception types raised by the library."""


class AlgebraError(ValueError):
    """Rejected input: mismatched algebras, bad dimensions, invalid hints.

    ``witness`` carries an optional structured counterexample.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DecompositionError(RuntimeError):
    """Root decomposition could not be completed (snap or exactness failure)."""


class ParseError(ValueError):
    """Malformed algebra or matrix file."""
