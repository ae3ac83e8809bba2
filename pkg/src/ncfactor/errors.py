"""Exception hierarchy shared by every ncfactor module."""


class NCFactorError(Exception):
    """Base class for domain errors raised by the library."""


class FieldMismatch(NCFactorError, TypeError):
    pass


class AlphabetMismatch(NCFactorError, ValueError):
    pass


class ZeroConstantTerm(NCFactorError, ValueError):
    """The operation needs a polynomial with nonzero constant term."""


class NotComonic(NCFactorError, ValueError):
    """The operation needs a polynomial with constant term exactly 1."""


class ZeroPolynomial(NCFactorError, ValueError):
    pass


class NotDivisible(NCFactorError, ValueError):
    pass


class ZeroModule(NCFactorError, ValueError):
    pass


class InfeasibleEnumeration(NCFactorError, RuntimeError):
    """An exhaustive search would exceed the configured candidate budget."""


class InternalReconstructionFailure(NCFactorError, AssertionError):
    """A self-check failed; this indicates a bug, never bad input."""


class UnknownVariable(NCFactorError, ValueError):
    pass


class PolySyntaxError(NCFactorError, ValueError):
    def __init__(self, message, text="", line=1, column=1):
        self.text = text
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class SideMismatch(NCFactorError, ValueError):
    """A left module was combined with a right module."""
