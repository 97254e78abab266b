"""Exception types shared across the package."""


class MvToolError(Exception):
    """Base class for all errors raised by this package."""


class CarrierMismatchError(MvToolError):
    """An element does not belong to the carrier it was used with."""


class InvalidUnitError(MvToolError):
    """A proposed order unit is not a non-negative element of its group."""


class NotPerfectError(MvToolError):
    """An operation requiring a perfect algebra found a counterexample."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class PreconditionError(MvToolError):
    """A pointed/unital structure fails its axioms at the tested bound."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DecompositionError(MvToolError):
    """A product decomposition produced a factor that is not perfect."""

    def __init__(self, message, factor_index=None, counterexample=None):
        super().__init__(message)
        self.factor_index = factor_index
        self.counterexample = counterexample


class ParseError(MvToolError):
    """Syntax error in the sequent DSL, with source position."""

    def __init__(self, message, line=1, col=0):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class SignatureError(MvToolError):
    """A term mixes symbols from incompatible signatures, or is evaluated
    in a model of the wrong signature."""


class UnboundVariableError(MvToolError):
    """A term was evaluated under an environment missing one of its
    free variables."""


class UnknownLabelError(MvToolError):
    """Lookup of a sequent label that is not in the registry."""


class DescriptorError(MvToolError):
    """A model descriptor string does not parse to a registered carrier."""


class CarrierCapExceededError(MvToolError):
    """Enumerating the requested carrier at the requested bound would
    exceed the configured element cap."""
