"""Exception hierarchy shared by all modules."""


class FutsError(Exception):
    """Base class for every error raised by the library."""


class MixedSemiring(FutsError, TypeError):
    pass


class MissingSemiringId(FutsError, ValueError):
    pass


class DuplicateKey(FutsError, ValueError):
    pass


class BadLevel(FutsError, ValueError):
    pass


class UnmappedKey(FutsError, KeyError):
    pass


class UnknownState(FutsError, KeyError):
    pass


class UnknownLabel(FutsError, KeyError):
    pass


class LevelMismatch(FutsError, ValueError):
    pass


class SemiringMismatch(FutsError, ValueError):
    pass


class IndexOutOfRange(FutsError, IndexError):
    pass


class KeyOutsideCarrier(FutsError, KeyError):
    pass


class CarrierMismatch(FutsError, ValueError):
    pass


class TooManyStates(FutsError, ValueError):
    pass


class TypeMismatch(FutsError, TypeError):
    pass


class OverlappingBlocks(FutsError, ValueError):
    pass


class BadParams(FutsError, ValueError):
    pass


class ModelError(FutsError, ValueError):
    """A model violates its class invariants (bad rate, bad distribution, ...)."""


class NotStochastic(ModelError):
    pass


class NotABisimulation(FutsError, ValueError):
    """Raised with the offending pair of states when a relation fails the
    transfer condition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(FutsError, ValueError):
    """Error in a model or relation file, located at ``line:col``."""

    def __init__(self, message, line=0, col=0, filename=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col
        self.filename = filename

    def __str__(self):
        where = self.filename or "<input>"
        return f"{where}:{self.line}:{self.col}: {self.message}"


class ModelSyntaxError(ParseError):
    pass


class SemanticError(ParseError):
    pass


class NotStochasticError(SemanticError, NotStochastic):
    """A DTMC row in a model file does not sum to 1."""
