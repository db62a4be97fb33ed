"""Exception types shared across the package."""


class SconfError(Exception):
    """Base class for all errors raised by this package."""


class NotAUnit(SconfError):
    """Inversion was requested for a scalar that is not an invertible monomial."""


class MixedParity(SconfError):
    """An operation that needs a homogeneous element received a mixed-parity one."""


class AlgebraMismatch(SconfError):
    """Elements (or maps) of different algebras were combined."""


class ParamMismatch(SconfError):
    """An isomorphism was requested between modules whose parameters do not match."""


class UnsplitPolynomial(SconfError):
    """A polynomial could not be split into linear factors over Q(sqrt2)."""


class ParseError(SconfError):
    """Input text could not be parsed; carries the offending position and token."""

    def __init__(self, message, pos=None, token=None):
        self.pos = pos
        self.token = token
        if token is not None:
            message = f"{message} (token {token!r} at position {pos})"
        elif pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
