"""Exception types shared across the package."""


class CoreseqError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CoreseqError):
    """Malformed text input; carries the offending position when known."""

    def __init__(self, message, pos=None, line=None):
        detail = message
        if line is not None:
            detail = f"line {line}: {detail}"
        if pos is not None:
            detail = f"{detail} (at position {pos})"
        super().__init__(detail)
        self.pos = pos
        self.line = line


class SizeMismatchError(CoreseqError):
    """Matrix/vector dimensions do not agree."""


class InsufficientTermsError(CoreseqError):
    """Too few sequence terms for the requested search bounds."""


class NotOrdinaryError(CoreseqError):
    """A Laurent polynomial with negative exponents where an ordinary
    polynomial is required."""


class CoverageError(CoreseqError):
    """A dimension channel was asked for an exponent outside its prefix
    and tail coverage."""


class PositivityError(CoreseqError):
    """An entry that must lie in N[w^+-1] has a negative or non-integer
    coefficient."""


class SingularSubstitutionError(CoreseqError):
    """Substituting 1 for a variable makes the denominator vanish."""


class PreconditionError(CoreseqError):
    """A caller-asserted precondition was detected to be violated."""


class IntegrityError(CoreseqError):
    """An internal certainty was violated; indicates a bug or corrupted
    input, never a routine failure."""


class BudgetError(CoreseqError):
    """A configured resource cap (dimension, block size, memory) was
    exceeded."""
