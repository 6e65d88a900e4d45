"""Error types shared across the package.

Every error carries an ``exit_code`` used by the CLI: 2 for malformed or
otherwise unusable input, 3 for truncation-order problems (a computation
that would need series coefficients beyond the order actually supplied).
"""


class ShuffleHopfError(Exception):
    """Base class for all package errors."""

    exit_code = 2


class ParseError(ShuffleHopfError):
    """Malformed text input (words, rationals, series literals, names)."""


class OrderError(ShuffleHopfError):
    """A truncated series is too short for the requested computation,
    or two truncations disagree."""

    exit_code = 3


class EmptyWordError(ShuffleHopfError):
    """A half-shuffle was applied to the empty word, where it is undefined."""


class MissingImageError(ShuffleHopfError):
    """A substitution did not provide an image for some generator."""


class DegreeMismatchError(ShuffleHopfError):
    """Degrees of operands do not line up (action, composition, truncation)."""


class LeadingCoefficientError(ShuffleHopfError):
    """The leading series coefficient does not satisfy the required
    invertibility / tangency condition."""


class NotExpressibleError(ShuffleHopfError):
    """A tensor element is not the evaluation of any word-indexed operator
    on the generic word (a generator repeats, is missing, or mixes arities)."""


class AlphabetSizeError(ShuffleHopfError):
    """The requested alphabet is too small to realize a packed word."""


class MomentError(ShuffleHopfError):
    """Not enough moments were supplied for a moment-functional evaluation."""


class ConstantTermError(ShuffleHopfError):
    """The constant term of a noncommutative polynomial does not meet the
    precondition of exp (must be 0) or log (must be 1)."""


class CoderivationError(ShuffleHopfError):
    """An operator logarithm failed its postcondition check: the residual
    against the read-back coderivation is nonzero."""
