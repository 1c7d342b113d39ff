"""
Exceptions raised by polygroth.
"""


class PolyGrothError(Exception):
    """Base class for all errors raised on purpose by polygroth."""


class RingSizeMismatchError(PolyGrothError, ValueError):
    """Two polynomials from rings of different size were combined."""


class IndexRangeError(PolyGrothError, IndexError):
    """A variable or transposition index lies outside the ring or S_n."""


class PermutationError(PolyGrothError, ValueError):
    """Input is not a permutation in one-line notation."""


class NotApplicableError(PolyGrothError, ValueError):
    """The permutation (or other input) is outside the class an operation needs."""


class ShapeError(PolyGrothError, ValueError):
    """Invalid skew shape, flagging, or tableau."""


class InvariantViolation(PolyGrothError, AssertionError):
    """A runtime-checked invariant did not hold."""
