"""Exception types raised by the q16det library."""


class Q16DetError(Exception):
    """Base class for all library errors."""


class NotPrime(Q16DetError, ValueError):
    """A number required to be prime failed a primality check."""


class NonResidue(Q16DetError, ValueError):
    """2 is not a quadratic residue modulo the given prime (p = 3, 5 mod 8)."""


class InvalidResidue(Q16DetError, ValueError):
    """The prime is not in the residue class the operation requires."""


class NotMultiple(Q16DetError, ValueError):
    """An even target that is not a multiple of 2**10."""


class WrongResidue(Q16DetError, ValueError):
    """An odd target outside the residue class the builder handles."""


class BadInput(Q16DetError, ValueError):
    """Target/prime combination violating the builder's preconditions."""


class NoDecomposition(Q16DetError, RuntimeError):
    """No four-squares decomposition exists (odd sqrt(2)-coefficient)."""


class NoValidArrangement(Q16DetError, RuntimeError):
    """No permutation of a decomposition reaches the required parity layout."""


class ParityViolation(Q16DetError, RuntimeError):
    """Coefficient halving failed; pair parities were inconsistent."""


class PatternMismatch(Q16DetError, RuntimeError):
    """Coefficient parities match none of the expected low-degree patterns."""


class PreconditionUnreachable(Q16DetError, ValueError):
    """No swap/negate normalization of the input satisfies the residue
    preconditions of the parity audit."""


class BudgetExceeded(Q16DetError, RuntimeError):
    """The enumeration space exceeds the configured budget."""


class MismatchFound(Q16DetError, RuntimeError):
    """The two determinant computation paths disagreed (implementation bug)."""


class InternalInconsistency(Q16DetError, RuntimeError):
    """A property that is guaranteed by the underlying mathematics failed."""
