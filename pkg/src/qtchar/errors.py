"""Exception hierarchy for the qtchar library.

The CLI maps these onto process exit codes; see qtchar.cli.
"""


class QtcharError(Exception):
    """Base class for all library errors."""


class ParseError(QtcharError):
    """Malformed monomial text or Cartan JSON."""


class DomainError(QtcharError):
    """A precondition on mathematical input was violated."""


class NotCartan(DomainError):
    """Matrix violates the generalized Cartan matrix axioms."""


class NotSymmetrizable(NotCartan):
    """No positive integer symmetrizers exist."""


class NotFiniteType(NotCartan):
    """Symmetrized matrix is not positive definite."""


class NotSimplyLaced(DomainError):
    """Operation requires an ADE Cartan matrix."""


class NotDominant(DomainError):
    """Monomial has a negative exponent where nonnegativity is required."""


class NotIDominant(NotDominant):
    """Monomial is not dominant for the requested node."""


class BudgetExceeded(QtcharError):
    """Monomial or depth budget outgrown before the computation closed."""


class AlgorithmFails(QtcharError):
    """Two applicable nodes disagreed in the t-algorithm.

    By the consistency theorem this cannot happen for correct inputs, so
    it always indicates an implementation bug; we abort loudly.
    """


class InversionFails(QtcharError):
    """A residual with no dominant monomial appeared while inverting chi_qt."""


class NonIntegralShift(QtcharError):
    """Parity of the quadratic form violated while picking bar representatives."""


class InternalInconsistency(QtcharError):
    """Exact arithmetic produced a remainder where none is possible."""
