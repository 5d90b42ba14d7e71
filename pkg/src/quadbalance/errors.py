"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad syntax, wrong degrees, ...)."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class UnattainableTargetError(ValueError):
    """The requested Hilbert function cannot be realized by the construction."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class NotCohenMacaulayError(ValueError):
    """Raised by the balancing pipeline when the input complex fails the
    homological test; carries the failing (face, degree, betti) witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class RegularSequenceNotFoundError(RuntimeError):
    """All sampling attempts and the deterministic fallback were exhausted.

    For genuine inputs this is unreachable: every attempt fails with
    probability at most 1/2, and failure of the fallback would contradict
    the nonemptiness argument established by the bipartite matchings.
    """
