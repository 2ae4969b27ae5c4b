"""Exception types raised by the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input, or an invalid edge set."""


class CapExceededError(ValueError):
    """A subset enumeration would exceed the configured cap on C(n, k)."""


class EigenSolverError(RuntimeError):
    """The symmetric eigensolver failed to converge."""


class TheoremViolationError(AssertionError):
    """A proved bound failed by more than the violation tolerance.

    Proved bounds cannot fail, so this always points at a bug in the
    matrix constructions or the eigensolver.
    """

    def __init__(self, message, records=()):
        super().__init__(message)
        self.records = list(records)
