"""Exception hierarchy.

Every error raised on purpose by the package derives from ``M0nError`` so
callers (the CLI in particular) can separate input problems from bugs.
"""


class M0nError(ValueError):
    pass


class SizeOutOfRange(M0nError):
    pass


class EmptyOrFull(M0nError):
    pass


class AdjacentDivisor(M0nError):
    pass


class InvalidPartition(M0nError):
    pass


class BadSize(M0nError):
    pass


class NotACurve(M0nError):
    pass


class StabilizerTimeout(M0nError):
    pass


class BudgetExhausted(M0nError):
    """Raised by the effective-expression search when its budgets run out.

    ``best`` is the lowest-deficiency expression seen and ``deficiency`` its
    negative mass.
    """

    def __init__(self, message, best=None, deficiency=None, stats=None):
        super().__init__(message)
        self.best = best
        self.deficiency = deficiency
        self.stats = stats


class DegenerateFamily(M0nError):
    pass


class UnsupportedFieldExtension(M0nError):
    pass


class GermDepthExceeded(M0nError):
    pass


class NotOneDimensional(M0nError):
    pass


class UnsupportedExceptionalLocus(M0nError):
    pass
