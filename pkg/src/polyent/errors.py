"""Exception hierarchy shared by all polyent modules."""


class PolyentError(Exception):
    """Base class for all domain errors raised by this package."""


class DimsMismatch(PolyentError):
    pass


class IndexOutOfRange(PolyentError):
    pass


class ZeroState(PolyentError):
    pass


class SingularOperator(PolyentError):
    pass


class InvalidPoint(PolyentError):
    pass


class NotFree(PolyentError):
    pass


class NoNonnegativeSolution(PolyentError):
    """A·a = λ·1 has no probability-vector solution on this support."""


class NotSubset(PolyentError):
    pass


class UnderdeterminedOrInconsistent(PolyentError):
    pass


class BadVectorNorm(PolyentError):
    pass


class BadParams(PolyentError):
    pass


class Unbounded(PolyentError):
    """The halfspace system admits a recession direction."""


class Empty(PolyentError):
    """The halfspace system is infeasible."""


class UnsupportedDim(PolyentError):
    pass


class IrrationalTarget(PolyentError):
    pass


class NotInChamber(PolyentError):
    pass


class DegenerateDirection(PolyentError):
    pass


class UnknownId(PolyentError):
    pass


class MalformedFixture(PolyentError):
    pass


class WrongStatus(PolyentError):
    pass


class CutsFoundVertex(PolyentError):
    """Submitted inequality excludes a vertex that was already found."""


class DoesNotCutTarget(PolyentError):
    """Submitted inequality fails to exclude the vertex the flow missed."""


class NotCompatibleWithClosestPoint(PolyentError):
    """Submitted inequality is violated by the last flow's closest point."""


class StaleSession(PolyentError):
    pass


class AutoRoundingFailed(PolyentError):
    pass
