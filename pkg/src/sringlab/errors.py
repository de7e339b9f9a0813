"""Exception types raised across the package."""


class RingLabError(Exception):
    """Base class for every error raised by sringlab."""


class InvalidOrderError(RingLabError, ValueError):
    pass


class SizeCapError(RingLabError, ValueError):
    pass


class RingAxiomError(RingLabError, ValueError):
    """Operation tables fail the commutative-ring-with-identity axioms."""


class ImproperQuotientError(RingLabError, ValueError):
    pass


class ModuleActionError(RingLabError, ValueError):
    pass


class NotAnIsomorphismError(RingLabError, ValueError):
    pass


class RingMismatchError(RingLabError, ValueError):
    pass


class DisjointnessError(RingLabError, ValueError):
    """A check that requires ``X ∩ S = ∅`` was handed an overlapping pair."""


class ImproperIdealError(RingLabError, ValueError):
    pass


class IdealAxiomError(RingLabError, RuntimeError):
    """A computed subset that must be an ideal is not one (implementation bug)."""


class TheoremViolation(RingLabError, RuntimeError):
    """An exhaustive search that a theorem guarantees to succeed came up empty."""


class RingSpecSyntaxError(RingLabError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
