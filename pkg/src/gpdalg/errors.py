"""Error taxonomy.  Every error carries a machine-readable ``code`` string."""


class GpdalgError(Exception):
    code = "error"


class RingMismatchError(GpdalgError):
    code = "ring-mismatch"


class DimensionMismatchError(GpdalgError):
    code = "dimension-mismatch"


class GroupoidMismatchError(GpdalgError):
    code = "groupoid-mismatch"


class ConstructionError(GpdalgError):
    """Bad input data: invalid group table, action table, modulus, index."""

    code = "construction"


class NotABisectionError(GpdalgError):
    code = "not-a-bisection"


class NotAnIdealError(GpdalgError):
    code = "not-an-ideal"


class BoundExceededError(GpdalgError):
    """An enumeration would exceed the configured state-space bound."""

    code = "bound-exceeded"


class UnsupportedRingError(GpdalgError):
    """The operation is not defined for this coefficient ring."""

    code = "unsupported-ring"


class NonFreeQuotientError(GpdalgError):
    """A quotient or stalk fails to be free over Z/n, so it has no
    coordinate matrix model in this library."""

    code = "non-free-quotient"
