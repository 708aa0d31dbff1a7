"""Exception hierarchy for the hyperdet package."""


class HyperdetError(Exception):
    """Base class for all package-specific errors."""


class FormatMismatchError(HyperdetError):
    """Two arrays (or an array and a basis) have different formats."""


class GroupClosureError(HyperdetError):
    """The image of a basis element under the group is not in the basis."""


class EnumerationError(HyperdetError):
    """An operator image is missing from its codomain basis.

    This signals a bug in the weight-space enumeration and must abort the
    pipeline; it is never a recoverable condition.
    """


class VerificationError(HyperdetError):
    """A candidate invariant failed exact integer verification."""


class DegeneratePencilError(HyperdetError):
    """det(B) = 0, so the slice pencil det(A + tB) drops degree.

    The discriminant is not defined by the resultant formula in this case;
    randomized callers resample instead of treating this as a failure.
    """


class PolynomialFileError(HyperdetError):
    """A polynomial file is malformed or violates its invariants."""
