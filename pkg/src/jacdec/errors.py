"""Exception types shared across the package.

The CLI maps these onto exit codes: plain input problems (ValueError,
including FieldMismatchError) exit 1, degenerate mathematical situations
(DegenerateFixedLocusError, NotAGroupError) exit 2, verification failures
exit 3.
"""


class JacdecError(Exception):
    """Base class for package-specific errors."""


class FieldMismatchError(JacdecError, ValueError):
    """Operands belong to different cyclotomic fields."""


class SingularMatrixError(JacdecError, ZeroDivisionError):
    """Inverse or normalization requested for a singular matrix."""


class NotAGroupError(JacdecError):
    """Closure exceeded its bound, or a claimed subgroup is not one."""


class DegenerateFixedLocusError(JacdecError):
    """The fixed locus in Siegel space is not a single point.

    ``survivors`` lists the distinct fixed points found (empty when the
    degeneracy was detected before enumeration, e.g. no regular element).
    """

    def __init__(self, message, survivors=()):
        super().__init__(message)
        self.survivors = tuple(survivors)
