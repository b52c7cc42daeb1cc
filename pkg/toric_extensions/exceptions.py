"""
Specialized exceptions for the toric extensions subsystem
"""


class ToricExtensionsError(Exception):
    """
    Base class of everything raised on purpose by this package
    """


class InputError(ToricExtensionsError):
    """
    The caller handed in something malformed or mathematically unsuitable.
    The command line maps these to exit status 2
    """


class InvariantViolation(ToricExtensionsError):
    """
    An internal consistency check failed. This signals a bug rather than bad
    input, and the command line maps it to exit status 3
    """


class RationalParseError(InputError):
    """
    Thrown when a rational number literal cannot be parsed
    """

    def __init__(self, text, position):
        self.text = text
        self.position = position
        super().__init__(
            "malformed rational '{text}' at position {position}".format(text=text, position=position)
        )


class LatticeError(InputError):
    """
    Thrown for singular bases, non-discrete joins or sublattice mismatches
    """


class UnboundedEnumerationError(InputError):
    """
    Thrown when asked to enumerate lattice points of an unbounded polyhedron,
    or when the enumeration would exceed TOREXT_MAX_LATTICE_POINTS
    """


class NotFullDimensionalError(InputError):
    """
    Thrown when an operation needs a full-dimensional polyhedron
    """


class TruncationError(InputError):
    """
    Thrown when a half-space does not bound a polyhedron
    """


class FanError(InputError):
    """
    Thrown when a collection of cones does not form a fan
    """


class FanSupportMismatch(FanError):
    """
    Thrown when two fans that must share their support do not
    """


class IncompatiblePolyhedronError(InputError):
    """
    Thrown when a polyhedron is not compatible with the fan at hand
    """


class ConeNotInFanError(InputError):
    """
    Thrown when localizing at a cone which is not a cone of the fan
    """


class SigmaFamilyError(InputError):
    """
    Thrown when a list of polyhedra is not a family on the fan. Carries the
    offending subset of indices
    """

    def __init__(self, message, subset=None):
        self.subset = subset
        super().__init__(message)


class NotAStretchingError(InputError):
    """
    Thrown when squishing a filtration that is not stretched by the given factor
    """

    def __init__(self, ray, level):
        self.ray = ray
        self.level = level
        super().__init__(
            "not a d-stretching at ray {ray}, level {level}".format(ray=ray, level=level)
        )


class FiltrationError(InputError):
    """
    Thrown when filtrations are combined or evaluated on mismatched rays or degrees
    """


class ExtClassError(InputError):
    """
    Thrown for out of range components or mismatched class arithmetic
    """


class JobError(InputError):
    """
    Thrown when an input document or command line does not describe a runnable job
    """


class UnionNotConvexError(InvariantViolation):
    """
    Thrown when a union that must be convex turns out not to be
    """


class FiltrationAdditivityError(InvariantViolation):
    """
    Thrown when a pushout filtration fails the per-ray dimension bookkeeping
    """


class ExactnessError(InvariantViolation):
    """
    Thrown when a sequence that must be exact fails verification. Carries the report
    """

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class SequenceCertificationError(InvariantViolation):
    """
    Thrown when the chart-wise certification of an extension sequence fails
    """


class OracleMismatchError(InvariantViolation):
    """
    Thrown when the component formula and the Cech oracle disagree
    """
