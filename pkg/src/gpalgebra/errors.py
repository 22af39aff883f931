"""Exception types shared across the package."""

from __future__ import annotations


class GpalgebraError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatchError(GpalgebraError):
    pass


class DimensionMismatchError(GpalgebraError):
    pass


class NonAssociativeError(GpalgebraError):
    """Structure constants fail (b_i b_j) b_k = b_i (b_j b_k) at the stored triple."""

    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails at basis triple {(i, j, k)}")


class NoUnityError(GpalgebraError):
    pass


class CharacteristicTooSmallError(GpalgebraError):
    """The trace-pairing radical method needs characteristic 0 or p > dim."""

    def __init__(self, p, dim):
        self.p = p
        self.dim = dim
        super().__init__(f"characteristic {p} is not larger than the working dimension {dim}")


class NotAnIdealError(GpalgebraError):
    pass


class NotNilpotentError(GpalgebraError):
    pass


class LiftDivergedError(GpalgebraError):
    pass


class InvalidIdempotentSetError(GpalgebraError):
    """One of the defining conditions of a complete orthogonal set failed.

    ``reason`` is one of: orthogonality, completeness, zero-element, sum,
    centrality.
    """

    def __init__(self, reason, detail=""):
        self.reason = reason
        self.detail = detail
        super().__init__(f"invalid idempotent set ({reason}): {detail}")


class NotSemisimpleError(GpalgebraError):
    pass


class SplittingFailedError(GpalgebraError):
    def __init__(self, retries):
        self.retries = retries
        super().__init__(f"could not split after {retries} candidates")


class NotSplitError(GpalgebraError):
    """A simple block is not a full matrix algebra over the ground field."""


class NotElementaryError(GpalgebraError):
    pass


class RelationModeError(GpalgebraError):
    """A declared relation element violates the containment of its mode."""

    def __init__(self, mode, detail=""):
        self.mode = mode
        super().__init__(f"relation outside the span allowed by mode {mode}: {detail}")


class PathExplosionError(GpalgebraError):
    def __init__(self, count, bound):
        self.count = count
        self.bound = bound
        super().__init__(f"path enumeration needs {count} basis paths, cap is {bound}")


class RelationNotSatisfiedError(GpalgebraError):
    def __init__(self, relation, witness=None):
        self.relation = relation
        self.witness = witness
        super().__init__(f"relation does not act as zero: {relation}")


class CompatibilityViolationError(GpalgebraError):
    def __init__(self, arrow):
        self.arrow = arrow
        super().__init__(f"arrow image is not framed by its endpoint idempotent images: {arrow}")


class NotAHomomorphismError(GpalgebraError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"multiplicativity fails at {witness}")


class InternalCheckError(GpalgebraError):
    """A property that must hold by construction failed; indicates a bug."""


class BadPartitionError(GpalgebraError):
    pass


class MTooLargeError(GpalgebraError):
    pass


class BijectionError(GpalgebraError):
    pass


class SizeMismatchError(GpalgebraError):
    pass


class ParseError(GpalgebraError):
    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class UnknownReferenceError(GpalgebraError):
    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"unknown name {name!r}{where}")


class DuplicateNameError(GpalgebraError):
    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate name {name!r}{where}")
