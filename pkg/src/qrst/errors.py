"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class QRSTError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(QRSTError, ZeroDivisionError):
    """Division by the zero rational function."""


class PoleAtPoint(QRSTError, ZeroDivisionError):
    """A denominator vanishes at the requested evaluation point."""


class PoleOnLocus(QRSTError):
    """A substitution makes the denominator vanish identically."""


class PoleAtOne(QRSTError):
    """The diagonal limit q = t -> 1 does not exist."""


class DegenerateBracket(QRSTError, ValueError):
    """The bracket [0, 0] = 0 was used as a factor."""


class EmptyPartition(QRSTError, ValueError):
    """An operation requiring a nonempty partition received the empty one."""


class CellOutsideDiagram(QRSTError, ValueError):
    """A cell expected inside a diagram lies outside it."""


class CellInsideDiagram(QRSTError, ValueError):
    """A cell expected outside a diagram lies inside it."""


class NotContained(QRSTError, ValueError):
    """A skew shape was requested for non-nested partitions."""


class NotHorizontalStrip(QRSTError, ValueError):
    """A skew shape is not a horizontal strip."""


class NotCover(QRSTError, ValueError):
    """Two partitions do not differ by exactly one cell."""


class NotCoverChain(QRSTError, ValueError):
    """A chain of partitions is not a saturated chain of covers."""


class ShapeMismatch(QRSTError, ValueError):
    """Two tableaux or chains have incompatible shapes."""


class DuplicateEntry(QRSTError, ValueError):
    """A tableau entry is repeated or an inserted value already occurs."""


class InvalidParameterRange(QRSTError, ValueError):
    """Numeric parameters lie outside the range where probabilities are valid."""


class SizeBoundExceeded(QRSTError, ValueError):
    """An exhaustive computation was requested beyond its configured bound."""


class AlreadyAbsorbed(QRSTError, ValueError):
    """A hook walk was asked to step from an absorbing cell."""


class InvalidPermutation(QRSTError, ValueError):
    """A sequence is not a permutation of 1..n."""
