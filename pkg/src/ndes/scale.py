"""Scale geometry and matrix-digit arithmetic.

A scale of dimension ``dim`` and radix ``radix`` splits every point into
``radix`` parts per axis at the next level, so each level step multiplies
the point count by ``radix ** dim`` (the scale order).  Level ``S_0`` is the
root; larger indices are deeper.

A matrix digit is the tuple of per-axis digits for one level, e.g. ``(y, x)``
in 2D.  It reads as a single figure in radix ``radix ** dim`` with the
first-listed axis most significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

MatrixDigit = Tuple[int, ...]


class ScaleError(ValueError):
    pass


@dataclass(frozen=True)
class Scale:
    """Hierarchical scale ``(dim, radix, depth)``.

    ``depth`` is the index of the terminal level.  ``None`` means the scale
    is open at the bottom (unlimited sublevels), which is what numeral work
    assumes.
    """

    dim: int
    radix: int
    depth: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ScaleError(f"dim must be >= 1, got {self.dim!r}")
        if not isinstance(self.radix, int) or self.radix < 2:
            raise ScaleError(f"radix must be >= 2, got {self.radix!r}")
        if self.depth is not None and (not isinstance(self.depth, int) or self.depth < 0):
            raise ScaleError(f"depth must be >= 0, got {self.depth!r}")

    @property
    def order(self) -> int:
        """Number of children per point, ``radix ** dim``."""
        return self.radix**self.dim

    @property
    def side(self) -> int:
        """Points per axis at the terminal level."""
        if self.depth is None:
            raise ScaleError("open scale has no terminal level")
        return self.radix**self.depth

    def points_at(self, level: int) -> int:
        return self.order**level

    def with_depth(self, depth: Optional[int]) -> "Scale":
        return Scale(self.dim, self.radix, depth)


def make_scale(dim: int, radix: int, depth: int) -> Scale:
    if depth is None:
        raise ScaleError("depth is required; use Scale(dim, radix) for an open scale")
    return Scale(dim, radix, depth)


def check_digit(d: Sequence[int], s: Scale) -> MatrixDigit:
    d = tuple(d)
    if len(d) != s.dim:
        raise ScaleError(f"matrix digit {d} has {len(d)} axes, scale has {s.dim}")
    for a in d:
        if not 0 <= a < s.radix:
            raise ScaleError(f"axis digit {a} out of range for radix {s.radix}")
    return d


def digit_value(d: Sequence[int], s: Scale) -> int:
    """Read a matrix digit as one figure in radix ``s.order``.

    >>> digit_value((3, 3, 1), Scale(3, 4))
    61
    """
    v = 0
    for a in check_digit(d, s):
        v = v * s.radix + a
    return v


def digit_from_value(v: int, s: Scale) -> MatrixDigit:
    """Inverse of :func:`digit_value`.

    >>> digit_from_value(14, Scale(3, 4))
    (0, 3, 2)
    """
    if not 0 <= v < s.order:
        raise ScaleError(f"digit value {v} out of range [0, {s.order})")
    axes = [0] * s.dim
    for i in range(s.dim - 1, -1, -1):
        v, axes[i] = divmod(v, s.radix)
    return tuple(axes)


def to_digits(value: int, radix: int, width: int = 0) -> list:
    """Radix digits of a non-negative integer, most significant first,
    left-padded with zeros to ``width``."""
    if value < 0:
        raise ValueError(f"negative value {value}")
    out = []
    while value:
        value, r = divmod(value, radix)
        out.append(r)
    out.extend([0] * (width - len(out)))
    out.reverse()
    return out


def from_digits(digits: Sequence[int], radix: int) -> int:
    v = 0
    for d in digits:
        v = v * radix + d
    return v
