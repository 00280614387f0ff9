"""Scalar (tree path) <-> Cartesian index conversion and level shifting.

The scalar index of a point is the root-first list of matrix digits on its
tree path.  Column ``i`` of the Cartesian digit table (the ``i``-th digit of
every axis) is exactly the matrix digit at level ``i + 1``, so conversion is
a transpose of the digit table.  This is the Morton/Z-order correspondence
generalised to any radix and dimension.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .scale import MatrixDigit, Scale, ScaleError, check_digit, digit_from_value, digit_value, to_digits

AXIS_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


class IndexParseError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ScalarIndex:
    """Root-first matrix digits; ``level`` is the number of digits."""

    digits: Tuple[MatrixDigit, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(tuple(d) for d in self.digits))

    @property
    def level(self) -> int:
        return len(self.digits)

    def values(self, s: Scale) -> Tuple[int, ...]:
        return tuple(digit_value(d, s) for d in self.digits)

    @classmethod
    def from_values(cls, values: Sequence[int], s: Scale) -> "ScalarIndex":
        return cls(tuple(digit_from_value(v, s) for v in values))

    def child(self, d: MatrixDigit) -> "ScalarIndex":
        return ScalarIndex(self.digits + (tuple(d),))


@dataclass(frozen=True)
class CartesianIndex:
    """Per-axis digit vectors (most significant first) at ``level``."""

    level: int
    coords: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(tuple(c) for c in self.coords))
        if self.level < 0:
            raise ScaleError(f"negative level {self.level}")
        for axis in self.coords:
            if len(axis) != self.level:
                raise ScaleError(f"axis digits {axis} do not have {self.level} digits")

    def values(self, s: Scale) -> Tuple[int, ...]:
        out = []
        for axis in self.coords:
            v = 0
            for a in axis:
                v = v * s.radix + a
            out.append(v)
        return tuple(out)

    @classmethod
    def from_values(cls, values: Sequence[int], level: int, s: Scale) -> "CartesianIndex":
        coords = []
        for v in values:
            if not 0 <= v < s.radix**level:
                raise ScaleError(f"coordinate {v} does not fit in {level} radix-{s.radix} digits")
            coords.append(tuple(to_digits(v, s.radix, level)))
        return cls(level, tuple(coords))


def _check_cartesian(c: CartesianIndex, s: Scale) -> None:
    if len(c.coords) != s.dim:
        raise ScaleError(f"index has {len(c.coords)} axes, scale has {s.dim}")
    for axis in c.coords:
        for a in axis:
            if not 0 <= a < s.radix:
                raise ScaleError(f"axis digit {a} out of range for radix {s.radix}")


def interleave(c: CartesianIndex, s: Scale) -> ScalarIndex:
    _check_cartesian(c, s)
    return ScalarIndex(tuple(zip(*c.coords)) if c.level else ())


def deinterleave(x: ScalarIndex, s: Scale) -> CartesianIndex:
    for d in x.digits:
        check_digit(d, s)
    if not x.digits:
        return CartesianIndex(0, ((),) * s.dim)
    return CartesianIndex(x.level, tuple(zip(*x.digits)))


def cartesian_prefix(c: CartesianIndex, target: int) -> CartesianIndex:
    """Same point seen from the coarser level ``target``."""
    if not 0 <= target <= c.level:
        raise ScaleError(f"target level {target} outside [0, {c.level}]")
    return CartesianIndex(target, tuple(axis[:target] for axis in c.coords))


def scalar_prefix(x: ScalarIndex, target: int) -> ScalarIndex:
    if not 0 <= target <= x.level:
        raise ScaleError(f"target level {target} outside [0, {x.level}]")
    return ScalarIndex(x.digits[:target])


# -- text forms --------------------------------------------------------------


def _axis_char(a: int, s: Scale) -> str:
    if s.radix > len(AXIS_CHARS):
        raise IndexParseError(f"radix {s.radix} has no single-character digit form")
    return AXIS_CHARS[a]


def _read_axis_char(ch: str, s: Scale, context: str) -> int:
    v = AXIS_CHARS.find(ch.lower())
    if v < 0 or v >= s.radix:
        raise IndexParseError(f"invalid radix-{s.radix} digit {ch!r} in {context!r}")
    return v


def format_scalar(x: ScalarIndex, s: Scale) -> str:
    """``"00 10 11"``: one group of ``dim`` axis characters per level."""
    return " ".join("".join(_axis_char(a, s) for a in d) for d in x.digits)


def format_scalar_values(x: ScalarIndex, s: Scale) -> str:
    """``"0 [61] [14]"``: each level as one radix-``order`` figure."""
    return " ".join(format_figure(v) for v in x.values(s))


def format_figure(v: int) -> str:
    return str(v) if v < 10 else f"[{v}]"


_BRACKET = re.compile(r"\[(\d+)\]")


def parse_scalar(text: str, s: Scale) -> ScalarIndex:
    """Parse a scalar index.

    Tokens are whitespace separated.  A token of ``dim`` axis characters is
    a matrix digit in axis form; ``[v]`` (or a single character when
    ``dim > 1``) is a figure value.  For ``dim == 1`` an unspaced run like
    ``"021"`` is read one digit per character.
    """
    text = text.strip()
    if text in ("", "-"):
        return ScalarIndex(())
    tokens = text.split()
    if s.dim == 1 and len(tokens) == 1:
        tokens = re.findall(r"\[\d+\]|\S", text)
    digits = []
    for tok in tokens:
        m = _BRACKET.fullmatch(tok)
        if m:
            v = int(m.group(1))
            if v >= s.order:
                raise IndexParseError(f"figure {tok!r} out of range for order {s.order}")
            digits.append(digit_from_value(v, s))
        elif len(tok) == s.dim:
            digits.append(tuple(_read_axis_char(ch, s, text) for ch in tok))
        elif len(tok) == 1:
            if not tok.isdigit() or int(tok) >= s.order:
                raise IndexParseError(f"invalid figure {tok!r} in {text!r}")
            digits.append(digit_from_value(int(tok), s))
        else:
            raise IndexParseError(f"token {tok!r} in {text!r} is not a {s.dim}-axis matrix digit")
    return ScalarIndex(tuple(digits))


def format_cartesian(c: CartesianIndex, s: Scale) -> str:
    """``"011,001"``."""
    return ",".join("".join(_axis_char(a, s) for a in axis) for axis in c.coords)


def format_cartesian_decimal(c: CartesianIndex, s: Scale) -> str:
    """``"3,1"``."""
    return ",".join(str(v) for v in c.values(s))


def parse_cartesian(text: str, s: Scale, level: Optional[int] = None) -> CartesianIndex:
    """Parse ``"011,001"`` (digit form), or ``"3,1"`` when ``level`` is given."""
    parts = [p.strip() for p in text.strip().split(",")]
    if len(parts) != s.dim:
        raise IndexParseError(f"{text!r} has {len(parts)} axes, expected {s.dim}")
    if level is not None:
        try:
            values = [int(p, 10) for p in parts]
        except ValueError:
            raise IndexParseError(f"invalid decimal coordinate in {text!r}") from None
        try:
            return CartesianIndex.from_values(values, level, s)
        except ScaleError as e:
            raise IndexParseError(str(e)) from None
    lengths = {len(p) for p in parts}
    if len(lengths) != 1:
        raise IndexParseError(f"axes of {text!r} have different digit counts")
    coords = tuple(tuple(_read_axis_char(ch, s, text) for ch in p) for p in parts)
    return CartesianIndex(lengths.pop(), coords)
