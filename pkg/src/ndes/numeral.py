"""Numerical sequences, their evaluation, and the numeral systems built on them.

A :class:`NumericalSequence` is a label: root-first figures (matrix-digit
values in radix ``radix ** dim``), optionally followed by fractional figures
and a repeating period.  It only becomes a :class:`Number` when evaluated at
some level ``e``; the number is the exact count of level-``e`` points from
the origin up to (excluding) the point the sequence crosses.  Figure ``i``
(counting from the root, ``i = 0``) contributes ``figure * order ** (e - i)``.
"""

from __future__ import annotations

import enum
import itertools
import re
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from .codec import format_figure, parse_scalar
from .scale import Scale, ScaleError, to_digits


class NumeralError(ValueError):
    pass


class NegativeNumberWarning(UserWarning):
    """A result has a negative count, which has no defined meaning in this
    number model; the signed count is kept as a plain integer."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _minimal_period(period: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period[:p] * (n // p) == period:
            return period[:p]
    return period


@dataclass(frozen=True)
class NumericalSequence:
    """An unevaluated sequence of figures.

    The period is stored canonically: shortest repetend, rotated so that no
    trailing preperiod figure could be absorbed into it.  ``0.1(6)`` and
    ``0.16(6)`` and ``0.1(66)`` are therefore the same sequence.
    """

    scale: Scale
    integer_digits: Tuple[int, ...]
    fractional_digits: Tuple[int, ...] = ()
    period: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        ints = tuple(self.integer_digits)
        frac = tuple(self.fractional_digits)
        period = None if self.period is None else tuple(self.period)
        order = self.scale.order
        for d in itertools.chain(ints, frac, period or ()):
            if not 0 <= d < order:
                raise NumeralError(f"figure {d} out of range [0, {order})")
        if period is not None:
            if not period:
                raise NumeralError("period must be non-empty")
            if not any(period):
                raise NumeralError("an all-zero period is not a period; omit it")
            period = _minimal_period(period)
            while frac and frac[-1] == period[-1]:
                frac = frac[:-1]
                period = period[-1:] + period[:-1]
        object.__setattr__(self, "integer_digits", ints)
        object.__setattr__(self, "fractional_digits", frac)
        object.__setattr__(self, "period", period)

    @property
    def digits(self) -> Tuple[int, ...]:
        return self.integer_digits + self.fractional_digits

    @property
    def point(self) -> int:
        """Number of integer figures; the level just below the point."""
        return len(self.integer_digits)

    @property
    def natural_level(self) -> int:
        """Deepest level carrying a supplied (non-periodic) figure."""
        return max(len(self.digits) - 1, 0)

    def figures(self) -> Iterator[int]:
        """All figures root-first, the period repeated forever, then zeros."""
        yield from self.digits
        if self.period is not None:
            yield from itertools.cycle(self.period)
        else:
            yield from itertools.repeat(0)

    def __str__(self):
        return format_sequence(self)


@dataclass(frozen=True)
class Number:
    """An evaluated sequence: ``count`` points of level ``eval_level``."""

    scale: Scale
    eval_level: int
    count: int

    @property
    def is_negative(self) -> bool:
        return self.count < 0


def evaluate(q: NumericalSequence, e: int) -> Number:
    if e < 0:
        raise NumeralError(f"evaluation level must be >= 0, got {e}")
    order = q.scale.order
    count = 0
    for d in q.digits[: e + 1]:
        count = count * order + d
    # figures that were not supplied down to e are absent, i.e. zero
    count *= order ** max(e + 1 - len(q.digits), 0)
    return Number(q.scale, e, count)


def is_terminal(q: NumericalSequence, e: int) -> bool:
    """True when no information lies below level ``e``."""
    if e < 0:
        raise NumeralError(f"evaluation level must be >= 0, got {e}")
    return q.period is None and not any(q.digits[e + 1:])


def re_evaluate(x: Number, e2: int) -> Number:
    if e2 < 0:
        raise NumeralError(f"evaluation level must be >= 0, got {e2}")
    order = x.scale.order
    if e2 >= x.eval_level:
        return Number(x.scale, e2, x.count * order ** (e2 - x.eval_level))
    q, r = divmod(x.count, order ** (x.eval_level - e2))
    if r:
        raise NumeralError(
            f"count {x.count} at level {x.eval_level} has information below level {e2}"
        )
    return Number(x.scale, e2, q)


def _homogenize(a: Number, b: Number) -> Tuple[Number, Number]:
    if (a.scale.dim, a.scale.radix) != (b.scale.dim, b.scale.radix):
        raise ScaleError("operands live on different scales")
    e = max(a.eval_level, b.eval_level)
    return re_evaluate(a, e), re_evaluate(b, e)


def add(a: Number, b: Number) -> Number:
    a, b = _homogenize(a, b)
    return Number(a.scale, a.eval_level, a.count + b.count)


def sub(a: Number, b: Number) -> Number:
    a, b = _homogenize(a, b)
    out = Number(a.scale, a.eval_level, a.count - b.count)
    if out.is_negative:
        warnings.warn(
            f"{a.count} - {b.count} is negative; negative counts are outside the number model",
            NegativeNumberWarning,
            stacklevel=2,
        )
    return out


def to_sequence(x: Number, point: Optional[int] = None) -> NumericalSequence:
    """The terminal sequence whose evaluation at ``x.eval_level`` is ``x``.

    ``point`` is the number of integer figures (default: all of them); the
    integer part is widened if the count needs more figures.
    """
    if x.count < 0:
        raise NumeralError("a negative count has no sequence form")
    width = x.eval_level + 1
    if point is None:
        point = width
    if not 0 <= point <= width:
        raise NumeralError(f"point {point} outside [0, {width}]")
    figs = to_digits(x.count, x.scale.order, width)
    n_frac = width - point
    cut = len(figs) - n_frac
    return NumericalSequence(x.scale, tuple(figs[:cut]), tuple(figs[cut:]))


def pad_integer(q: NumericalSequence, width: int) -> NumericalSequence:
    """Left-pad the integer figures with zeros up to ``width``.

    Used to line two sequences up at their points before evaluating them,
    as in writing ``001.234`` next to ``011.283``.
    """
    pad = max(width - q.point, 0)
    return NumericalSequence(q.scale, (0,) * pad + q.integer_digits, q.fractional_digits, q.period)


def format_number(x: Number, point: Optional[int] = None) -> str:
    if x.count < 0:
        return "-" + format_number(Number(x.scale, x.eval_level, -x.count), point)
    return format_sequence(to_sequence(x, point))


# -- truncated comparison and the discrete line --------------------------------


def truncate(q: NumericalSequence, t: int) -> NumericalSequence:
    """``q`` with exactly ``t`` fractional figures, the period unrolled."""
    if t < 0:
        raise NumeralError(f"negative truncation depth {t}")
    figs = q.figures()
    ints = tuple(itertools.islice(figs, q.point))
    frac = tuple(itertools.islice(figs, t))
    return NumericalSequence(q.scale, ints, frac)


def compare_truncated(a: NumericalSequence, b: NumericalSequence, t: int) -> Ordering:
    """Order ``a`` and ``b`` as numbers with ``t`` fractional figures.

    Each side is evaluated ``t`` levels below its own point, so sequences
    with different integer widths are still compared by value.
    """
    if (a.scale.dim, a.scale.radix) != (b.scale.dim, b.scale.radix):
        raise ScaleError("sequences live on different scales")
    ca = truncated_count(a, t)
    cb = truncated_count(b, t)
    return Ordering((ca > cb) - (ca < cb))


def truncated_count(q: NumericalSequence, t: int) -> int:
    tq = truncate(q, t)
    return evaluate(tq, tq.point - 1 + t).count if tq.point + t else 0


def points_between(p: int, q: int, x: int, s: Scale) -> int:
    """Points strictly between ``p`` and ``q`` of one level, counted ``x``
    levels deeper on the line."""
    if s.dim != 1:
        raise ScaleError("the discrete line is one-dimensional")
    if p >= q:
        raise NumeralError(f"need p < q, got p={p}, q={q}")
    if x < 0:
        raise NumeralError(f"negative sublevel count {x}")
    return (q - p - 1) * s.radix**x


# -- fractions -------------------------------------------------------------------


def expand_fraction(num: int, den: int, radix: int) -> NumericalSequence:
    """Long division of ``num / den`` in ``radix`` with remainder-cycle
    detection.  The first repeated remainder closes the minimal period."""
    if den == 0:
        raise ZeroDivisionError("expand_fraction with den = 0")
    if num < 0 or den < 0:
        raise NumeralError("expand_fraction takes a non-negative num and positive den")
    s = Scale(1, radix)
    whole, r = divmod(num, den)
    ints = tuple(to_digits(whole, radix) or [0])
    seen = {}
    frac = []
    while r:
        if r in seen:
            start = seen[r]
            return NumericalSequence(s, ints, tuple(frac[:start]), tuple(frac[start:]))
        seen[r] = len(frac)
        d, r = divmod(r * radix, den)
        frac.append(d)
    return NumericalSequence(s, ints, tuple(frac))


# -- bijective numeration --------------------------------------------------------


ALPHA = "α"


@dataclass(frozen=True)
class BijectiveNumeral:
    """Zero-less positional numeral: figures ``1..radix``, most significant
    first.  The top figure (value ``radix``) prints as ``α``."""

    radix: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.radix < 2:
            raise NumeralError(f"radix must be >= 2, got {self.radix}")
        if not self.digits:
            raise NumeralError("a bijective numeral needs at least one figure")
        for d in self.digits:
            if not 1 <= d <= self.radix:
                raise NumeralError(f"figure {d} outside [1, {self.radix}]")

    def __str__(self):
        return "".join(ALPHA if d == self.radix else format_figure(d) for d in self.digits)


def to_bijective(v: int, radix: int) -> BijectiveNumeral:
    if v < 1:
        raise NumeralError(f"{v} has no zero-less representation (only integers >= 1 do)")
    digits = []
    while v:
        v, r = divmod(v - 1, radix)
        digits.append(r + 1)
    return BijectiveNumeral(radix, tuple(reversed(digits)))


def from_bijective(n: BijectiveNumeral) -> int:
    v = 0
    for d in n.digits:
        if d == 0:
            raise NumeralError("zero figure in a bijective numeral")
        v = v * n.radix + d
    return v


def parse_bijective(text: str, radix: int) -> BijectiveNumeral:
    digits = []
    for tok in re.findall(r"\[\d+\]|\S", text.strip()):
        if tok in (ALPHA, "A", "a"):
            digits.append(radix)
        elif tok.startswith("["):
            digits.append(int(tok[1:-1]))
        elif tok.isdigit():
            digits.append(int(tok))
        else:
            raise NumeralError(f"invalid bijective figure {tok!r} in {text!r}")
    if 0 in digits:
        raise NumeralError(f"figure 0 is not part of the zero-less system: {text!r}")
    return BijectiveNumeral(radix, tuple(digits))


# -- text form -----------------------------------------------------------------


_SEQUENCE = re.compile(r"^(?P<int>[^.,()]*)(?:[.,](?P<frac>[^.,()]*))?(?:\((?P<per>[^()]*)\))?$")


def _parse_part(text: str, s: Scale) -> Tuple[int, ...]:
    if not text.strip():
        return ()
    return parse_scalar(text, s).values(s)


def parse_sequence(text: str, s: Scale) -> NumericalSequence:
    """Parse ``"0.1(6)"``-style text; ``","`` works as the point too.

    Figures above 9 are written ``[61]``.  In more than one dimension the
    figures are whitespace separated and may be given in axis form
    (``"00 10 11"``).  A trailing ``"..."`` is ignored.
    """
    body = text.strip()
    if body.endswith("..."):
        body = body[:-3]
    m = _SEQUENCE.match(body)
    if not m or not body:
        raise NumeralError(f"malformed sequence {text!r}")
    try:
        ints = _parse_part(m.group("int"), s)
        frac = _parse_part(m.group("frac") or "", s)
        per = None if m.group("per") is None else _parse_part(m.group("per"), s)
    except ValueError as e:
        raise NumeralError(f"malformed sequence {text!r}: {e}") from None
    return NumericalSequence(s, ints, frac, per)


def format_sequence(q: NumericalSequence) -> str:
    sep = "" if q.scale.dim == 1 else " "

    def part(figs: Sequence[int]) -> str:
        return sep.join(format_figure(d) for d in figs)

    out = part(q.integer_digits)
    if q.fractional_digits or q.period is not None:
        out += "." + part(q.fractional_digits)
    if q.period is not None:
        out += "(" + part(q.period) + ")"
    return out
