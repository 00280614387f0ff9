"""DES trees over labelled grids.

A tree node is either a :class:`Leaf` carrying one payload (an integer label
or ``None`` for an empty point) or an :class:`Internal` node with exactly
``radix ** dim`` children ordered by matrix-digit value.  Trees built here
are condensed: no internal node has children that are all leaves with the
same payload.

Grids are numpy integer arrays of shape ``(radix ** depth,) * dim`` indexed
first axis first; empty cells hold :data:`EMPTY`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

import numpy as np

from .codec import IndexParseError, ScalarIndex, format_scalar, parse_scalar
from .scale import Scale, ScaleError, digit_from_value

EMPTY = -1

Payload = Optional[int]


class TreeError(ValueError):
    pass


class TreeFormatError(TreeError):
    pass


class OverlapError(TreeError):
    pass


class CoverageError(TreeError):
    pass


class Homogeneity(enum.Enum):
    ABSOLUTE = "absolute"
    RELATIVE = "relative"
    HETEROGENEOUS = "heterogeneous"


@dataclass(frozen=True)
class Leaf:
    payload: Payload = None


@dataclass(frozen=True)
class Internal:
    children: Tuple["Node", ...]


Node = Union[Leaf, Internal]


@dataclass(frozen=True)
class DesTree:
    scale: Scale
    root: Node

    def __post_init__(self):
        if self.scale.depth is None:
            raise TreeError("a tree needs a scale with finite depth")


@dataclass(frozen=True, eq=False)
class DenseGrid:
    scale: Scale
    cells: np.ndarray

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=np.int64)
        expected = (self.scale.side,) * self.scale.dim
        if cells.shape != expected:
            raise TreeError(f"grid shape {cells.shape} does not match scale extent {expected}")
        if (cells < EMPTY).any():
            raise TreeError("labels must be non-negative (or EMPTY)")
        object.__setattr__(self, "cells", cells)

    def __eq__(self, other):
        if not isinstance(other, DenseGrid):
            return NotImplemented
        return self.scale == other.scale and np.array_equal(self.cells, other.cells)

    def __getitem__(self, coords) -> Payload:
        v = int(self.cells[tuple(coords)])
        return None if v == EMPTY else v


def _label(v: int) -> Payload:
    return None if v == EMPTY else int(v)


def _blocks(block: np.ndarray, s: Scale) -> Iterator[np.ndarray]:
    """Child blocks in ascending matrix-digit order."""
    step = block.shape[0] // s.radix
    for v in range(s.order):
        axes = digit_from_value(v, s)
        yield block[tuple(slice(a * step, (a + 1) * step) for a in axes)]


def build_from_grid(g: DenseGrid) -> DesTree:
    s = g.scale

    def build(block: np.ndarray) -> Node:
        first = block.flat[0]
        if block.size == 1 or (block == first).all():
            return Leaf(_label(first))
        return Internal(tuple(build(b) for b in _blocks(block, s)))

    return DesTree(s, build(g.cells))


def condense(t: DesTree) -> DesTree:
    order = t.scale.order

    def walk(node: Node) -> Node:
        if isinstance(node, Leaf):
            return node
        if len(node.children) != order:
            raise TreeError(f"internal node has {len(node.children)} children, expected {order}")
        kids = tuple(walk(c) for c in node.children)
        first = kids[0]
        if isinstance(first, Leaf) and all(k == first for k in kids):
            return first
        return Internal(kids)

    return DesTree(t.scale, walk(t.root))


def _walk_path(t: DesTree, x: ScalarIndex) -> Tuple[Node, int]:
    """Follow ``x`` from the root, stopping early at a leaf.

    Returns the node reached and its level.
    """
    s = t.scale
    if x.level > s.depth:
        raise TreeError(f"index level {x.level} is below the terminal level {s.depth}")
    node, level = t.root, 0
    for d in x.digits:
        if isinstance(node, Leaf):
            break
        node = node.children[_digit_slot(d, s)]
        level += 1
    return node, level


def _digit_slot(d, s: Scale) -> int:
    v = 0
    for a in d:
        if not 0 <= a < s.radix:
            raise ScaleError(f"axis digit {a} out of range for radix {s.radix}")
        v = v * s.radix + a
    return v


def classify(t: DesTree, x: ScalarIndex) -> Homogeneity:
    node, level = _walk_path(t, x)
    if isinstance(node, Internal):
        return Homogeneity.HETEROGENEOUS
    if level < t.scale.depth:
        return Homogeneity.ABSOLUTE
    return Homogeneity.RELATIVE


def _uniform_payload(node: Node):
    """Payload shared by every terminal cell under ``node``, else HETEROGENEOUS."""
    if isinstance(node, Leaf):
        return node.payload
    seen = {_uniform_payload(c) for c in node.children}
    if len(seen) == 1:
        return seen.pop()
    return Homogeneity.HETEROGENEOUS


def query(t: DesTree, x: ScalarIndex) -> Union[Payload, Homogeneity]:
    """Payload of the point addressed by ``x``.

    Returns ``Homogeneity.HETEROGENEOUS`` when ``x`` stops at a node whose
    terminal cells do not all share one payload.
    """
    node, _ = _walk_path(t, x)
    return _uniform_payload(node)


def leaves(t: DesTree) -> Iterator[Tuple[ScalarIndex, Payload]]:
    """Depth-first leaf walk, which is ascending scalar-index order."""
    s = t.scale
    digits = [digit_from_value(v, s) for v in range(s.order)]

    def walk(node: Node, path: Tuple) -> Iterator:
        if isinstance(node, Leaf):
            yield ScalarIndex(path), node.payload
        else:
            for d, child in zip(digits, node.children):
                yield from walk(child, path + (d,))

    yield from walk(t.root, ())


def height(t: DesTree) -> int:
    return max(p.level for p, _ in leaves(t))


@dataclass(frozen=True)
class TreeStats:
    absolute: int
    relative: int
    heterogeneous: int
    leaves: int
    terminal_cells: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.terminal_cells, self.leaves)

    def __str__(self):
        r = self.ratio
        ratio = str(r.numerator) if r.denominator == 1 else f"{float(r):.6g}"
        return (
            f"absolute:{self.absolute} relative:{self.relative} "
            f"heterogeneous:{self.heterogeneous} ratio:{ratio}"
        )


def stats(t: DesTree) -> TreeStats:
    counts = {k: 0 for k in Homogeneity}

    def walk(node: Node, level: int):
        if isinstance(node, Internal):
            counts[Homogeneity.HETEROGENEOUS] += 1
            for c in node.children:
                walk(c, level + 1)
        elif level < t.scale.depth:
            counts[Homogeneity.ABSOLUTE] += 1
        else:
            counts[Homogeneity.RELATIVE] += 1

    walk(t.root, 0)
    n_leaves = counts[Homogeneity.ABSOLUTE] + counts[Homogeneity.RELATIVE]
    return TreeStats(
        counts[Homogeneity.ABSOLUTE],
        counts[Homogeneity.RELATIVE],
        counts[Homogeneity.HETEROGENEOUS],
        n_leaves,
        t.scale.points_at(t.scale.depth),
    )


def reconstruct_grid(t: DesTree) -> DenseGrid:
    s = t.scale
    cells = np.empty((s.side,) * s.dim, dtype=np.int64)

    def fill(node: Node, block: np.ndarray):
        if isinstance(node, Leaf):
            block[...] = EMPTY if node.payload is None else node.payload
        else:
            for child, sub in zip(node.children, _blocks(block, s)):
                fill(child, sub)

    fill(t.root, cells)
    return DenseGrid(s, cells)


# -- linear (leaf list) form -------------------------------------------------


def to_linear(t: DesTree) -> str:
    s = t.scale
    lines = [f"des {s.dim} {s.radix} {s.depth}"]
    for path, payload in leaves(t):
        key = format_scalar(path, s) if path.level else "-"
        lines.append(f"{key} {'.' if payload is None else payload}")
    return "\n".join(lines) + "\n"


def _parse_header(line: str, magic: str) -> Scale:
    parts = line.split()
    if len(parts) != 4 or parts[0] != magic:
        raise TreeFormatError(f"expected header '{magic} <dim> <radix> <depth>', got {line!r}")
    try:
        return Scale(*(int(p) for p in parts[1:]))
    except ValueError as e:
        raise TreeFormatError(f"bad header {line!r}: {e}") from None


def _parse_label(tok: str) -> Payload:
    if tok == ".":
        return None
    if not tok.isdigit():
        raise TreeFormatError(f"bad label {tok!r}")
    return int(tok)


def from_linear(text: str) -> DesTree:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise TreeFormatError("empty input")
    s = _parse_header(lines[0], "des")

    # nested dicts: slot -> subtree dict or Leaf
    root: Dict = {}
    root_leaf: Optional[Leaf] = None
    for n, line in enumerate(lines[1:], start=2):
        parts = line.rsplit(None, 1)
        if len(parts) != 2:
            raise TreeFormatError(f"line {n}: malformed record {line!r}")
        try:
            path = parse_scalar(parts[0], s)
        except (IndexParseError, ScaleError) as e:
            raise TreeFormatError(f"line {n}: {e}") from None
        leaf = Leaf(_parse_label(parts[1]))
        if path.level > s.depth:
            raise TreeFormatError(f"line {n}: path deeper than terminal level {s.depth}")
        if path.level == 0:
            if root_leaf is not None or root:
                raise OverlapError(f"line {n}: root record overlaps other records")
            root_leaf = leaf
            continue
        if root_leaf is not None:
            raise OverlapError(f"line {n}: record overlaps the root record")
        node = root
        slots = [_digit_slot(d, s) for d in path.digits]
        for slot in slots[:-1]:
            nxt = node.setdefault(slot, {})
            if isinstance(nxt, Leaf):
                raise OverlapError(f"line {n}: {parts[0]!r} lies inside an earlier leaf")
            node = nxt
        if slots[-1] in node:
            raise OverlapError(f"line {n}: {parts[0]!r} overlaps an earlier record")
        node[slots[-1]] = leaf

    if root_leaf is not None:
        return DesTree(s, root_leaf)
    if not root:
        raise CoverageError("no leaf records")

    def freeze(node: Dict, path: List[int]) -> Node:
        missing = [v for v in range(s.order) if v not in node]
        if missing:
            where = " ".join(str(p) for p in path) or "root"
            raise CoverageError(f"children {missing} of node at {where} are not covered")
        return Internal(tuple(
            node[v] if isinstance(node[v], Leaf) else freeze(node[v], path + [v])
            for v in range(s.order)
        ))

    return condense(DesTree(s, freeze(root, [])))


# -- grid files ----------------------------------------------------------------


def _smallest_radix(side: int) -> Tuple[int, int]:
    """Smallest radix ``b`` with ``side == b ** depth``, and that depth."""
    if side == 1:
        raise TreeError("a 1x1 grid has no radix to infer")
    for b in range(2, side + 1):
        n, k = side, 0
        while n % b == 0:
            n //= b
            k += 1
        if n == 1:
            return b, k
    raise AssertionError("unreachable")


def _depth_for(side: int, radix: int) -> int:
    n, k = side, 0
    while n > 1 and n % radix == 0:
        n //= radix
        k += 1
    if n != 1:
        raise TreeError(f"extent {side} is not a power of radix {radix}")
    return k


def read_pgm(data: bytes, radix: Optional[int] = None) -> DenseGrid:
    """Read a P2 (plain) or P5 (raw) PGM as a 2D grid, gray value = label.

    Without ``radix`` the smallest radix whose power equals the image side is
    used, i.e. the deepest hierarchy the extent allows.
    """
    m = re.match(rb"(P[25])", data)
    if not m:
        raise TreeFormatError("not a P2/P5 PGM file")
    pos = 2
    header = []
    while len(header) < 3:
        tok = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)").match(data, pos)
        if not tok:
            raise TreeFormatError("truncated PGM header")
        header.append(tok.group(1))
        pos = tok.end()
    try:
        width, height, maxval = (int(h) for h in header)
    except ValueError:
        raise TreeFormatError(f"bad PGM header {header}") from None
    if width != height:
        raise TreeError(f"PGM is {width}x{height}; the grid must be square")
    if m.group(1) == b"P2":
        try:
            values = [int(v) for v in data[pos:].split()]
        except ValueError:
            raise TreeFormatError("non-integer PGM sample") from None
    else:
        raw = data[pos + 1:]
        dtype = np.dtype(">u2") if maxval > 255 else np.uint8
        values = np.frombuffer(raw, dtype=dtype, count=width * height).tolist()
    if len(values) != width * height:
        raise TreeFormatError(f"PGM has {len(values)} samples, expected {width * height}")
    if radix is None:
        radix, depth = _smallest_radix(width)
    else:
        depth = _depth_for(width, radix)
    cells = np.array(values, dtype=np.int64).reshape(height, width)
    return DenseGrid(Scale(2, radix, depth), cells)


def write_pgm(g: DenseGrid) -> bytes:
    """Canonical P2: maxval 255 (65535 if needed), one image row per line."""
    if g.scale.dim != 2:
        raise TreeError("PGM output needs a 2D grid")
    if (g.cells == EMPTY).any():
        raise TreeError("PGM cannot hold empty cells; use the grid text format")
    top = int(g.cells.max())
    if top > 65535:
        raise TreeError(f"label {top} does not fit in a PGM sample")
    maxval = 255 if top <= 255 else 65535
    side = g.scale.side
    rows = "\n".join(" ".join(str(v) for v in row) for row in g.cells.tolist())
    return f"P2\n{side} {side}\n{maxval}\n{rows}\n".encode("ascii")


def read_grid_text(text: str) -> DenseGrid:
    tokens = text.split()
    if len(tokens) < 4:
        raise TreeFormatError("missing 'grid <dim> <radix> <depth>' header")
    s = _parse_header(" ".join(tokens[:4]), "grid")
    labels = [_parse_label(tok) for tok in tokens[4:]]
    if len(labels) != s.points_at(s.depth):
        raise TreeError(f"grid has {len(labels)} cells, expected {s.points_at(s.depth)}")
    cells = np.array([EMPTY if v is None else v for v in labels], dtype=np.int64)
    return DenseGrid(s, cells.reshape((s.side,) * s.dim))


def write_grid_text(g: DenseGrid) -> str:
    s = g.scale
    rows = g.cells.reshape(-1, s.side).tolist()
    body = "\n".join(" ".join("." if v == EMPTY else str(v) for v in row) for row in rows)
    return f"grid {s.dim} {s.radix} {s.depth}\n{body}\n"
