"""Command-line interface: ``ndes convert | eval | tree | number``.

Results go to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when the operation fails and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from typing import List, Optional

from . import codec, numeral, tree
from .scale import Scale


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _write(path: Optional[str], data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as f:
            f.write(data)


def _scale(args) -> Scale:
    return Scale(args.dim, args.radix)


# -- convert / eval ------------------------------------------------------------


def cmd_convert(args) -> List[str]:
    s = _scale(args)
    if args.to_cartesian:
        x = codec.parse_scalar(args.index, s)
        c = codec.deinterleave(x, s)
        out = [f"{codec.format_cartesian(c, s)} ({codec.format_cartesian_decimal(c, s)})"]
        if args.verbose:
            out.append(f"level {c.level}")
        return out
    c = codec.parse_cartesian(args.index, s, args.level)
    x = codec.interleave(c, s)
    out = [codec.format_scalar_values(x, s)]
    if args.verbose:
        out.append(f"axis form: {codec.format_scalar(x, s)}")
        out.append(f"level {x.level}")
    return out


def cmd_eval(args) -> List[str]:
    s = _scale(args)
    q = numeral.parse_sequence(args.sequence, s)
    level = q.natural_level if args.level is None else args.level
    x = numeral.evaluate(q, level)
    flag = "terminal" if numeral.is_terminal(q, level) else "non-terminal"
    out = [f"{x.count} {flag}"]
    if args.verbose:
        out.append(f"level {x.eval_level}")
        out.append(f"sequence {numeral.format_sequence(q)}")
    return out


# -- tree ----------------------------------------------------------------------


def _load_grid(args) -> tree.DenseGrid:
    data = _read_bytes(args.input)
    if data.lstrip().startswith(b"grid"):
        g = tree.read_grid_text(data.decode("ascii"))
    elif data.startswith((b"P2", b"P5")):
        if args.dim not in (None, 2):
            raise tree.TreeError("PGM input is two-dimensional")
        g = tree.read_pgm(data, args.radix)
    else:
        raise tree.TreeFormatError(f"{args.input}: neither a PGM nor a 'grid' text file")
    for name in ("dim", "radix", "depth"):
        want = getattr(args, name, None)
        if want is not None and want != getattr(g.scale, name):
            raise tree.TreeError(f"--{name} {want} disagrees with the input ({getattr(g.scale, name)})")
    return g


def _load_tree(path: str) -> tree.DesTree:
    return tree.from_linear(_read_bytes(path).decode("ascii"))


def cmd_tree(args) -> List[str]:
    if args.tree_cmd == "build":
        t = tree.build_from_grid(_load_grid(args))
        _write(args.output, tree.to_linear(t).encode("ascii"))
        return []
    t = _load_tree(args.tree)
    if args.tree_cmd == "stats":
        st = tree.stats(t)
        out = [str(st)]
        if args.verbose:
            out.append(f"leaves:{st.leaves} terminal_cells:{st.terminal_cells}")
        return out
    if args.tree_cmd == "query":
        x = codec.parse_scalar(args.index, t.scale)
        value = tree.query(t, x)
        if value is tree.Homogeneity.HETEROGENEOUS:
            out = ["heterogeneous"]
        else:
            out = ["." if value is None else str(value)]
        if args.verbose:
            out.append(tree.classify(t, x).value)
        return out
    # expand
    g = tree.reconstruct_grid(t)
    fmt = args.format
    if fmt is None:
        fmt = "pgm" if t.scale.dim == 2 and not (g.cells == tree.EMPTY).any() else "grid"
    data = tree.write_pgm(g) if fmt == "pgm" else tree.write_grid_text(g).encode("ascii")
    _write(args.output, data)
    return []


# -- number ------------------------------------------------------------------


def _operands(args):
    s = _scale(args)
    a = numeral.parse_sequence(args.a, s)
    b = numeral.parse_sequence(args.b, s)
    point = max(a.point, b.point)
    a, b = numeral.pad_integer(a, point), numeral.pad_integer(b, point)
    return point, numeral.evaluate(a, a.natural_level), numeral.evaluate(b, b.natural_level)


def cmd_number(args) -> List[str]:
    sub = args.number_cmd
    if sub in ("add", "sub"):
        point, a, b = _operands(args)
        if sub == "add":
            x = numeral.add(a, b)
        else:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", numeral.NegativeNumberWarning)
                x = numeral.sub(a, b)
            for w in caught:
                print(f"note: {w.message}", file=sys.stderr)
        out = [numeral.format_number(x, point)]
        if args.verbose:
            out.append(f"count {x.count} at level {x.eval_level}")
        return out
    if sub == "bijective":
        if args.to is not None:
            return [str(numeral.to_bijective(args.to, args.radix))]
        return [str(numeral.from_bijective(numeral.parse_bijective(args.from_, args.radix)))]
    if sub == "fraction":
        q = numeral.expand_fraction(args.num, args.den, args.radix)
        out = [numeral.format_sequence(q)]
        if args.verbose:
            plen = 0 if q.period is None else len(q.period)
            out.append(f"preperiod {len(q.fractional_digits)} period {plen}")
        return out
    if sub == "between":
        return [str(numeral.points_between(args.p, args.q, args.sublevels, Scale(1, args.radix)))]
    # compare
    s = _scale(args)
    a = numeral.parse_sequence(args.a, s)
    b = numeral.parse_sequence(args.b, s)
    order = numeral.compare_truncated(a, b, args.digits)
    out = [order.name.lower()]
    if args.verbose:
        out.append(
            f"{numeral.truncated_count(a, args.digits)} vs {numeral.truncated_count(b, args.digits)}"
        )
    return out


# -- parser ----------------------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ndes", description="Discrete Euclidean space indexing and numerals.")
    sub = p.add_subparsers(dest="cmd", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="print extra detail lines")

    def scale_args(sp, dim_default=None):
        if dim_default is None:
            sp.add_argument("--dim", type=int, required=True, help="number of axes")
        else:
            sp.add_argument("--dim", type=int, default=dim_default,
                            help=f"number of axes (default {dim_default})")
        sp.add_argument("--radix", type=int, required=True, help="subdivisions per axis per level")

    c = sub.add_parser("convert", parents=[common], help="scalar <-> Cartesian index conversion")
    direction = c.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-cartesian", action="store_true", help='scalar text such as "00 10 11"')
    direction.add_argument("--to-scalar", action="store_true", help='Cartesian text such as "011,001"')
    scale_args(c)
    c.add_argument("--level", type=_nonneg,
                   help='with --to-scalar, read decimal coordinates such as "3,1" at this level')
    c.add_argument("index")
    c.set_defaults(func=cmd_convert)

    e = sub.add_parser("eval", parents=[common], help="evaluate a numerical sequence")
    scale_args(e)
    e.add_argument("--level", type=_nonneg,
                   help="evaluation level (default: level of the last written figure)")
    e.add_argument("sequence", help='e.g. "021", "02011,5738", "0.1(6)", "00 10 11"')
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("tree", help="build, inspect and expand DES trees")
    tsub = t.add_subparsers(dest="tree_cmd", required=True)
    b = tsub.add_parser("build", parents=[common], help="grid (PGM or 'grid' text) -> linear tree")
    b.add_argument("input", help="PGM (P2/P5) or grid text file, '-' for stdin")
    b.add_argument("-o", "--output", help="output file (default stdout)")
    b.add_argument("--dim", type=int, help="checked against the input")
    b.add_argument("--radix", type=int,
                   help="radix for PGM input (default: smallest radix whose power is the side)")
    b.add_argument("--depth", type=int, help="checked against the input")
    st = tsub.add_parser("stats", parents=[common], help="homogeneity counts and compression ratio")
    st.add_argument("tree", nargs="?", default="-", help="linear tree file (default stdin)")
    q = tsub.add_parser("query", parents=[common], help="payload at a scalar index")
    q.add_argument("tree", help="linear tree file, '-' for stdin")
    q.add_argument("index", help='scalar index such as "00 10", or "-" for the root')
    x = tsub.add_parser("expand", parents=[common], help="linear tree -> grid")
    x.add_argument("tree", nargs="?", default="-", help="linear tree file (default stdin)")
    x.add_argument("-o", "--output", help="output file (default stdout)")
    x.add_argument("--format", choices=["pgm", "grid"],
                   help="default: pgm for 2D trees without empty cells, else grid")
    t.set_defaults(func=cmd_tree)

    n = sub.add_parser("number", help="numeral operations")
    nsub = n.add_subparsers(dest="number_cmd", required=True)
    for name, text in (("add", "sum"), ("sub", "difference")):
        sp = nsub.add_parser(name, parents=[common], help=f"{text} of two terminal sequences")
        scale_args(sp, dim_default=1)
        sp.add_argument("a")
        sp.add_argument("b")
    bj = nsub.add_parser("bijective", parents=[common], help="zero-less numeration")
    bj.add_argument("--radix", type=int, required=True)
    which = bj.add_mutually_exclusive_group(required=True)
    which.add_argument("--to", type=int, metavar="N", help="render the integer N")
    which.add_argument("--from", dest="from_", metavar="TEXT", help="read a numeral such as 9α or 9A")
    fr = nsub.add_parser("fraction", parents=[common], help="periodic expansion of num/den")
    fr.add_argument("--radix", type=int, required=True)
    fr.add_argument("num", type=_nonneg)
    fr.add_argument("den", type=int)
    bt = nsub.add_parser("between", parents=[common], help="points strictly between p and q, x levels deeper")
    bt.add_argument("--radix", type=int, required=True)
    bt.add_argument("--p", type=int, required=True)
    bt.add_argument("--q", type=int, required=True)
    bt.add_argument("--sublevels", type=_nonneg, required=True)
    cp = nsub.add_parser("compare", parents=[common], help="compare sequences truncated to --digits fractional figures")
    scale_args(cp, dim_default=1)
    cp.add_argument("--digits", type=_nonneg, required=True)
    cp.add_argument("a")
    cp.add_argument("b")
    n.set_defaults(func=cmd_number)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines = args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as e:
        print(f"ndes: error: {e}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
