"""Command-line front end.

    steinhaus render triangle 0010100
    steinhaus basis rst 10 --l 0,0,0,0
    steinhaus enum dst 6 --format json
    steinhaus verify all --cap 12
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from steinhaus import graph, oracle, pascal, subspace
from steinhaus.gf2core import BinSeq
from steinhaus.subspace import SymClass
from steinhaus.triangle import Triangle

TRIANGLE_SPACES = {"st": SymClass.FULL, "hst": SymClass.H, "rst": SymClass.R,
                   "dst": SymClass.D, "dst0": SymClass.D0}
PASCAL_SPACES = {"hpt": SymClass.H, "rpt": SymClass.R, "dpt": SymClass.D}
GRAPH_SPACES = ("esg", "prsg")
SPACES = tuple(TRIANGLE_SPACES) + tuple(PASCAL_SPACES) + GRAPH_SPACES


class UsageError(Exception):
    pass


def _bits(text: str) -> BinSeq:
    try:
        return BinSeq.from_str(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _pick(positional, flag, name):
    if positional is not None and flag is not None and positional != flag:
        raise UsageError(f"conflicting values for {name}: {positional!r} and {flag!r}")
    value = positional if positional is not None else flag
    if value is None:
        raise UsageError(f"missing {name}")
    return value


def _space_and_n(args) -> tuple[str, int]:
    space = _pick(args.space_pos, args.space, "space").lower()
    if space not in SPACES:
        raise UsageError(f"unknown space {space!r}; choose from {', '.join(SPACES)}")
    raw = _pick(args.n_pos, args.n, "n")
    try:
        n = int(raw)
    except (TypeError, ValueError):
        raise UsageError(f"n must be an integer, got {raw!r}") from None
    if n < 0:
        raise UsageError("n must be non-negative")
    if n == 0 and space not in TRIANGLE_SPACES:
        raise UsageError(f"{space} needs n >= 1")
    return space, n


def _l_params(text):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--l takes comma-separated integers, got {text!r}") from None


def cmd_render(args, out) -> int:
    kind, inputs = args.kind, args.inputs
    if kind == "pascal":
        if len(inputs) != 2:
            raise UsageError("pascal needs two sides: LEFT RIGHT")
        try:
            obj = pascal.PascalTriangle(_bits(inputs[0]), _bits(inputs[1]))
        except ValueError as e:
            raise UsageError(str(e)) from None
    else:
        if len(inputs) != 1:
            raise UsageError(f"{kind} takes one bitstring")
        s = _bits(inputs[0])
        obj = Triangle(s) if kind == "triangle" else graph.SteinhausGraph(s)
    if args.format == "json":
        if kind == "triangle":
            print(obj.to_json(with_rows=True), file=out)
        elif kind == "matrix":
            print(json.dumps({"order": obj.order, "matrix": graph.adjacency_matrix(obj)}), file=out)
        else:
            print(obj.to_json(), file=out)
        return 0
    if kind == "triangle":
        text = obj.render()
    elif kind == "pascal":
        text = obj.render()
    elif kind == "matrix":
        text = obj.render_matrix()
    else:
        text = " ".join(f"{i}-{j}" for i, j in obj.edges())
    if text:
        print(text, file=out)
    return 0


def _elements(space: str, n: int, l):
    """The basis object and one display line per element."""
    if space in TRIANGLE_SPACES:
        cls = TRIANGLE_SPACES[space]
        try:
            b = subspace.basis(cls, n, l)
        except ValueError as e:
            raise UsageError(str(e)) from None
        return b, [str(t.first_row) for t in b.elements]
    if space in PASCAL_SPACES:
        try:
            ps = pascal.basis_pt(PASCAL_SPACES[space], n, l)
        except ValueError as e:
            raise UsageError(str(e)) from None
        return ps, [f"{p.left} {p.right}" for p in ps]
    gb = graph.basis_esg(n) if space == "esg" else graph.basis_prsg(n)
    return gb, [str(g.seq) for g in gb.graphs]


def cmd_basis(args, out) -> int:
    space, n = _space_and_n(args)
    l = _l_params(args.l)
    if l is not None and space not in ("rst", "rpt"):
        raise UsageError("--l applies only to rst and rpt")
    obj, lines = _elements(space, n, l)
    if args.format == "json":
        if space in PASCAL_SPACES:
            d = {"class": space.upper(), "n": n, "elements": [p.to_dict() for p in obj]}
        else:
            d = obj.to_dict()
        print(json.dumps(d), file=out)
        return 0
    print(f"space={space} n={n} dim={len(lines)}", file=out)
    for line in lines:
        print(line, file=out)
    return 0


def cmd_enum(args, out) -> int:
    space, n = _space_and_n(args)
    l = _l_params(args.l)
    if l is not None and space not in ("rst", "rpt"):
        raise UsageError("--l applies only to rst and rpt")
    obj, _ = _elements(space, n, l)
    if space in TRIANGLE_SPACES:
        vecs = [t.first_row.bits for t in obj.elements]
        width, key = n, "first_row"
    elif space in PASCAL_SPACES:
        vecs = [pascal.side_vector(p) for p in obj]
        width, key = None, None
    else:
        vecs = [g.seq.bits for g in obj.graphs]
        width, key = n - 1, "seq"
    d = len(vecs)
    if d > subspace.ENUM_MAX_DIM:
        print(f"error: dimension {d} exceeds the enumeration guard {subspace.ENUM_MAX_DIM}",
              file=sys.stderr)
        return 2
    records = []
    for combo in itertools.product((0, 1), repeat=d):
        acc = 0
        for c, v in zip(combo, vecs):
            if c:
                acc ^= v
        coords = "".join(map(str, combo))
        if width is None:
            left = BinSeq(n, acc & ((1 << n) - 1))
            right = BinSeq(n, ((acc >> n) << 1) | left.bit(1))
            records.append({"coords": coords, "left": str(left), "right": str(right)})
        else:
            records.append({"coords": coords, key: str(BinSeq(width, acc))})
    if args.format == "json":
        print(json.dumps({"space": space, "n": n, "dim": d, "members": records}), file=out)
    else:
        for r in records:
            print(" ".join(f"{k}={v}" for k, v in r.items()), file=out)
    return 0


SUITES = ("dims", "bases", "graphs", "gensets", "all")


def cmd_verify(args, out) -> int:
    suite = args.suite
    cap = args.cap
    if cap is not None and cap < 0:
        raise UsageError("--cap must be non-negative")
    rep = oracle.Report()
    try:
        if suite in ("dims", "all"):
            rep.extend(oracle.verify_dims(14 if cap is None else min(cap, oracle.MAX_SEQ)))
        if suite in ("bases", "all"):
            rep.extend(oracle.verify_bases(14 if cap is None else min(cap, oracle.MAX_SEQ)))
        if suite in ("graphs", "all"):
            rep.extend(oracle.verify_graph_iso(oracle.MAX_GRAPH if cap is None
                                               else min(cap, oracle.MAX_GRAPH)))
        if suite in ("gensets", "all"):
            rep.extend(oracle.verify_gensets(oracle.MAX_GENSET if cap is None
                                             else min(cap, oracle.MAX_GENSET)))
    except AssertionError as e:
        rep.check(False, "gensets", "agreement", str(e))
    print(rep, file=out)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="steinhaus",
                                description="Symmetric Steinhaus triangles, graphs and Pascal triangles.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="draw a triangle, Pascal triangle, graph or adjacency matrix")
    r.add_argument("kind", choices=("triangle", "pascal", "graph", "matrix"))
    r.add_argument("inputs", nargs="*", default=[""], metavar="BITS")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_render)

    for name, func, text in (("basis", cmd_basis, "list a basis"),
                             ("enum", cmd_enum, "list every member with its coordinates")):
        q = sub.add_parser(name, help=text)
        q.add_argument("space_pos", nargs="?", metavar="SPACE")
        q.add_argument("n_pos", nargs="?", metavar="N")
        q.add_argument("--space")
        q.add_argument("--n")
        q.add_argument("--l", help="comma-separated row offsets (rst, rpt)")
        q.add_argument("--format", choices=("text", "json"), default="text")
        q.set_defaults(func=func)

    v = sub.add_parser("verify", help="run brute-force oracle suites")
    v.add_argument("suite", nargs="?", choices=SUITES, default="all")
    v.add_argument("--cap", type=int, help="largest size scanned")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, sys.stdout)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
