"""Command line front end.

Exit codes: 0 ok, 2 input error, 3 method unavailable, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import verify
from .contfrac import (
    CFSpecError,
    GeneralCF,
    NegativeCF,
    TreeCFSpec,
    cf_from_json,
    chain_spec,
    convergents,
    eval_bottom_up,
    eval_negative_ring_cf,
    eval_tree_cf,
    radial_spec,
)
from .families import (
    CaterpillarBondParams,
    RingParams,
    caterpillar_bond,
    caterpillar_bond_cf,
    comb_cyclic,
    comb_to_caterpillar_bond,
    cycle_graph,
    cycle_to_caterpillar_bond,
    naphthalene_fixture,
    path_graph,
    ring_graph,
    ring_sequence,
    tree_of_spec,
)
from .multigraph import GraphError, Multigraph, parse_hgraph, to_hgraph
from .oracle import hosoya

EXIT_INPUT = 2
EXIT_CAPABILITY = 3
EXIT_MISMATCH = 4


class InputError(Exception):
    pass


class CapabilityError(Exception):
    pass


@dataclass
class Family:
    label: str
    graph: Multigraph
    cf_numerator: Callable[[], int] | None = None


def _fields(kind: str, body: str, names: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in filter(None, body.split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"{kind}: expected key=value, got {item!r}")
        if key not in names:
            raise InputError(f"{kind}: unknown field {key!r}")
        out[key] = value
    missing = [n for n in names if n not in out]
    if missing:
        raise InputError(f"{kind}: missing field {missing[0]!r}")
    return out


def _int(kind: str, name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{kind}: field {name!r} must be an integer, got {text!r}") from None


def _int_list(kind: str, name: str, text: str) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(_int(kind, name, t) for t in text.split(","))


def load_cf_file(path: str | Path) -> GeneralCF | TreeCFSpec | NegativeCF:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
    try:
        return cf_from_json(data)
    except CFSpecError as exc:
        raise InputError(f"{path}: {exc}") from None


def _as_tree(spec: GeneralCF | TreeCFSpec | NegativeCF, path: str) -> TreeCFSpec:
    if isinstance(spec, GeneralCF):
        return chain_spec(spec)
    if isinstance(spec, TreeCFSpec):
        return spec
    raise InputError(f"{path}: a negative fraction cannot be a graph blueprint")


def _cf_route(p: CaterpillarBondParams) -> Callable[[], int]:
    cf = caterpillar_bond_cf(p)
    return lambda: convergents(cf)[-1].p


def parse_family(text: str) -> Family:
    """Build a family from ``kind:fields``, e.g. ``ring:n=3,m=1,r=2,s=1``."""
    kind, _, body = text.partition(":")
    try:
        if kind == "path":
            n = _int(kind, "n", _fields(kind, body, ["n"])["n"])
            g = path_graph(n)
            return Family(text, g, _cf_route(CaterpillarBondParams((1,) * n, (1,) * (n - 1))))
        if kind == "cycle":
            n = _int(kind, "n", _fields(kind, body, ["n"])["n"])
            g = cycle_graph(n)
            return Family(text, g, _cf_route(cycle_to_caterpillar_bond(n)))
        if kind == "dbond":
            parts = {}
            for item in body.split(";"):
                key, sep, value = item.partition("=")
                if not sep or key not in ("xs", "ys"):
                    raise InputError(f"dbond: bad field {item!r} (expected xs=... ; ys=...)")
                parts[key] = _int_list(kind, key, value)
            if "xs" not in parts:
                raise InputError("dbond: missing field 'xs'")
            p = CaterpillarBondParams(parts["xs"], parts.get("ys", ()))
            return Family(text, caterpillar_bond(p), _cf_route(p))
        if kind == "comb":
            f = _fields(kind, body, ["n", "a", "b"])
            n, a, b = (_int(kind, k, f[k]) for k in "nab")
            g = comb_cyclic(n, a, b)
            return Family(text, g, _cf_route(comb_to_caterpillar_bond(n, a, b)))
        if kind == "ring":
            f = _fields(kind, body, ["n", "m", "r", "s"])
            p = RingParams(*(_int(kind, k, f[k]) for k in "nmrs"))
            return Family(text, ring_graph(p), lambda: eval_negative_ring_cf(p.M, p.rs, p.n).p)
        if kind == "radial":
            f = _fields(kind, body, ["m", "part"])
            m = _int(kind, "m", f["m"])
            spec = radial_spec(m, _as_tree(load_cf_file(f["part"]), f["part"]))
            return Family(text, tree_of_spec(spec), lambda: eval_tree_cf(spec).num)
        if kind == "tree":
            if not body:
                raise InputError("tree: missing spec file")
            spec = _as_tree(load_cf_file(body), body)
            return Family(text, tree_of_spec(spec), lambda: eval_tree_cf(spec).num)
        if kind == "naphthalene":
            if body:
                raise InputError("naphthalene: takes no fields")
            return Family(text, naphthalene_fixture())
    except (ValueError, GraphError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{kind}: {exc}") from None
    raise InputError(f"unknown family {kind!r}")


def load_input(text: str) -> Family:
    """An existing hgraph file, otherwise a family spec."""
    path = Path(text)
    if path.is_file():
        try:
            return Family(text, parse_hgraph(path.read_text()))
        except GraphError as exc:
            raise InputError(f"{text}: {exc}") from None
    return parse_family(text)


def parse_range(text: str) -> list[int]:
    """``"1..4"`` -> ``[1, 2, 3, 4]``; a single integer is a one-element range."""
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return [int(lo)]
        return list(range(int(lo), int(hi) + 1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None


# -- commands ------------------------------------------------------------------


def cmd_build(args) -> int:
    fam = load_input(args.spec)
    text = to_hgraph(fam.graph)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_z(args) -> int:
    fam = load_input(args.input)
    if args.method != "oracle" and fam.cf_numerator is None:
        raise CapabilityError(f"no continued fraction route for {args.input!r}")
    if args.method == "oracle":
        print(hosoya(fam.graph))
    elif args.method == "cf":
        print(fam.cf_numerator())
    else:
        z, c = hosoya(fam.graph), fam.cf_numerator()
        print(z, c)
        if z != c:
            print(f"mismatch: oracle {z} != continued fraction {c}", file=sys.stderr)
            return EXIT_MISMATCH
    return 0


def cmd_cf(args) -> int:
    spec = load_cf_file(args.spec)
    kinds = {"general": GeneralCF, "negative": NegativeCF, "tree": TreeCFSpec}
    if args.mode != "auto" and not isinstance(spec, kinds[args.mode]):
        raise InputError(f"{args.spec}: not a {args.mode} continued fraction")
    if isinstance(spec, GeneralCF):
        print(eval_bottom_up(spec))
        for k, c in enumerate(convergents(spec)):
            print(k, c.p, c.q)
    elif isinstance(spec, NegativeCF):
        print(spec.evaluate())
    else:
        print(eval_tree_cf(spec))
    return 0


def cmd_seq(args) -> int:
    if args.count < 1:
        raise InputError(f"count must be >= 1, got {args.count}")
    try:
        p = RingParams(1, args.m, args.r, args.s)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for u in ring_sequence(p.M, p.rs, args.count):
        print(u)
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "lemma1":
        rows = verify.lemma1(args.max_spine, args.max_x, args.max_y, args.samples, args.seed)
    elif suite == "lemma2":
        rows = verify.lemma2(args.max_vertices, args.max_mult, args.samples, args.seed)
    elif suite == "theorem1":
        rows = verify.theorem1(args.n or parse_range("1..4"), args.m or parse_range("0..2"),
                               args.r or parse_range("1..3"), args.s or parse_range("1..3"))
    elif suite == "remark2":
        rows = verify.remark2(args.n or parse_range("2..6"), args.m or parse_range("0..3"),
                              args.r or parse_range("1..4"), args.s or parse_range("1..4"))
    elif suite == "radial":
        part = None
        if args.part:
            part = _as_tree(load_cf_file(args.part), args.part)
        rows = verify.radial(args.m or parse_range("1..10"), part)
    else:
        comb = []
        if args.comb_n:
            comb = [(n, a, b) for n in args.comb_n for a in args.comb_a for b in args.comb_b]
        rows = verify.transforms(args.cycle_n or parse_range("3..12"), comb)
    total = failed = 0
    for row in rows:
        print(row.format())
        total += 1
        failed += not row.ok
    print(f"{total - failed}/{total} passed")
    return EXIT_MISMATCH if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hosoya", description="Hosoya indices by matching oracle and continued fractions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a family as an hgraph file")
    p.add_argument("spec", help="family spec, e.g. ring:n=3,m=1,r=2,s=1")
    p.add_argument("-o", "--output", help="output file (default: standard output)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("z", help="print the Hosoya index")
    p.add_argument("input", help="hgraph file or family spec")
    p.add_argument("--method", choices=["oracle", "cf", "both"], default="oracle")
    p.set_defaults(func=cmd_z)

    p = sub.add_parser("cf", help="evaluate a continued fraction spec file")
    p.add_argument("spec", help="JSON spec file")
    p.add_argument("--mode", choices=["auto", "general", "negative", "tree"], default="auto")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("seq", help="ring sequence u_0 .. u_{count-1}")
    p.add_argument("family", nargs="?", choices=["ring"], default="ring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--count", type=int, default=11)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--n", type=parse_range)
    p.add_argument("--m", type=parse_range)
    p.add_argument("--r", type=parse_range)
    p.add_argument("--s", type=parse_range)
    p.add_argument("--max-spine", type=int, default=5)
    p.add_argument("--max-x", type=int, default=3)
    p.add_argument("--max-y", type=int, default=3)
    p.add_argument("--max-vertices", type=int, default=10)
    p.add_argument("--max-mult", type=int, default=18)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--part", help="radial part spec file (default: 2+2/(3+3/3))")
    p.add_argument("--cycle-n", type=parse_range)
    p.add_argument("--comb-n", type=parse_range)
    p.add_argument("--comb-a", type=parse_range, default=parse_range("0..3"))
    p.add_argument("--comb-b", type=parse_range, default=parse_range("1..3"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
