"""Command-line interface.

Exit codes: 0 pass / SAT / true, 1 fail / UNSAT / false, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import families as fam
from .claims import run_claims
from .discharging import TARGET, discharge_graph, enumerate_profiles
from .errors import PackpaintError
from .formats import (
    format_coloring,
    format_edge_list,
    format_graph_json,
    format_list_coloring,
    format_lists,
    parse_graph,
    parse_lists,
    parse_partial_coloring,
    parse_coloring,
    parse_spec,
)
from .graph import ACYCLIC, girth, power
from .listcolor import adversarial_T3_assignment, bad_copy_census, heawood_pipeline, solve_list, thm41_pipeline, thm42_pipeline
from .metrics import mad_exact
from .reducibility import Kind, apply_reduction, find_configurations
from .solver import PackingSpec, count, solve, verify

OK, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _graph(path: str):
    return parse_graph(_read(path))


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(text)


def _spec(args) -> PackingSpec:
    if args.spec is not None:
        return parse_spec(args.spec)
    if args.ones is None and args.twos is None:
        raise UsageError("give --spec or --ones/--twos")
    return PackingSpec.ones_twos(args.ones or 0, args.twos or 0)


def _forced(items) -> dict[int, int]:
    out = {}
    for item in items or []:
        v, sep, c = item.partition("=")
        if not sep or not v.strip().isdigit() or not c.strip().lstrip("-").isdigit():
            raise UsageError(f"--force expects v=c, got {item!r}")
        out[int(v)] = int(c)
    return out


# ------------------------------------------------------------ gen


def _generate(args) -> fam.LabeledGraph:
    name = args.family
    rng = random.Random(args.seed)
    n, k = args.n, args.k
    simple = {
        "F": lambda: fam.family_F(args.ell, k),
        "F0": lambda: fam.family_F0(args.ell, k),
        "F1": lambda: fam.family_F1(k),
        "F2": lambda: fam.family_F2(k),
        "F3": lambda: fam.family_F3(k),
        "F4": lambda: fam.family_F4(k),
        "H11": fam.gadget_H11,
        "H21": lambda: fam.family_H21(args.cycle_len),
        "H1": lambda: fam.family_H1(args.cycle_len),
        "T2": lambda: fam.family_T2(k),
        "T3": lambda: fam.family_T3(k),
        "random-gnm": lambda: fam.LabeledGraph(fam.random_gnm(n, args.m, rng)),
        "random-tree": lambda: fam.LabeledGraph(fam.random_tree(n, rng)),
        "random-cubic": lambda: fam.LabeledGraph(fam.random_cubic(n, rng)),
        "random-sparse": lambda: fam.LabeledGraph(fam.random_sparse(n, Fraction(args.bound), rng)),
    }
    if name in simple:
        return simple[name]()
    try:
        return fam.named(name, n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_gen(args) -> int:
    lg = _generate(args)
    if args.format == "json":
        print(format_graph_json(lg))
    else:
        sys.stdout.write(format_edge_list(lg.graph))
    return OK


# ------------------------------------------------------------ solving


def cmd_solve(args) -> int:
    g = _graph(args.graph).graph
    spec = _spec(args)
    forced = _forced(args.force)
    if args.count:
        total = count(g, spec, forced)
        _emit(args, str(total), {"spec": str(spec), "count": total})
        return OK if total else NO
    result = solve(g, spec, forced, workers=args.threads)
    if result:
        text = format_coloring(result, len(spec))
        _emit(args, f"SAT {spec}\n{text}", {"verdict": "SAT", "spec": str(spec), **json.loads(text)})
        return OK
    _emit(args, f"UNSAT {spec} nodes={result.nodes}", {"verdict": "UNSAT", "spec": str(spec), "nodes": result.nodes})
    return NO


def cmd_solve_list(args) -> int:
    g = _graph(args.graph).graph
    lists = parse_lists(_read(args.lists), g.n)
    result = solve_list(g, lists)
    if result:
        text = format_list_coloring(result)
        _emit(args, f"SAT\n{text}", {"verdict": "SAT", **json.loads(text)})
        return OK
    _emit(args, "UNSAT", {"verdict": "UNSAT", "nodes": result.nodes})
    return NO


def cmd_verify(args) -> int:
    g = _graph(args.graph).graph
    spec = _spec(args)
    coloring = parse_coloring(_read(args.coloring), g.n)
    ok = verify(g, spec, coloring)
    _emit(args, "valid" if ok else "invalid", {"valid": ok})
    return OK if ok else NO


# ------------------------------------------------------------ measures


def cmd_mad(args) -> int:
    g = _graph(args.graph).graph
    cert = mad_exact(g)
    value = cert.density
    text = f"{value.numerator}/{value.denominator}\n" + " ".join(map(str, sorted(cert.vertices)))
    data = {"mad": f"{value.numerator}/{value.denominator}", "certificate": sorted(cert.vertices)}
    if args.below is not None:
        below = value < Fraction(args.below)
        _emit(args, f"{text}\nbelow {args.below}: {below}", {**data, "below": below})
        return OK if below else NO
    _emit(args, text, data)
    return OK


def cmd_girth(args) -> int:
    g = _graph(args.graph).graph
    value = girth(g)
    shown = "acyclic" if value is ACYCLIC else str(value)
    _emit(args, shown, {"girth": None if value is ACYCLIC else value})
    return OK


def cmd_power(args) -> int:
    h = power(_graph(args.graph).graph, args.i)
    if args.format == "json":
        print(format_graph_json(h))
    else:
        sys.stdout.write(format_edge_list(h))
    return OK


# ------------------------------------------------------------ proof machinery


def _sites(text: str | None) -> dict[str, int]:
    out = {}
    for item in (text or "").split(","):
        if not item.strip():
            continue
        role, sep, v = item.partition("=")
        if not sep or not v.strip().isdigit():
            raise UsageError(f"--sites expects role=v pairs, got {item!r}")
        out[role.strip()] = int(v)
    return out


def cmd_reduce(args) -> int:
    g = _graph(args.graph).graph
    kind = Kind(args.kind)
    wanted = _sites(args.sites)
    matches = [c for c in find_configurations(g, kind) if all(c.sites.get(r) == v for r, v in wanted.items())]
    if not matches:
        raise UsageError(f"no {kind.value} configuration matches the given sites")
    cfg = matches[0]
    phi = parse_partial_coloring(_read(args.coloring), g.n)
    out = apply_reduction(g, args.k, cfg, phi)
    if not out:
        _emit(args, f"hypothesis violated: {out.condition}", {"outcome": "HypothesisViolated", "condition": out.condition,
                                                               "sites": dict(cfg.sites)})
        return NO
    text = format_coloring(out.coloring, args.k + 2)
    lines = [f"extended {kind.value} sites={dict(cfg.sites)}"] + [f"  {t}" for t in out.trace] + [text]
    _emit(args, "\n".join(lines), {"outcome": "Extended", "sites": dict(cfg.sites), "trace": list(out.trace),
                                   "recolored": sorted(out.recolored), **json.loads(text)})
    return OK


def cmd_discharge(args) -> int:
    if args.enumerate:
        report = enumerate_profiles(k=12, degree_cap=args.cap)
        ok = report.minimum >= TARGET and not report.failing
        text = [f"profiles {len(report.rows)}", f"minimum {report.minimum}", f"failing {len(report.failing)}",
                f"flagged {len(report.flagged)}", report.note]
        if args.verbose:
            text += [f"{p.center_degree} {p.neighbor_degrees} {p.far_degrees} -> {c}" for p, c, _ in report.rows]
        _emit(args, "\n".join(text), {"profiles": len(report.rows), "minimum": str(report.minimum),
                                      "failing": len(report.failing), "flagged": len(report.flagged)})
        return OK if ok else NO
    if args.graph is None:
        raise UsageError("give --graph FILE or --enumerate")
    g = _graph(args.graph).graph
    ledger = discharge_graph(g)
    low = ledger.minimum()
    lines = [f"{v} {c}" for v, c in enumerate(ledger.final)] + [f"minimum {low}", f"total {ledger.total()}"]
    _emit(args, "\n".join(lines), {"final": [str(c) for c in ledger.final], "minimum": str(low),
                                   "total": str(ledger.total())})
    return OK


def cmd_pipeline(args) -> int:
    if args.theorem == "heawood":
        g = fam.heawood().graph
    elif args.graph is None:
        raise UsageError("this pipeline needs a graph")
    else:
        g = _graph(args.graph).graph
    lists = parse_lists(_read(args.lists), g.n)
    run = {"4.1": lambda: thm41_pipeline(g, lists), "4.2": lambda: thm42_pipeline(g, lists),
           "heawood": lambda: heawood_pipeline(lists)}[args.theorem]
    text = format_list_coloring(run())
    _emit(args, text, json.loads(text))
    return OK


def cmd_adversary(args) -> int:
    lg, lists = adversarial_T3_assignment(args.k)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(format_graph_json(lg))
        with open(args.emit + ".lists.json", "w", encoding="utf-8") as fh:
            fh.write(format_lists(lists))
    census = bad_copy_census(lg, lists, args.k)
    want = 2 * args.k + 1
    uniform = all(census[c][pair] == want for c in census for pair in fam.PAIRS)
    lines = [f"T3({args.k}) n={lg.graph.n}"]
    for c, tally in census.items():
        lines.append(f"T2[{c}] " + " ".join(f"{a}{b}:{tally[(a, b)]}" for a, b in fam.PAIRS))
    lines.append(f"every pair bad in {want} copies: {uniform}")
    _emit(args, "\n".join(lines), {"n": lg.graph.n, "uniform": uniform,
                                   "census": {str(c): {f"{a},{b}": t[(a, b)] for a, b in fam.PAIRS}
                                              for c, t in census.items()}})
    return OK if uniform else NO


def cmd_claims(args) -> int:
    report = run_claims(args.filter, seed=args.seed, workers=args.threads)
    print(report.to_json() if args.format == "json" else report.table())
    return OK if report.passed else NO


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="packpaint", description="Packing colorings of sparse graphs.",
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(func=func)
        return p

    def spec_flags(p):
        p.add_argument("--spec", help='radii such as "1,1,2,2" or "1^2,2^2"')
        p.add_argument("--ones", type=int)
        p.add_argument("--twos", type=int)

    p = add("gen", cmd_gen, "emit a named graph or family")
    p.add_argument("family")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--cycle-len", type=int, default=5)
    p.add_argument("--bound", default="14/5")

    p = add("solve", cmd_solve, "decide a packing coloring")
    p.add_argument("graph")
    spec_flags(p)
    p.add_argument("--force", action="append", metavar="V=C")
    p.add_argument("--count", action="store_true")

    p = add("solve-list", cmd_solve_list, "decide a packing list coloring")
    p.add_argument("graph")
    p.add_argument("lists")

    p = add("verify", cmd_verify, "check a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    spec_flags(p)

    p = add("mad", cmd_mad, "maximum average degree")
    p.add_argument("graph")
    p.add_argument("--below", help="also test mad < BOUND (exit 1 if not)")

    p = add("girth", cmd_girth, "length of a shortest cycle")
    p.add_argument("graph")

    p = add("power", cmd_power, "i-th power of a graph")
    p.add_argument("graph")
    p.add_argument("--i", type=int, default=2)

    p = add("reduce", cmd_reduce, "extend a coloring across a configuration")
    p.add_argument("graph")
    p.add_argument("coloring", help='partial coloring {"classes": [...]} of G minus the configuration')
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sites", help="role=v pairs, for example u1=4,u2=5")

    p = add("discharge", cmd_discharge, "final charges of a graph or of all profiles")
    p.add_argument("--graph")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--cap", type=int, default=15)
    p.add_argument("--verbose", action="store_true")

    p = add("pipeline", cmd_pipeline, "constructive list colorings of cubic graphs")
    p.add_argument("--theorem", required=True, choices=("4.1", "4.2", "heawood"))
    p.add_argument("--graph")
    p.add_argument("lists")

    p = add("adversary", cmd_adversary, "bad-copy census of the adversarial T3 lists")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--emit", help="write the graph JSON here and the lists next to it")

    p = add("claims", cmd_claims, "run the registered reproducibility claims")
    p.add_argument("--filter", help="glob over claim ids")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ERROR if e.code else OK
    for name, default in (("format", "text"), ("seed", 0), ("threads", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (UsageError, PackpaintError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
