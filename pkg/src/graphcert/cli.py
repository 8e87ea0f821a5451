"""Command-line entry point: ``graphcert <command> ...``."""

import argparse
import json
import sys

from . import __version__
from .budget import Budget
from .cycles import cycle_through_three
from .errors import BudgetExhausted, GraphCertError
from .g6 import encode_graph6
from .harness.corpus import FAMILIES, corpus_generate, ingest
from .harness.report import emit_report
from .harness.run import sweep, thread_count
from .harness.verify import COUNTEREXAMPLE, STATEMENTS
from .linkage import Linkage, two_disjoint_paths
from .subdivision import TKConstraints, find_tk5


def _ints(text):
    return [int(x) for x in text.split(",") if x.strip()] if text else []


def _add_family_args(p):
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=1, help="edges removed (complete-minus-edge)")
    p.add_argument("--parts", type=_ints, help="part sizes (complete-multipartite)")
    p.add_argument("--jumps", type=_ints, help="jump lengths (circulant)")
    p.add_argument("--base", default="icosahedron", help="planar base (apex-over-planar)")
    p.add_argument("--p", type=float, default=0.6, help="edge probability (random-filtered)")
    p.add_argument("--count", type=int, default=10, help="samples (random-filtered)")
    p.add_argument("--seed", type=int, default=0)


def _entries(args):
    if getattr(args, "input", None):
        res = ingest(args.input)
        for d in res.diagnostics:
            print(f"{args.input}:{d.line}: {d.message}", file=sys.stderr)
        return res.entries
    if not args.family:
        raise GraphCertError("give --input or --family")
    params = {"n": args.n, "k": args.k, "parts": args.parts, "jumps": args.jumps,
              "base": args.base, "p": args.p, "count": args.count, "seed": args.seed}
    return corpus_generate(args.family, **{k: v for k, v in params.items() if v is not None})


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args):
    entries = _entries(args)
    limit = args.roles_limit or None
    order = tuple(args.order.split(",")) if args.order else None
    threads = thread_count(args.threads)
    verdicts, skipped = sweep(entries, args.statement, args.budget_nodes, threads, limit, order)
    meta = {"seed": args.seed, "budget": {"nodes": args.budget_nodes}, "version": __version__,
            "statement": args.statement, "threads": threads, "skipped": skipped}
    _write(emit_report(verdicts, args.format, meta), args.report)
    if args.figures:
        from .harness.plots import write_figures

        for path in write_figures(verdicts, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return 1 if any(v.satisfied_disjunct == COUNTEREXAMPLE for v in verdicts) else 0


def cmd_generate(args):
    lines = [encode_graph6(e.graph) + "\n" for e in _entries(args)]
    _write("".join(lines), args.output)
    return 0


def _emit(results):
    print(json.dumps(results, sort_keys=True, indent=1))


def cmd_find_tk5(args):
    c = TKConstraints(forbidden_branch=frozenset(args.forbid_branch),
                      required_branch=frozenset(args.require_branch),
                      required_edge=tuple(args.require_edge) if args.require_edge else None)
    out = []
    for e in _entries(args):
        try:
            w = find_tk5(e.graph, c, Budget(args.budget_nodes))
            res = None if w is None else w.to_json()
        except BudgetExhausted:
            res = "budget-exhausted"
        out.append({"graph_id": e.graph_id, "tk5": res})
    _emit(out)
    return 0


def cmd_two_paths(args):
    s1, s2, t1, t2 = args.terminals
    out = []
    for e in _entries(args):
        r = two_disjoint_paths(e.graph, s1, s2, t1, t2, Budget(args.budget_nodes))
        key = "linkage" if isinstance(r, Linkage) else "three_planar"
        out.append({"graph_id": e.graph_id, key: r.to_json()})
    _emit(out)
    return 0


def cmd_cycle3(args):
    y1, y2, y3 = args.vertices
    out = []
    for e in _entries(args):
        r = cycle_through_three(e.graph, y1, y2, y3, Budget(args.budget_nodes))
        res = {"cycle": list(r)} if isinstance(r, tuple) else {"obstruction": r.to_json()}
        out.append(dict(res, graph_id=e.graph_id))
    _emit(out)
    return 0


def _fixed(count):
    def parse(text):
        vals = _ints(text)
        if len(vals) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated vertices")
        return vals
    return parse


def build_parser():
    ap = argparse.ArgumentParser(prog="graphcert", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="certify a statement on every instance of a corpus")
    p.add_argument("--statement", choices=STATEMENTS, default="theorem-1.1")
    p.add_argument("--input", help="graph6/sparse6 file, one graph per line")
    _add_family_args(p)
    p.add_argument("--budget-nodes", type=int, default=200000)
    p.add_argument("--threads", type=int, help="worker processes (default: $GRAPHCERT_THREADS or CPU count)")
    p.add_argument("--roles-limit", type=int, default=64, help="instances per graph; 0 lifts the cap")
    p.add_argument("--order", help="comma-separated disjunct order, e.g. i,ii,iii")
    p.add_argument("--report", help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--figures", help="directory for PNG summary figures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a generated family as graph6 lines")
    _add_family_args(p)
    p.add_argument("--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    for name, func, extra in (("find-tk5", cmd_find_tk5, None), ("two-paths", cmd_two_paths, ("--terminals", 4)),
                              ("cycle3", cmd_cycle3, ("--vertices", 3))):
        p = sub.add_parser(name)
        p.add_argument("--input", required=True)
        p.add_argument("--budget-nodes", type=int, default=None)
        if extra:
            p.add_argument(extra[0], type=_fixed(extra[1]), required=True)
        p.set_defaults(func=func, family=None)
    p = sub.choices["find-tk5"]
    p.add_argument("--forbid-branch", type=_ints, default=[])
    p.add_argument("--require-branch", type=_ints, default=[])
    p.add_argument("--require-edge", type=_fixed(2))
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphCertError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
