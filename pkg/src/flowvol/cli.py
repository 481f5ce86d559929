"""Command-line front end.

Output is plain TSV on stdout (exact decimal integers, no scientific
notation); diagnostics go to stderr.  Exit codes: 0 all pass, 1 value
mismatch or instability, 2 usage or parse error, 3 resource cap hit.

Commands:
    volume FILE --method {reduction,arrays,kostant,ct,all}
    kostant FILE --netflow v1,v2,...
    family KIND [--m M] [--n N] [--k K] [--r R] [--mults c1,c2,...]
    formula NAME [--n N] [--k K] [--m M] [--r R]
    catalanotope --mults c1,c2,... [--method {recurrence,closed,all}]
    tree --r R --seq b1,b2,...
    verify SUITE [--max-n N] [--max-m M] [--max-r R] [--n N]
"""

from __future__ import annotations

import argparse
import sys

from . import arrays, bijections, catalanotope, ctlaurent, formulas, reduction
from .errors import GraphFormatError, MultiplicityViolation, NodeCapExceeded, TruncationUnstable
from .families import complete, cry_graph, multipath, narayana_family, rary_graph
from .kostant import identity_kirillov, kostant, volume_via_kostant
from .multigraph import format_graph, format_graphs, load_graph

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(*columns) -> None:
    print("\t".join(str(c) for c in columns))


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _cmd_volume(args) -> int:
    g = load_graph(args.file)
    methods = ["reduction", "arrays", "kostant", "ct"] if args.method == "all" else [args.method]

    if args.dump_leaves and "reduction" not in methods:
        _diag("--dump-leaves requires the reduction method")
        return EXIT_USAGE

    values: dict[str, int] = {}
    capped = False
    for method in methods:
        try:
            if method == "reduction":
                if args.dump_leaves:
                    leaves = list(reduction.iter_leaves(g, node_cap=args.node_cap))
                    with open(args.dump_leaves, "w", encoding="utf-8") as fh:
                        fh.write(format_graphs(leaves))
                    values[method] = len(leaves)
                else:
                    values[method] = reduction.leaf_count(g, node_cap=args.node_cap)
            elif method == "arrays":
                values[method] = arrays.count_b(g, node_cap=args.node_cap)
            elif method == "kostant":
                values[method] = volume_via_kostant(g)
            else:
                trace: list | None = [] if args.trace else None
                values[method] = ctlaurent.ct_volume(g, args.bound, check_stability=True, trace=trace)
                if trace is not None:
                    for step, nfactors, nterms in trace:
                        _diag(f"ct step {step}: {nfactors} factors, {nterms} live terms")
            _emit(method, values[method])
        except MultiplicityViolation as exc:
            if args.method != "all":
                _diag(f"error: {exc}")
                return EXIT_USAGE
            _diag(f"notice: {method} skipped: {exc}")
            _emit(method, "skipped")
        except NodeCapExceeded as exc:
            if args.method != "all":
                _diag(f"error: {exc}")
                return EXIT_RESOURCE
            _diag(f"notice: {method} hit its node cap ({exc.node_cap})")
            _emit(method, "capped")
            capped = True
        except TruncationUnstable as exc:
            _diag(f"error: {exc}")
            return EXIT_MISMATCH

    if args.method == "all":
        agreed = len(set(values.values())) <= 1 and values
        _emit("consistency", "pass" if agreed else "fail")
        if not agreed:
            return EXIT_MISMATCH
        if capped:
            return EXIT_RESOURCE
    return EXIT_PASS


def _cmd_kostant(args) -> int:
    g = load_graph(args.file)
    _emit(kostant(g, args.netflow))
    return EXIT_PASS


def _build_family(args) -> list:
    kind = args.kind
    if kind == "complete":
        _require(args, "n")
        return [complete(args.n)]
    if kind == "cry":
        _require(args, "m", "n")
        return [cry_graph(args.m, args.n)]
    if kind == "narayana":
        _require(args, "n", "k")
        return narayana_family(args.n, args.k)
    if kind == "rary":
        _require(args, "r", "n")
        return [rary_graph(args.r, args.n)]
    _require(args, "mults")
    return [multipath(args.mults)]


def _require(args, *names) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join(f"--{m}" for m in missing)
        raise ValueError(f"'{args.command}' is missing {flags}")


def _cmd_family(args) -> int:
    graphs = _build_family(args)
    text = format_graphs(graphs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def _cmd_formula(args) -> int:
    name = args.name
    if name == "catalan":
        _require(args, "n")
        value = formulas.catalan(args.n)
    elif name == "narayana":
        _require(args, "n", "k")
        value = formulas.narayana(args.n, args.k)
    elif name == "cry":
        _require(args, "n")
        value = formulas.cry_product(args.n)
    elif name == "pmn":
        _require(args, "m", "n")
        value = formulas.pmn_product(args.m, args.n)
    elif name == "kirillov":
        _require(args, "m", "n")
        value = formulas.kirillov_alternate(args.m, args.n)
    else:
        _require(args, "r", "n")
        value = formulas.rary_count(args.r, args.n)
    _emit(value)
    return EXIT_PASS


def _cmd_catalanotope(args) -> int:
    values = {}
    if args.method in ("recurrence", "all"):
        values["recurrence"] = catalanotope.f_recurrence(args.mults)
        _emit("recurrence", values["recurrence"])
    if args.method in ("closed", "all"):
        values["closed"] = catalanotope.f_closed(args.mults)
        _emit("closed", values["closed"])
    if args.method == "all":
        agreed = len(set(values.values())) == 1
        _emit("consistency", "pass" if agreed else "fail")
        if not agreed:
            return EXIT_MISMATCH
    return EXIT_PASS


def _cmd_tree(args) -> int:
    tree = bijections.seq_to_tree(args.seq, args.r)
    _emit(bijections.format_tree(tree))
    return EXIT_PASS


def _verify_cry(args, rows):
    for n in range(2, args.max_n + 1):
        volume = arrays.count_b(complete(n), node_cap=args.node_cap)
        product = formulas.cry_product(n)
        rows.append((f"K_{n}", volume, product, volume == product))


def _verify_pmn(args, rows):
    for m in range(args.max_m + 1):
        for n in range(2, args.max_n + 1):
            volume = arrays.count_b(cry_graph(m, n), node_cap=args.node_cap)
            product = formulas.pmn_product(m, n)
            alternate = formulas.kirillov_alternate(m, n)
            rows.append((f"m={m},n={n}", volume, product, alternate, volume == product == alternate))


def _verify_narayana(args, rows):
    n = args.n
    base = formulas.cry_product(n)  # C_1 ... C_{n-1}
    total = 0
    for k in range(1, n + 1):
        member_sum = sum(
            arrays.count_b(member, node_cap=args.node_cap) for member in narayana_family(n, k)
        )
        btilde = arrays.count_btilde(n, k, node_cap=args.node_cap)
        target = formulas.narayana(n, k) * base
        total += member_sum
        rows.append((f"k={k}", member_sum, btilde, target, member_sum == btilde == target))
    whole = formulas.cry_product(n + 1)
    rows.append(("total", total, whole, "", total == whole))


def _verify_rary(args, rows):
    for r in range(args.max_r + 1):
        for n in range(1, args.max_n + 1):
            sequences = list(bijections.enumerate_step_sequences(r, n))
            count = bijections.seq_count(r, n)
            volume = arrays.count_b(rary_graph(r, n), node_cap=args.node_cap)
            closed = formulas.rary_count(r, n)
            trees = set()
            roundtrip = True
            for seq in sequences:
                tree = bijections.seq_to_tree(seq, r)
                trees.add(tree)
                if bijections.tree_to_seq(tree) != seq:
                    roundtrip = False
            roundtrip = roundtrip and len(trees) == len(sequences)
            ok = roundtrip and len(sequences) == count == volume == closed
            rows.append((f"r={r},n={n}", count, volume, closed, "ok" if roundtrip else "broken", ok))


def _verify_catalan(args, rows):
    for n in range(1, args.max_n + 1):
        ones = (1,) * n
        rec = catalanotope.f_recurrence(ones)
        closed = catalanotope.f_closed(ones)
        cat = formulas.catalan(n)
        if n >= 2:
            kset = catalanotope.catalan_kset_count(n)
            kset_target = formulas.catalan(n - 1)
        else:
            kset, kset_target = 1, 1
        ok = rec == closed == cat and kset == kset_target
        rows.append((f"n={n}", rec, closed, cat, kset, kset_target, ok))


def _verify_kirillov(args, rows):
    _diag("notice: sink entry balanced to -(n*m) - binom(n+1,2)")
    for m in range(args.max_m + 1):
        for n in range(1, args.max_n + 1):
            report = identity_kirillov(m, n)
            rows.append((f"m={m},n={n}", report.kostant_value, report.product,
                         report.alternate, report.match))


_SUITES = {
    "cry": _verify_cry,
    "pmn": _verify_pmn,
    "narayana": _verify_narayana,
    "rary": _verify_rary,
    "catalan": _verify_catalan,
    "kirillov": _verify_kirillov,
}


def _cmd_verify(args) -> int:
    rows: list[tuple] = []
    capped = False
    try:
        _SUITES[args.suite](args, rows)
    except NodeCapExceeded as exc:
        _diag(f"notice: table truncated, node cap {exc.node_cap} exceeded")
        capped = True
    passed = failed = 0
    for row in rows:
        verdict = row[-1]
        passed += 1 if verdict else 0
        failed += 0 if verdict else 1
        _emit(*row[:-1], "pass" if verdict else "fail")
    _emit("summary", f"{passed}/{passed + failed}")
    if failed:
        return EXIT_MISMATCH
    if capped:
        return EXIT_RESOURCE
    return EXIT_PASS


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowvol",
        description="Exact flow-polytope volumes of directed multigraphs, "
                    "by reduction trees, triangular arrays, flow counting, and constant terms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volume", help="volume of the extended flow polytope of a graph file")
    p.add_argument("file")
    p.add_argument("--method", choices=["reduction", "arrays", "kostant", "ct", "all"], default="all")
    p.add_argument("--node-cap", type=int, default=reduction.DEFAULT_NODE_CAP)
    p.add_argument("--bound", type=int, default=None, help="window bound for the ct method")
    p.add_argument("--dump-leaves", metavar="FILE", default=None,
                   help="write the reduction-tree leaves to FILE (text format)")
    p.add_argument("--trace", action="store_true", help="per-step term counts for the ct method")
    p.set_defaults(handler=_cmd_volume)

    p = sub.add_parser("kostant", help="flow count of a graph file at a netflow vector")
    p.add_argument("file")
    p.add_argument("--netflow", type=_int_list, required=True)
    p.set_defaults(handler=_cmd_kostant)

    p = sub.add_parser("family", help="write family graphs in the text format")
    p.add_argument("kind", choices=["complete", "cry", "narayana", "rary", "multipath"])
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--mults", type=_int_list, default=None)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("formula", help="closed-form values (exact integers)")
    p.add_argument("name", choices=["catalan", "narayana", "cry", "pmn", "kirillov", "rary"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(handler=_cmd_formula)

    p = sub.add_parser("catalanotope", help="multipath volume by recurrence and closed form")
    p.add_argument("--mults", type=_int_list, required=True)
    p.add_argument("--method", choices=["recurrence", "closed", "all"], default="all")
    p.set_defaults(handler=_cmd_catalanotope)

    p = sub.add_parser("tree", help="serialize the tree of a step sequence")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seq", type=_int_list, required=True)
    p.set_defaults(handler=_cmd_tree)

    p = sub.add_parser("verify", help="verification suites (TSV: instance, values..., verdict)")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--node-cap", type=int, default=arrays.DEFAULT_NODE_CAP)
    p.set_defaults(handler=_cmd_verify)

    return parser


_VERIFY_DEFAULTS = {
    "cry": {"max_n": 6},
    "pmn": {"max_m": 3, "max_n": 5},
    "narayana": {"n": 3},
    "rary": {"max_r": 2, "max_n": 3},
    "catalan": {"max_n": 10},
    "kirillov": {"max_m": 2, "max_n": 4},
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "verify":
        for name, value in _VERIFY_DEFAULTS[args.suite].items():
            if getattr(args, name) is None:
                setattr(args, name, value)
    try:
        return args.handler(args)
    except GraphFormatError as exc:
        _diag(f"parse error: {exc}")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        _diag(f"error: {exc}")
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        _diag(f"error: {exc}")
        return EXIT_USAGE
    except NodeCapExceeded as exc:
        _diag(f"error: {exc}")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
