"""Command-line interface.

Exit codes: 0 clean / holds, 1 bad input, 2 witness / violated, 3 unknown
(budget exhausted). Every run writes a JSON manifest (to ``--manifest`` or,
by default, one line on stderr).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import platform
import sys

from . import __version__
from .construct import (
    cycle_pi_colouring,
    cycle_sigma5_colouring,
    extremal_colouring,
    greedy_square_colouring,
    levelling_colouring,
    path_colouring_3,
    plus_path_colouring_4,
    sigma_lex_colouring,
    subdivision_colouring,
    tree_pi_colouring,
    tree_sigma_colouring,
)
from .decompose import treewidth_colouring
from .exact import BudgetExceeded, exact_pi, exact_sigma, explore_smallwalks
from .graph import (
    Colouring,
    Graph,
    Levelling,
    build_subdivision,
    dumps,
    gen_complete,
    gen_cycle,
    gen_extremal,
    gen_lex_product,
    gen_looped_path,
    gen_path,
    gen_petersen,
    gen_random_graph,
    gen_random_partial_ktree,
    gen_random_tree,
    gen_star,
    to_dot,
)
from .verify import (
    Status,
    find_repetitive_path,
    find_repetitive_path_tree,
    find_repetitive_walk,
    is_distance2,
    is_proper,
    is_star_colouring,
)

DEFAULT_SEED = 20070101

EXIT_OK, EXIT_BAD_INPUT, EXIT_WITNESS, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Run:
    """Collects manifest data for one invocation."""

    def __init__(self, argv, seed):
        self.argv = list(argv)
        self.seed = seed
        self.inputs: dict[str, str] = {}
        self.outputs: list[str] = []

    def read_json(self, path):
        with open(path, "rb") as fh:
            raw = fh.read()
        self.inputs[path] = hashlib.sha256(raw).hexdigest()
        return json.loads(raw)

    def emit(self, text, path=None):
        if path is None:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
        else:
            with open(path, "w") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")
            self.outputs.append(path)

    def manifest(self) -> dict:
        import networkx

        return {
            "command": self.argv,
            "seed": self.seed,
            "versions": {
                "nonrep": __version__,
                "python": platform.python_version(),
                "networkx": networkx.__version__,
            },
            "inputs": self.inputs,
            "outputs": self.outputs,
        }


def _need(value, name):
    if value is None:
        raise UsageError(f"missing --{name}")
    return value


def _n_arg(args):
    return args.size if args.size is not None else args.n


def cmd_gen(args, run: Run) -> int:
    fam = args.family
    n = _n_arg(args)
    if fam == "path":
        g = gen_path(_need(n, "n"))
    elif fam == "cycle":
        g = gen_cycle(_need(n, "n"))
    elif fam == "complete":
        g = gen_complete(_need(n, "n"))
    elif fam == "star":
        g = gen_star(_need(n, "n"))
    elif fam == "looped-path":
        g = gen_looped_path(_need(n, "n"))
    elif fam == "petersen":
        g = gen_petersen()
    elif fam == "random-tree":
        g = gen_random_tree(_need(n, "n"), run.seed)
    elif fam == "random-graph":
        g = gen_random_graph(_need(n, "n"), _need(args.prob, "prob"), run.seed)
    elif fam == "partial-ktree":
        g, _ = gen_random_partial_ktree(_need(n, "n"), _need(args.k, "k"), args.deg_cap, run.seed)
    elif fam == "extremal":
        g, _ = gen_extremal(_need(args.c, "c"), _need(n, "n"))
    elif fam == "lex-product":
        g, _ = gen_lex_product(_need(args.m, "m"), _need(args.p, "p"))
    elif fam == "subdivision":
        res = build_subdivision(Graph.from_json(run.read_json(_need(args.input, "input"))), args.stretch)
        g = res.graph
        if args.levels_out:
            run.emit(dumps(res.levelling), args.levels_out)
    else:
        raise UsageError(f"unknown family {fam!r}")
    run.emit(to_dot(g) if args.format == "dot" else dumps(g), args.out)
    return EXIT_OK


def _load_graph(args, run):
    return Graph.from_json(run.read_json(_need(args.graph, "graph")))


def cmd_colour(args, run: Run) -> int:
    algo = args.algo
    g = None
    if args.graph:
        g = _load_graph(args, run)
    n = args.n if args.n is not None else (g.n if g is not None else None)
    if algo == "path":
        c = path_colouring_3(_need(n, "n"))
    elif algo == "plus-path":
        c = plus_path_colouring_4(_need(n, "n"))
    elif algo == "cycle-pi":
        c = cycle_pi_colouring(_need(n, "n"))
    elif algo == "cycle-sigma5":
        c = cycle_sigma5_colouring(_need(n, "n"))
    elif algo == "extremal":
        c = extremal_colouring(_need(args.c, "c"), _need(n, "n"))
    elif algo == "sigma-lex":
        c = sigma_lex_colouring(_need(args.m, "m"), _need(args.p, "p"))
    else:
        g = _need(g, "graph")
        if algo == "tree-pi":
            c = tree_pi_colouring(g)
        elif algo == "tree-sigma":
            c = tree_sigma_colouring(g)
        elif algo == "greedy-square":
            c = greedy_square_colouring(g)
        elif algo == "levelling":
            levels = Levelling.from_json(run.read_json(_need(args.levels, "levels")))
            c = levelling_colouring(g, levels)
        elif algo == "subdivision":
            res, c = subdivision_colouring(g, args.stretch)
            g = res.graph
            if args.graph_out:
                run.emit(dumps(g), args.graph_out)
        elif algo in ("treewidth-path", "treewidth-walk"):
            c = treewidth_colouring(g, algo.split("-")[1]).colouring
        else:
            raise UsageError(f"unknown algorithm {algo!r}")
    if args.format == "dot":
        if g is None or g.n != len(c):
            raise UsageError("--format dot needs the coloured graph via --graph")
        run.emit(to_dot(g, c), args.out)
    else:
        run.emit(dumps(c), args.out)
    return EXIT_OK


def cmd_verify(args, run: Run) -> int:
    g = _load_graph(args, run)
    c = Colouring.from_json(run.read_json(_need(args.colouring, "colouring")))
    prop = args.property
    if prop in ("proper", "distance2", "star"):
        check = {"proper": is_proper, "distance2": is_distance2, "star": is_star_colouring}[prop]
        holds = check(g, c)
        run.emit(json.dumps({"property": prop, "status": "ok" if holds else "violated"}))
        return EXIT_OK if holds else EXIT_WITNESS
    if prop == "walk":
        w = find_repetitive_walk(g, c, minimize=args.minimize)
        run.emit(json.dumps({
            "property": prop,
            "status": "clean" if w is None else "witness",
            "witness": None if w is None else w.to_json(),
        }))
        return EXIT_OK if w is None else EXIT_WITNESS
    if prop in ("path", "tree-path"):
        verdict = find_repetitive_path(g, c, args.budget) if prop == "path" else find_repetitive_path_tree(g, c)
        run.emit(json.dumps({
            "property": prop,
            "status": verdict.status.value,
            "witness": None if verdict.witness is None else verdict.witness.to_json(),
            "nodes": verdict.budget_spent,
        }))
        return {Status.CLEAN: EXIT_OK, Status.WITNESS: EXIT_WITNESS, Status.UNKNOWN: EXIT_UNKNOWN}[verdict.status]
    raise UsageError(f"unknown property {prop!r}")


def cmd_exact(args, run: Run) -> int:
    g = _load_graph(args, run)
    solver = exact_pi if args.param == "pi" else exact_sigma
    try:
        res = solver(g, args.budget)
    except BudgetExceeded as exc:
        run.emit(json.dumps({"status": "unknown", "nodes": exc.nodes}))
        return EXIT_UNKNOWN
    run.emit(dumps(res), args.out)
    return EXIT_OK


def cmd_explore(args, run: Run) -> int:
    report = explore_smallwalks(
        args.n_max, args.colours, args.samples, run.seed,
        filter_conjecture=args.filter_conjecture, colouring_model=args.colouring_model,
    )
    run.emit("\n".join(report.json_lines()), args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with other bad input; 2 means "witness"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_INPUT, f"{self.prog}: error: {message}\n")


def _common(default):
    # accepted before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED if default else argparse.SUPPRESS)
    p.add_argument("--manifest", default=None if default else argparse.SUPPRESS,
                   help="write the run manifest here instead of stderr")
    p.add_argument("-v", "--verbose", action="store_true", default=False if default else argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nonrep", description=__doc__.splitlines()[0], parents=[_common(True)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    shared = [_common(False)]

    gen = sub.add_parser("gen", parents=shared, help="generate a graph")
    gen.add_argument("family", choices=[
        "path", "cycle", "complete", "star", "looped-path", "petersen", "random-tree",
        "random-graph", "partial-ktree", "extremal", "lex-product", "subdivision",
    ])
    gen.add_argument("size", nargs="?", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--c", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--p", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--prob", type=float)
    gen.add_argument("--deg-cap", type=int)
    gen.add_argument("--input")
    gen.add_argument("--stretch", type=int, default=1)
    gen.add_argument("--levels-out")
    gen.add_argument("--out")
    gen.add_argument("--format", choices=["json", "dot"], default="json")
    gen.set_defaults(func=cmd_gen)

    col = sub.add_parser("colour", parents=shared, help="construct a colouring")
    col.add_argument("algo", choices=[
        "path", "plus-path", "cycle-pi", "cycle-sigma5", "extremal", "sigma-lex", "tree-pi",
        "tree-sigma", "greedy-square", "levelling", "subdivision", "treewidth-path", "treewidth-walk",
    ])
    col.add_argument("--graph")
    col.add_argument("--levels")
    col.add_argument("--n", type=int)
    col.add_argument("--c", type=int)
    col.add_argument("--m", type=int)
    col.add_argument("--p", type=int)
    col.add_argument("--stretch", type=int, default=2)
    col.add_argument("--graph-out")
    col.add_argument("--out")
    col.add_argument("--format", choices=["json", "dot"], default="json")
    col.set_defaults(func=cmd_colour)

    ver = sub.add_parser("verify", parents=shared, help="check a colouring")
    ver.add_argument("property", choices=["proper", "distance2", "star", "path", "tree-path", "walk"])
    ver.add_argument("--graph", required=True)
    ver.add_argument("--colouring", required=True)
    ver.add_argument("--budget", type=int, default=0)
    ver.add_argument("--minimize", action="store_true")
    ver.set_defaults(func=cmd_verify)

    ex = sub.add_parser("exact", parents=shared, help="exact pi or sigma of a small graph")
    ex.add_argument("param", choices=["pi", "sigma"])
    ex.add_argument("--graph", required=True)
    ex.add_argument("--budget", type=int, default=1_000_000)
    ex.add_argument("--out")
    ex.set_defaults(func=cmd_exact)

    exp = sub.add_parser("explore", parents=shared, help="sample short repetitive walks")
    exp.add_argument("--n-max", type=int, default=6)
    exp.add_argument("--colours", type=int, default=3)
    exp.add_argument("--samples", type=int, default=100)
    exp.add_argument("--filter-conjecture", action="store_true")
    exp.add_argument("--colouring-model", choices=["uniform", "distance2"], default="uniform")
    exp.add_argument("--out")
    exp.set_defaults(func=cmd_explore)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    run = Run(["nonrep", *argv], args.seed)
    try:
        code = args.func(args, run)
    except (UsageError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"nonrep: error: {exc}", file=sys.stderr)
        code = EXIT_BAD_INPUT
    text = json.dumps(run.manifest(), sort_keys=True)
    if args.manifest:
        with open(args.manifest, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
