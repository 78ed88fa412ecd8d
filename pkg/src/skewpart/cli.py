"""Command-line front end.

Reads a graph in DIMACS (``p edge n m`` / ``e u v``) or plain edge-list form,
runs one command and prints either a short human summary or one JSON
document ``{command, n, m, result, certificates, stats}``.  Vertices are
1-based on the wire.  Exit codes: 0 success (a null result included),
2 bad input, 3 failed precondition (input not Berge, or too large for the
Berge check without ``--assume-berge``).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Any, Callable

from . import generators
from .colouring import Colouring, colour_berge, max_clique, verify_colouring
from .cutsets import cc_decomposition_tree, clique_cutset_kernels
from .graph import Graph, enumerate_c4_holes, members
from .kennedy_reed import kennedy_reed_list
from .oracles import OracleBudget, berge_obstruction, is_berge_bruteforce
from .skew import SkewPartition, classify, find_balanced, find_loose, tight_list, unbalanced_tight_list

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _input_error(lineno: int, message: str) -> CliError:
    return CliError(EXIT_INPUT, f"line {lineno}: {message}")


def _vertex(token: str, lineno: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise _input_error(lineno, f"not a vertex index: {token!r}") from None
    if v < 1:
        raise _input_error(lineno, f"vertex indices start at 1, got {v}")
    return v


def _add_edge(edges: dict, u: int, v: int, lineno: int) -> None:
    if u == v:
        raise _input_error(lineno, f"self-loop at vertex {u}")
    key = (min(u, v), max(u, v))
    if key in edges:
        raise _input_error(lineno, f"duplicate edge {key[0]} {key[1]} (first on line {edges[key]})")
    edges[key] = lineno


def parse_dimacs(text: str, vertices: int | None = None) -> Graph:
    n = declared_m = None
    header_line = 0
    edges: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise _input_error(lineno, "second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise _input_error(lineno, "expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise _input_error(lineno, "expected 'p edge <n> <m>'") from None
            if n < 1 or declared_m < 0:
                raise _input_error(lineno, "a graph needs at least one vertex and m >= 0")
            header_line = lineno
        elif parts[0] == "e":
            if n is None:
                raise _input_error(lineno, "edge before problem line")
            if len(parts) != 3:
                raise _input_error(lineno, "expected 'e <u> <v>'")
            u, v = _vertex(parts[1], lineno), _vertex(parts[2], lineno)
            for w in (u, v):
                if w > n:
                    raise _input_error(lineno, f"vertex {w} out of range 1..{n}")
            _add_edge(edges, u, v, lineno)
        else:
            raise _input_error(lineno, f"unknown line type {parts[0]!r}")
    if n is None:
        raise CliError(EXIT_INPUT, "missing problem line 'p edge <n> <m>'")
    if declared_m != len(edges):
        raise _input_error(header_line, f"header declares {declared_m} edges, file has {len(edges)}")
    if vertices is not None and vertices != n:
        raise CliError(EXIT_INPUT, f"--vertices {vertices} disagrees with problem line ({n})")
    return Graph(n, [(u - 1, v - 1) for u, v in edges])


def parse_edgelist(text: str, vertices: int | None = None) -> Graph:
    edges: dict[tuple[int, int], int] = {}
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 2:
            raise _input_error(lineno, "expected '<u> <v>'")
        u, v = _vertex(line[0], lineno), _vertex(line[1], lineno)
        if vertices is not None and max(u, v) > vertices:
            raise _input_error(lineno, f"vertex {max(u, v)} out of range 1..{vertices}")
        _add_edge(edges, u, v, lineno)
        top = max(top, u, v)
    if vertices is None:
        if not edges:
            raise CliError(EXIT_INPUT, "empty edge list: give --vertices N for an edgeless graph")
        vertices = top
    if vertices < 1:
        raise CliError(EXIT_INPUT, "a graph needs at least one vertex")
    return Graph(vertices, [(u - 1, v - 1) for u, v in edges])


def parse_graph(path: str, fmt: str, vertices: int | None = None) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
    parser = parse_dimacs if fmt == "dimacs" else parse_edgelist
    return parser(text, vertices)


def format_graph(g: Graph, fmt: str) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"] if fmt == "dimacs" else []
    prefix = "e " if fmt == "dimacs" else ""
    lines += [f"{prefix}{u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _wire(mask: int) -> list[int]:
    return [v + 1 for v in members(mask)]


def _partition_doc(g: Graph, sp: SkewPartition) -> dict[str, Any]:
    # re-validate before anything is printed
    check = classify(g, sp.A, sp.B)
    if check is None or check.tight != sp.tight:
        raise AssertionError("emitted partition failed re-validation")
    return {"A": _wire(sp.A), "B": _wire(sp.B), "tight": sp.tight, "balance": sp.balance.value}


def _partition_certificate(sp: SkewPartition) -> dict[str, Any]:
    cert: dict[str, Any] = {}
    if sp.witness is not None:
        w = sp.witness
        cert["loose_witness"] = {"side": w.side, "vertex": w.vertex + 1, "part": _wire(w.part)}
    if sp.base is not None:
        cert["square"] = {"hole": [v + 1 for v in sp.base.hole], "in_complement": sp.base.in_complement}
    return cert


class Run:
    """Collects the pieces of one output document."""

    def __init__(self, args: argparse.Namespace, g: Graph):
        self.args = args
        self.g = g
        self.result: Any = None
        self.certificates: Any = None
        self.candidates = 0
        self.lines: list[str] = []


def _budget(args) -> OracleBudget:
    return OracleBudget(max_vertices=args.budget) if args.budget else OracleBudget()


def _require_berge(args, g: Graph) -> None:
    if args.assume_berge:
        return
    budget = _budget(args)
    if g.n > budget.max_vertices:
        raise CliError(
            EXIT_PRECONDITION,
            f"{g.n} vertices exceeds the Berge-check budget of {budget.max_vertices}; pass --assume-berge",
        )
    if not is_berge_bruteforce(g, budget):
        raise CliError(EXIT_PRECONDITION, "input graph is not Berge")


def cmd_tight_list(run: Run) -> None:
    g = run.g
    candidates = kennedy_reed_list(g, run.args.jobs)
    parts = tight_list(g, candidates)
    run.candidates = len(candidates)
    run.result = [_partition_doc(g, sp) for sp in parts]
    run.lines = [f"{len(parts)} tight skew partition(s)"]
    run.lines += [f"A={d['A']} B={d['B']}" for d in run.result]


def cmd_unbalanced(run: Run) -> None:
    g = run.g
    _require_berge(run.args, g)
    parts = unbalanced_tight_list(g)
    run.candidates = 2 * (len(enumerate_c4_holes(g)) + len(enumerate_c4_holes(g.complement())))
    run.result = [_partition_doc(g, sp) for sp in parts]
    run.certificates = [_partition_certificate(sp) for sp in parts]
    run.lines = [f"{len(parts)} unbalanced tight skew partition(s)"]
    run.lines += [f"A={d['A']} B={d['B']}" for d in run.result]


def _single(run: Run, sp: SkewPartition | None, label: str) -> None:
    if sp is None:
        run.lines = [f"no {label} skew partition"]
        return
    run.result = _partition_doc(run.g, sp)
    run.certificates = _partition_certificate(sp)
    run.lines = [f"{label} skew partition: A={run.result['A']} B={run.result['B']}"]


def cmd_loose(run: Run) -> None:
    _single(run, find_loose(run.g), "loose")


def cmd_balanced(run: Run) -> None:
    _require_berge(run.args, run.g)
    _single(run, find_balanced(run.g), "balanced")


def cmd_kr_list(run: Run) -> None:
    cands = kennedy_reed_list(run.g, run.args.jobs)
    run.candidates = len(cands)
    run.result = [_wire(b) for b in cands]
    run.lines = [f"{len(cands)} candidate cutset(s)"] + [str(b) for b in run.result]


def cmd_cc_tree(run: Run) -> None:
    tree = cc_decomposition_tree(run.g)
    index = {id(t): i for i, t in enumerate(tree.nodes)}
    nodes = []
    for t in tree.nodes:
        entry: dict[str, Any] = {"vertices": _wire(t.vertices)}
        if t.children is not None:
            entry["children"] = [index[id(c)] for c in t.children]
            entry["separator"] = _wire(t.separator)
        nodes.append(entry)
    kernels = clique_cutset_kernels(run.g)
    run.result = {"nodes": nodes, "kernels": [_wire(k) for k in kernels]}
    run.lines = [f"{len(nodes)} node(s), {len(kernels)} distinct clique cutset kernel(s)"]
    run.lines += [f"kernel {k}" for k in run.result["kernels"]]


def cmd_colour(run: Run) -> None:
    g = run.g
    _require_berge(run.args, g)
    c = colour_berge(g)
    if not verify_colouring(g, c):
        raise AssertionError("emitted colouring failed verification")
    omega, clique = max_clique(g)
    run.result = {"palette": c.palette, "colours": [c.colours[v] for v in range(g.n)]}
    run.certificates = {"clique": _wire(clique)}
    run.lines = [f"{c.palette} colour(s); a clique of size {omega}: {_wire(clique)}"]
    run.lines += [f"{v + 1} {c.colours[v]}" for v in range(g.n)]


def cmd_check_berge(run: Run) -> None:
    g = run.g
    budget = _budget(run.args)
    if g.n > budget.max_vertices:
        raise CliError(EXIT_PRECONDITION, f"{g.n} vertices exceeds the oracle budget of {budget.max_vertices}")
    found = berge_obstruction(g, budget)
    witness = None if found is None else {found[0]: [v + 1 for v in found[1]]}
    run.result = witness is None
    run.certificates = witness
    run.lines = ["Berge" if witness is None else f"not Berge: {witness}"]


def read_colouring(path: str, n: int) -> Colouring:
    """Colours from ``vertex colour`` lines, or from the JSON document ``colour --json`` prints."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            cols = doc["result"]["colours"]
            colours = {v: int(c) for v, c in enumerate(cols)}
            palette = int(doc["result"]["palette"])
        except (ValueError, KeyError, TypeError):
            raise CliError(EXIT_INPUT, f"{path}: not a colouring document") from None
        return Colouring(palette, colours)
    colours = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 2:
            raise _input_error(lineno, "expected '<vertex> <colour>'")
        v = _vertex(line[0], lineno)
        try:
            c = int(line[1])
        except ValueError:
            raise _input_error(lineno, f"not a colour: {line[1]!r}") from None
        if v > n:
            raise _input_error(lineno, f"vertex {v} out of range 1..{n}")
        if v - 1 in colours:
            raise _input_error(lineno, f"vertex {v} coloured twice")
        colours[v - 1] = c
    return Colouring(max(colours.values(), default=0), colours)


def cmd_verify(run: Run) -> None:
    g = run.g
    if run.args.colouring is None:
        raise CliError(EXIT_INPUT, "verify needs --colouring FILE")
    c = read_colouring(run.args.colouring, g.n)
    ok = verify_colouring(g, c)
    problems = []
    missing = sorted(set(range(g.n)) - set(c.colours))
    if missing:
        problems.append({"uncoloured": [v + 1 for v in missing]})
    clashes = [[u + 1, v + 1] for u, v in g.edges() if u in c.colours and c.colours[u] == c.colours.get(v)]
    if clashes:
        problems.append({"monochromatic_edges": clashes})
    run.result = {"valid": ok, "palette": c.palette}
    run.certificates = problems or None
    run.lines = [f"valid colouring with {c.palette} colour(s)" if ok else f"invalid colouring: {problems}"]


COMMANDS: dict[str, Callable[[Run], None]] = {
    "tight-list": cmd_tight_list,
    "unbalanced-tight-list": cmd_unbalanced,
    "loose": cmd_loose,
    "balanced": cmd_balanced,
    "kr-list": cmd_kr_list,
    "cc-tree": cmd_cc_tree,
    "colour": cmd_colour,
    "check-berge": cmd_check_berge,
    "verify": cmd_verify,
}

COMMAND_HELP = {
    "tight-list": "list every tight skew partition",
    "unbalanced-tight-list": "list the unbalanced tight skew partitions of a Berge graph",
    "loose": "find a loose skew partition",
    "balanced": "find a balanced skew partition of a Berge graph",
    "kr-list": "print the candidate cutset list",
    "cc-tree": "decompose along clique cutsets and print the kernels",
    "colour": "colour a Berge graph with as many colours as its largest clique",
    "check-berge": "look for an odd hole or odd antihole (small graphs only)",
    "verify": "check a colouring against the graph",
}

GEN_FAMILIES = ("bipartite", "line-bipartite", "complement-bipartite", "berge", "random", "tusp8")


def generate(family: str, n: int, seed: int, p: float) -> Graph:
    rng = random.Random(seed)
    if family == "tusp8":
        return generators.tusp8()
    if family == "bipartite":
        return generators.random_bipartite(n, p, rng)
    if family == "complement-bipartite":
        return generators.random_bipartite(n, p, rng).complement()
    if family == "line-bipartite":
        while True:
            lg = generators.line_graph(generators.random_bipartite(max(n, 4), p, rng))
            if lg.n >= n:
                return lg.induced((1 << n) - 1)[0]
            p = min(1.0, p + 0.1)
    if family == "berge":
        return generators.random_berge(n, rng)
    return generators.random_graph(n, p, rng)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("dimacs", "edgelist"), default="dimacs", help="graph file format")
    common.add_argument("--vertices", type=int, metavar="N", help="vertex count (edge lists)")

    run_opts = argparse.ArgumentParser(add_help=False, parents=[common])
    run_opts.add_argument("input", help="graph file, or - for stdin")
    run_opts.add_argument("--assume-berge", action="store_true", help="skip the Berge check")
    run_opts.add_argument("--budget", type=int, metavar="N", help="largest n for brute-force checks (default 12)")
    run_opts.add_argument("--json", action="store_true", help="print one JSON document")
    run_opts.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")
    run_opts.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes for candidate lists")

    parser = argparse.ArgumentParser(prog="skewpart", description="Skew partitions and optimal colouring of Berge graphs")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[run_opts], help=COMMAND_HELP[name])
        if name == "verify":
            p.add_argument("--colouring", metavar="FILE", help="'vertex colour' lines or a colour --json document")
    gen = sub.add_parser("gen", parents=[common], help="write a random test graph to stdout")
    gen.add_argument("family", choices=GEN_FAMILIES)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--p", type=float, default=0.5, help="edge probability")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return _dispatch(args)
    except CliError as exc:
        print(f"skewpart: {exc}", file=sys.stderr)
        return exc.code


def _dispatch(args) -> int:
    if args.vertices is not None and args.vertices < 1:
        raise CliError(EXIT_INPUT, "--vertices must be positive")
    if args.command == "gen":
        if args.vertices is None and args.family != "tusp8":
            raise CliError(EXIT_INPUT, "gen needs --vertices N")
        g = generate(args.family, args.vertices or 8, args.seed, args.p)
        sys.stdout.write(format_graph(g, args.format))
        return EXIT_OK
    if args.budget is not None and args.budget < 1:
        raise CliError(EXIT_INPUT, "--budget must be positive")
    if args.jobs < 1:
        raise CliError(EXIT_INPUT, "--jobs must be positive")
    g = parse_graph(args.input, args.format, args.vertices)
    run = Run(args, g)
    start = time.perf_counter()
    COMMANDS[args.command](run)
    elapsed = None if args.no_timing else round((time.perf_counter() - start) * 1000, 3)
    if args.json:
        doc = {
            "command": args.command,
            "n": g.n,
            "m": g.m,
            "result": run.result,
            "certificates": run.certificates,
            "stats": {"elapsed_ms": elapsed, "candidates_examined": run.candidates},
        }
        print(json.dumps(doc))
    else:
        print("\n".join(run.lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
