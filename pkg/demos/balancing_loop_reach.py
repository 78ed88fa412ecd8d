"""Which small perfect graphs ever reach the balancing loop?

The loop that turns a loose skew partition into a balanced one only runs
when neither the graph nor its complement has a star cutset (otherwise the
star cutset is already a balanced answer).  This script lists the perfect
graphs on up to nine vertices up to isomorphism, starting from the
networkx atlas of seven-vertex graphs and adding one vertex at a time, and
counts those that would enter the loop.  The answer is zero, which is why
the loop is exercised on twelve-vertex non-perfect fixtures in the tests.

The n = 9 pass takes a few minutes; run with ``--max-n 8`` for a quick look.
"""

import argparse
import time

import networkx as nx
from networkx.algorithms.graph_hashing import weisfeiler_lehman_graph_hash

from skewpart.cutsets import find_star_cutset
from skewpart.graph import Graph
from skewpart.oracles import is_berge_bruteforce
from skewpart.skew import find_loose

KNOWN_PERFECT_COUNTS = {7: 906, 8: 8887}


def one_vertex_extensions(g: Graph):
    n = g.n + 1
    for nbrs in range(1 << g.n):
        rows = list(g.adj) + [nbrs]
        for v in range(g.n):
            if nbrs >> v & 1:
                rows[v] |= 1 << g.n
        yield Graph.from_rows(rows)


def reaches_loop(h: Graph) -> bool:
    if find_star_cutset(h) is not None or find_star_cutset(h.complement()) is not None:
        return False
    return find_loose(h) is not None and is_berge_bruteforce(h)


def next_level(level: list[Graph]) -> list[Graph]:
    buckets: dict = {}
    out = []
    for g in level:
        for h in one_vertex_extensions(g):
            if not is_berge_bruteforce(h):
                continue
            nx_h = nx.Graph(h.edges())
            nx_h.add_nodes_from(range(h.n))
            key = (tuple(sorted(row.bit_count() for row in h.adj)), weisfeiler_lehman_graph_hash(nx_h))
            bucket = buckets.setdefault(key, [])
            if not any(nx.is_isomorphic(nx_h, other) for other in bucket):
                bucket.append(nx_h)
                out.append(h)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=9, choices=(7, 8, 9))
    args = parser.parse_args()
    start = time.perf_counter()

    level = [Graph(7, list(a.edges())) for a in nx.graph_atlas_g() if a.number_of_nodes() == 7]
    level = [g for g in level if is_berge_bruteforce(g)]
    smaller = [Graph(a.number_of_nodes(), list(a.edges())) for a in nx.graph_atlas_g() if 0 < a.number_of_nodes() < 7]
    hits = sum(reaches_loop(g) for g in smaller + level)
    print(f"n<=7: {len(level)} perfect graphs on 7 vertices (expected {KNOWN_PERFECT_COUNTS[7]}), "
          f"{hits} reach the loop")
    for n in range(8, args.max_n + 1):
        # every graph on n vertices is a one-vertex extension of one on n - 1
        hits = sum(reaches_loop(h) for g in level for h in one_vertex_extensions(g))
        line = f"n={n}: {hits} perfect graphs reach the loop"
        if n < args.max_n:
            level = next_level(level)
            line += f"; {len(level)} perfect graphs up to isomorphism (expected {KNOWN_PERFECT_COUNTS[n]})"
        print(line + f"  [{time.perf_counter() - start:.0f}s]")


if __name__ == "__main__":
    main()
