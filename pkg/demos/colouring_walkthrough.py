"""Colour a perfect graph by splitting it along balanced skew partitions.

The graph is the line graph of a random bipartite graph with maximum degree
three, so its clique number is three.  We build the decomposition tree,
colour it bottom-up, and print what each colour merge had to do.

Run with ``python demos/colouring_walkthrough.py [seed]``.
"""

import random
import sys

from skewpart.colouring import build_sp_tree, colour_berge, max_clique, verify_colouring
from skewpart.generators import line_graph
from skewpart.graph import Graph, members
from skewpart.oracles import exact_chromatic

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 5
rng = random.Random(seed)

# three random perfect matchings between two sides of five (repeated edges merge)
edges = set()
for _ in range(3):
    perm = list(range(5))
    rng.shuffle(perm)
    edges |= {(i, 5 + perm[i]) for i in range(5)}
g = line_graph(Graph(10, sorted(edges)))
omega, clique = max_clique(g)
print(f"line graph with {g.n} vertices and {g.m} edges, largest clique {members(clique)} (size {omega})")

tree = build_sp_tree(g)
print(f"decomposition tree: {len(tree.internal_nodes())} split(s), {len(tree.leaves())} leaves")
for leaf in tree.leaves():
    print(f"  leaf {members(leaf.vertices)}: {leaf.kind.value}")

log = []
c = colour_berge(g, log=log)
print(f"\ncolouring uses {c.palette} colours, proper: {verify_colouring(g, c)}")
for i, entry in enumerate(log, 1):
    print(f"  merge {i}: k={entry['k']} b1={entry['b1']} ell={entry['ell']} "
          f"|V(H)|={entry['h_size']} <= n={entry['n']}, omega(T)={entry['omega_t']}")
if g.n <= 12:
    print(f"exact chromatic number by brute force: {exact_chromatic(g)[0]}")
for colour, vertices in sorted(c.classes().items()):
    print(f"  colour {colour}: {vertices}")
