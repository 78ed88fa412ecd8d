"""Small named graphs and hypothesis strategies shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from skewpart.generators import complete, complete_bipartite, cycle, path, random_berge, tusp8
from skewpart.graph import Graph

# P4 is a-b-c-d with a, b, c, d = 0, 1, 2, 3
A, B, C, D = range(4)
P4 = path(4)
C4, C5, C6, C7 = cycle(4), cycle(5), cycle(6), cycle(7)
K4 = complete(4)
CLAW = complete_bipartite(1, 3)
# K_{2,3} with parts {a1, a2, z} = {0, 1, 2} and {x, y} = {3, 4}
K23 = Graph(5, [(u, v) for u in range(3) for v in (3, 4)])
BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
TUSP8 = tusp8()

# twelve-vertex graphs with no star cutset in the graph or its complement
# but with loose skew partitions; the balancing loop makes moves on them
LOOP_FIXTURES = [
    Graph(12, [
        (0, 1), (0, 2), (0, 8), (0, 10), (1, 7), (1, 9), (1, 10), (1, 11), (2, 7), (2, 8), (2, 11),
        (3, 4), (3, 5), (3, 6), (3, 7), (3, 10), (3, 11), (4, 5), (4, 6), (4, 7), (4, 8), (4, 11),
        (5, 7), (5, 8), (5, 9), (5, 10), (6, 8), (6, 9), (6, 10), (6, 11), (7, 9), (7, 10), (7, 11),
        (8, 9), (8, 10), (8, 11), (9, 11),
    ]),
    Graph(12, [
        (0, 2), (0, 8), (0, 10), (1, 2), (1, 7), (1, 9), (1, 10), (1, 11), (2, 9), (3, 4), (3, 5),
        (3, 7), (3, 10), (4, 6), (4, 9), (4, 10), (5, 6), (5, 8), (5, 11), (6, 9), (6, 10), (6, 11),
        (7, 9), (7, 10), (7, 11), (8, 9), (8, 10), (8, 11), (9, 11),
    ]),
]


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, bits) if keep])


@st.composite
def berge_graphs(draw, min_n: int = 1, max_n: int = 9, max_omega: int | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_berge(n, random.Random(seed), max_omega)
