"""Graph generators for fixtures, tests and the command line."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph
from .oracles import DEFAULT_BUDGET, is_berge_bruteforce

TUSP8_LABELS = ("a1", "a1'", "a2", "a2'", "x1", "x2", "y1", "y2")


def tusp8() -> Graph:
    """Eight-vertex Berge graph whose skew partition ``({a's}, {x's, y's})`` is tight and unbalanced.

    Vertex order follows ``TUSP8_LABELS``.
    """
    idx = {name: i for i, name in enumerate(TUSP8_LABELS)}
    pairs = [
        ("a1", "a1'"), ("a2", "a2'"),
        ("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("x2", "y2"),
        ("x1", "a1"), ("x1", "a2"), ("x2", "a1'"), ("x2", "a2'"),
        ("y1", "a1"), ("y1", "a2'"), ("y2", "a1'"), ("y2", "a2"),
    ]
    return Graph(8, [(idx[u], idx[v]) for u, v in pairs])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """A random spanning tree plus independent extra edges."""
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    edges |= {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}
    return Graph(n, edges)


def random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    side = [rng.random() < 0.5 for _ in range(n)]
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v] and rng.random() < p])


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    return Graph(len(edges), [(i, j) for i, j in combinations(range(len(edges)), 2) if set(edges[i]) & set(edges[j])])


def random_chordal(n: int, rng: random.Random, k: int = 3) -> Graph:
    """Each new vertex joins a random clique of the graph so far (a k-tree-like construction)."""
    edges = set()
    cliques = [[0]]
    for v in range(1, n):
        base = rng.choice(cliques)
        chosen = [u for u in base if rng.random() < 0.8]
        edges |= {(u, v) for u in chosen}
        cliques.append((chosen + [v])[-k:])
    return Graph(n, edges)


def random_tight_skew(n: int, rng: random.Random) -> tuple[Graph, int]:
    """A random graph on ``n >= 8`` vertices with a planted tight skew partition.

    Returns the graph and the planted ``A`` side as a bitmask.  Two connected
    pieces form ``A`` and two anticonnected pieces, complete to each other,
    form ``B``.  Every ``B``-vertex is given a neighbour in each piece of
    ``A`` and every ``A``-vertex a non-neighbour in each piece of ``B``;
    the other edges between the sides are random.
    """
    if n < 8:
        raise ValueError("a tight skew partition needs at least 8 vertices")
    while True:
        size_a = rng.randint(4, n - 4)
        first_a = rng.randint(2, size_a - 2)
        first_b = rng.randint(2, n - size_a - 2)
        sizes = [first_a, size_a - first_a, first_b, n - size_a - first_b]
        edges: set[tuple[int, int]] = set()
        pieces, start = [], 0
        for i, size in enumerate(sizes):
            h = random_connected(size, rng.uniform(0.2, 0.8), rng)
            if i >= 2:
                h = h.complement()
            edges |= {(u + start, v + start) for u, v in h.edges()}
            pieces.append(range(start, start + size))
            start += size
        edges |= {(u, v) for u in pieces[2] for v in pieces[3]}
        side_a = [*pieces[0], *pieces[1]]
        side_b = [*pieces[2], *pieces[3]]
        forced = {(rng.choice(pieces[j]), v) for v in side_b for j in (0, 1)}
        banned = _non_neighbours(side_a, pieces[2:], forced, rng)
        if banned is None:
            continue
        p = rng.uniform(0.2, 0.8)
        edges |= {
            (u, v)
            for u in side_a
            for v in side_b
            if (u, v) in forced or ((u, v) not in banned and rng.random() < p)
        }
        perm = list(range(n))
        rng.shuffle(perm)
        g = Graph(n, {(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges})
        return g, sum(1 << perm[u] for u in side_a)


def _non_neighbours(side_a, pieces, forced, rng) -> set | None:
    """One non-neighbour in each piece for every vertex of ``side_a``, avoiding forced edges."""
    banned = set()
    for u in side_a:
        for piece in pieces:
            free = [v for v in piece if (u, v) not in forced]
            if not free:
                return None
            banned.add((u, rng.choice(free)))
    return banned


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.edges() + [(u + shift, v + shift) for u, v in h.edges()])


def join(g: Graph, h: Graph) -> Graph:
    return disjoint_union(g.complement(), h.complement()).complement()


def random_berge(n: int, rng: random.Random, max_omega: int | None = None) -> Graph:
    """A random Berge graph on ``n`` vertices drawn from a mix of perfect families.

    Bipartite graphs, line graphs of bipartite graphs, chordal graphs,
    their complements, joins and unions, and filtered random graphs.
    Graphs with clique number above ``max_omega`` are redrawn.
    """
    from .colouring import max_clique

    while True:
        g = _draw_berge(n, rng)
        if max_omega is None or max_clique(g)[0] <= max_omega:
            return g


def _draw_berge(n: int, rng: random.Random) -> Graph:
    # filtered random graphs only where the brute-force Berge check is affordable
    kind = rng.randrange(7 if n <= DEFAULT_BUDGET.max_vertices else 5)
    if kind == 0:
        return random_bipartite(n, rng.uniform(0.2, 0.8), rng)
    if kind == 1:
        while True:
            bip = random_bipartite(rng.randint(n // 2 + 1, n + 2), rng.uniform(0.2, 0.6), rng)
            lg = line_graph(bip)
            if lg.n >= n:
                sub, _ = lg.induced((1 << n) - 1)
                return sub
    if kind == 2:
        return random_chordal(n, rng, rng.randint(2, 4))
    if kind == 3:
        return _draw_berge(n, rng).complement()
    if kind == 4 and n >= 2:
        k = rng.randint(1, n - 1)
        pick = join if rng.random() < 0.5 else disjoint_union
        return pick(_draw_berge(k, rng), _draw_berge(n - k, rng))
    while True:
        g = random_graph(n, rng.uniform(0.2, 0.8), rng)
        if is_berge_bruteforce(g):
            return g
