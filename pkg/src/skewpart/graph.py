"""Dense undirected graphs with bit-row adjacency.

Vertices are the integers ``0..n-1``.  A vertex set is a plain Python ``int``
used as a bitmask (bit ``v`` set means ``v`` is a member), so neighbourhood
intersections and complete/anticomplete tests are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    """Smallest vertex of a nonempty mask."""
    return (mask & -mask).bit_length() - 1


def size(mask: int) -> int:
    return mask.bit_count()


def set_key(mask: int) -> tuple[int, ...]:
    """Canonical sort key for vertex sets: the ascending member tuple."""
    return tuple(members(mask))


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.
    """

    __slots__ = ("n", "adj", "_complement", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(rows)
        self._complement = None
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> Graph:
        """Build from adjacency bit rows; the rows must be symmetric and loop-free."""
        g = cls.__new__(cls)
        g.adj = tuple(rows)
        g.n = len(g.adj)
        g._complement = None
        g._hash = None
        for v, row in enumerate(g.adj):
            if row >> g.n or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in iter_members(row):
                if not g.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    @classmethod
    def from_adjacency(cls, matrix) -> Graph:
        """Build from a square 0/1 (or boolean) adjacency matrix."""
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if a.diagonal().any():
            raise ValueError("adjacency matrix has loops")
        if not (a == a.T).all():
            raise ValueError("adjacency matrix is not symmetric")
        rows = []
        for i in range(a.shape[0]):
            rows.append(mask_of(np.flatnonzero(a[i]).tolist()))
        return cls.from_rows(rows)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u in range(self.n):
            for v in iter_members(self.adj[u]):
                a[u, v] = True
        return a

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbourhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    def complement(self) -> Graph:
        if self._complement is None:
            full = self.full
            rows = [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)]
            c = Graph.from_rows(rows)
            c._complement = self
            self._complement = c
        return self._complement

    def induced(self, x: int) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``x``, relabelled ``0..|x|-1`` in ascending order.

        Returns the subgraph and the list mapping new labels to old vertices.
        """
        verts = members(x)
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            rows.append(mask_of(index[u] for u in iter_members(self.adj[v] & x)))
        return Graph.from_rows(rows), verts

    def is_clique(self, x: int) -> bool:
        for v in iter_members(x):
            if (self.adj[v] | (1 << v)) & x != x:
                return False
        return True

    def is_stable(self, x: int) -> bool:
        return all(not self.adj[v] & x for v in iter_members(x))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    return g.complement()


def _pieces(rows: tuple[int, ...], x: int) -> list[int]:
    out = []
    while x:
        seed = x & -x
        comp = seed
        frontier = seed
        x ^= seed
        while frontier:
            reach = 0
            for v in iter_members(frontier):
                reach |= rows[v]
            frontier = reach & x
            x &= ~frontier
            comp |= frontier
        out.append(comp)
    return out


def components(g: Graph, x: int) -> list[int]:
    """Components of ``g[x]``, ordered by smallest member."""
    return _pieces(g.adj, x)


def anticomponents(g: Graph, x: int) -> list[int]:
    """Anticomponents of ``g[x]`` (components of the complement), ordered by smallest member."""
    return _pieces(g.complement().adj, x)


def is_connected(g: Graph, x: int) -> bool:
    """True unless ``g[x]`` has two or more components (the null graph counts as connected)."""
    return len(components(g, x)) <= 1


def is_anticonnected(g: Graph, x: int) -> bool:
    return len(anticomponents(g, x)) <= 1


def is_complete_to(g: Graph, v: int, x: int) -> bool:
    if x >> v & 1:
        raise ValueError(f"vertex {v} belongs to the set")
    return g.adj[v] & x == x


def is_anticomplete_to(g: Graph, v: int, x: int) -> bool:
    if x >> v & 1:
        raise ValueError(f"vertex {v} belongs to the set")
    return not g.adj[v] & x


def set_complete_to(g: Graph, x: int, y: int) -> bool:
    """True if every vertex of ``x`` is adjacent to every vertex of ``y`` (disjoint sets)."""
    return all(g.adj[v] & y == y for v in iter_members(x))


@dataclass(frozen=True)
class Path:
    """An induced path of ``g`` (or of its complement when ``anti`` is set)."""

    vertices: tuple[int, ...]
    anti: bool = False

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def is_valid(self, g: Graph) -> bool:
        h = g.complement() if self.anti else g
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if h.has_edge(vs[i], vs[j]) != (j == i + 1):
                    return False
        return True


def shortest_induced_path(g: Graph, u: int, v: int, interior: int) -> Path | None:
    """A shortest ``u``-``v`` path in ``g[interior + {u, v}]``, or None if there is none.

    Shortest paths are induced, so the result is an induced path.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if (interior >> u | interior >> v) & 1:
        raise ValueError("endpoints must lie outside the interior set")
    allowed = interior | (1 << v)
    parent = {u: -1}
    frontier = [u]
    seen = (1 << u)
    while frontier and v not in parent:
        nxt = []
        for w in frontier:
            for x in iter_members(g.adj[w] & allowed & ~seen):
                seen |= 1 << x
                parent[x] = w
                nxt.append(x)
        frontier = nxt
    if v not in parent:
        return None
    seq = [v]
    while parent[seq[-1]] != -1:
        seq.append(parent[seq[-1]])
    return Path(tuple(reversed(seq)))


def enumerate_c4_holes(g: Graph) -> list[tuple[int, int, int, int]]:
    """All induced 4-cycles ``a-b-c-d-a``, once each.

    Canonical form: ``a`` is the smallest vertex of the hole and ``b < d`` are
    its two neighbours on the hole.
    """
    adj = g.adj
    holes = []
    for a in range(g.n):
        above = ~((1 << (a + 1)) - 1)
        na = adj[a] & above
        for b in iter_members(na):
            for d in iter_members(na & ~adj[b] & ~((1 << (b + 1)) - 1)):
                for c in iter_members(adj[b] & adj[d] & ~adj[a] & above):
                    holes.append((a, b, c, d))
    return holes
