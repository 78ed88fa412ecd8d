"""Candidate cutset list in the style of Kennedy and Reed.

For thresholds ``k2 <= k1`` and a root vertex ``r``, the auxiliary graph
``H(k1, k2, r)`` adds an edge ``uv`` whenever the common neighbourhood of
``u`` and ``v`` has an anticomponent of size at least ``k1``, or the
anticomponent containing ``r`` there has size at least ``k2``.  For a skew
partition ``(A, B)`` whose ``B`` is not a T-cutset, ``B`` is a clique cutset
of one of these graphs, so collecting the clique-cutset kernels of all of
them yields a list of cutsets of ``g`` with some member inside every such
``B``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cutsets import clique_cutset_kernels
from .graph import Graph, anticomponents, set_key

_NEVER = float("inf")


@dataclass(frozen=True)
class PairAnticompTable:
    """Anticomponents of ``g[N(u) & N(v)]`` for every pair ``u < v``.

    ``parts[(u, v)]`` lists the anticomponents (bitmasks, canonical order),
    ``largest[(u, v)]`` is the size of the biggest one (0 if there are none).
    """

    n: int
    parts: dict[tuple[int, int], tuple[int, ...]]
    largest: dict[tuple[int, int], int]

    def size_containing(self, u: int, v: int, w: int) -> int:
        """Size of the anticomponent holding ``w``, or 0 if ``w`` is not a common neighbour."""
        if u > v:
            u, v = v, u
        for part in self.parts[(u, v)]:
            if part >> w & 1:
                return part.bit_count()
        return 0

    def realized_largest(self) -> list[int]:
        return sorted({m for m in self.largest.values() if m})

    def realized_sizes(self) -> list[int]:
        return sorted({p.bit_count() for ps in self.parts.values() for p in ps})


def pair_anticomp_table(g: Graph) -> PairAnticompTable:
    adj = g.adj
    parts = {}
    largest = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            ps = tuple(anticomponents(g, adj[u] & adj[v]))
            parts[(u, v)] = ps
            largest[(u, v)] = max((p.bit_count() for p in ps), default=0)
    return PairAnticompTable(g.n, parts, largest)


def _aux_rows(g: Graph, table: PairAnticompTable, k1: float, k2: float, r: int) -> tuple[int, ...]:
    rows = list(g.adj)
    for (u, v), ps in table.parts.items():
        if rows[u] >> v & 1:
            continue
        join = table.largest[(u, v)] >= k1
        if not join and k2 != _NEVER:
            for p in ps:
                if p >> r & 1:
                    join = p.bit_count() >= k2
                    break
        if join:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return tuple(rows)


def aux_graph(g: Graph, table: PairAnticompTable, k1: int, k2: int, r: int) -> Graph:
    """The auxiliary graph ``H(k1, k2, r)``; requires ``1 <= k2 <= k1 <= n``."""
    if not 1 <= k2 <= k1 <= g.n:
        raise ValueError(f"need 1 <= k2 <= k1 <= n, got k1={k1}, k2={k2}, n={g.n}")
    if not 0 <= r < g.n:
        raise ValueError(f"root vertex {r} out of range")
    return Graph.from_rows(_aux_rows(g, table, k1, k2, r))


def _round_up(values: list[int], k: int) -> float:
    for x in values:
        if x >= k:
            return x
    return _NEVER


def threshold_classes(table: PairAnticompTable) -> list[tuple[float, float]]:
    """Distinct ``(k1, k2)`` behaviours over ``1 <= k2 <= k1 <= n``.

    Each threshold is rounded up to the next value that actually occurs in
    the table (or to infinity), which leaves the auxiliary graph unchanged.
    """
    m1 = table.realized_largest()
    sizes = table.realized_sizes()
    seen = set()
    for k1 in range(1, table.n + 1):
        for k2 in range(1, k1 + 1):
            seen.add((_round_up(m1, k1), _round_up(sizes, k2)))
    return sorted(seen)


def aux_graphs(g: Graph, table: PairAnticompTable | None = None) -> list[Graph]:
    """All distinct auxiliary graphs, in a canonical order."""
    if table is None:
        table = pair_anticomp_table(g)
    seen = {}
    for k1, k2 in threshold_classes(table):
        roots = range(g.n) if k2 != _NEVER else range(min(1, g.n))
        for r in roots:
            rows = _aux_rows(g, table, k1, k2, r)
            if rows not in seen:
                seen[rows] = len(seen)
    return [Graph.from_rows(rows) for rows in seen]


def _kernels_of(rows_batch: list[tuple[int, ...]]) -> list[list[int]]:
    return [clique_cutset_kernels(Graph.from_rows(rows)) for rows in rows_batch]


def kennedy_reed_list(g: Graph, workers: int = 1) -> list[int]:
    """Candidate cutsets of ``g``: the union of clique-cutset kernels of every ``H(k1, k2, r)``.

    Every member is a cutset of ``g``; the list has at most ``n**4`` members
    and contains a subset of ``B`` for every skew partition ``(A, B)`` in
    which ``B`` is not a T-cutset.  The result is sorted canonically and is
    the same for any ``workers`` count.
    """
    hs = aux_graphs(g)
    found: set[int] = set()
    if workers > 1 and len(hs) > 1:
        rows = [h.adj for h in hs]
        step = -(-len(rows) // (4 * workers))
        batches = [rows[i:i + step] for i in range(0, len(rows), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_kernels_of, batches):
                for ks in result:
                    found.update(ks)
    else:
        for h in hs:
            found.update(clique_cutset_kernels(h))
    return sorted(found, key=set_key)


def covers(candidates: list[int], b: int) -> bool:
    """True if some candidate is a subset of ``b``."""
    return any(not x & ~b for x in candidates)

