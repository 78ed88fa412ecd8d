"""Brute-force ground truth for small graphs.

Nothing here calls the production algorithms: every routine works from
plain Python sets built off ``Graph.has_edge``, so agreement between an
oracle and an algorithm is evidence rather than tautology.  Each oracle
refuses inputs above its budget instead of degrading.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .graph import Graph


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_partition_vertices: int = 7
    max_subsets: int = 2_000_000

    def __post_init__(self):
        if min(self.max_vertices, self.max_partition_vertices, self.max_subsets) < 1:
            raise ValueError("budgets must be positive")

    def check(self, n: int, limit: int | None = None) -> None:
        limit = self.max_vertices if limit is None else limit
        if n > limit:
            raise BudgetExceeded(f"{n} vertices exceeds oracle budget of {limit}")


DEFAULT_BUDGET = OracleBudget()


def _nbrs(g: Graph, anti: bool = False) -> list[set[int]]:
    return [{u for u in range(g.n) if u != v and g.has_edge(u, v) != anti} for v in range(g.n)]


def _pieces(nbrs: list[set[int]], verts: set[int]) -> list[frozenset[int]]:
    left = set(verts)
    out = []
    while left:
        start = min(left)
        stack = [start]
        comp = {start}
        while stack:
            v = stack.pop()
            for u in nbrs[v] & left:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        left -= comp
        out.append(frozenset(comp))
    return out


def _set(x) -> set[int]:
    """Accept a bitmask or an iterable of vertices."""
    if isinstance(x, int):
        return {v for v in range(x.bit_length()) if x >> v & 1}
    return set(x)


def induced_paths(nbrs: list[set[int]], u: int, v: int, interior: set[int]) -> Iterator[list[int]]:
    """All induced ``u``-``v`` paths whose interior lies in ``interior`` (``u``, ``v`` nonadjacent)."""

    def extend(path: list[int], used: set[int]):
        last = path[-1]
        if v in nbrs[last] and len(path) > 1:
            # v must see only the last vertex of the path
            if not any(v in nbrs[w] for w in path[:-1]):
                yield path + [v]
            return
        for w in sorted(nbrs[last] & interior - used):
            if any(w in nbrs[x] for x in path[:-1]):
                continue
            yield from extend(path + [w], used | {w})

    if v in nbrs[u]:
        return
    yield from extend([u], {u})


def odd_holes(nbrs: list[set[int]]) -> Iterator[list[int]]:
    """Induced cycles of odd length >= 5, each reported from its smallest vertex."""
    n = len(nbrs)
    for s in range(n):
        allowed = set(range(s + 1, n))

        def grow(path: list[int]):
            last = path[-1]
            for w in sorted(nbrs[last] & allowed - set(path)):
                if any(w in nbrs[x] for x in path[1:-1]):
                    continue
                closes = s in nbrs[w]
                if closes:
                    if len(path) >= 4 and len(path) % 2 == 0:
                        yield path + [w]
                    continue
                yield from grow(path + [w])

        for t in sorted(nbrs[s] & allowed):
            yield from grow([s, t])


def berge_obstruction(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[str, list[int]] | None:
    """An odd hole (``("hole", cycle)``) or odd antihole (``("antihole", cycle)``), or None."""
    budget.check(g.n)
    for anti, name in ((False, "hole"), (True, "antihole")):
        for cycle in odd_holes(_nbrs(g, anti)):
            return name, cycle
    return None


def is_berge_bruteforce(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """No odd hole in ``g`` and none in its complement."""
    return berge_obstruction(g, budget) is None


def max_clique_bruteforce(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    budget.check(g.n)
    nbrs = _nbrs(g)
    best = 0

    def grow(size: int, cand: set[int]):
        nonlocal best
        best = max(best, size)
        if size + len(cand) <= best:
            return
        for v in sorted(cand):
            grow(size + 1, cand & nbrs[v])
            cand = cand - {v}
            if size + len(cand) <= best:
                return

    grow(0, set(range(g.n)))
    return best


def stability_number(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return max_clique_bruteforce(g.complement(), budget)


def exact_chromatic(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, dict[int, int]]:
    """Chromatic number and an optimal colouring (colours ``1..chi``) by backtracking."""
    budget.check(g.n)
    n = g.n
    if n == 0:
        return 0, {}
    nbrs = _nbrs(g)
    lower = max_clique_bruteforce(g, budget)
    # DSATUR-style: pick the vertex with most distinct neighbour colours
    for k in range(max(lower, 1), n + 1):
        colour: dict[int, int] = {}

        def solve() -> bool:
            if len(colour) == n:
                return True
            best, best_key = -1, None
            for v in range(n):
                if v in colour:
                    continue
                sat = len({colour[u] for u in nbrs[v] if u in colour})
                key = (sat, len(nbrs[v]))
                if best_key is None or key > best_key:
                    best, best_key = v, key
            used = {colour[u] for u in nbrs[best] if u in colour}
            top = max(colour.values(), default=0)
            for c in range(1, min(k, top + 1) + 1):
                if c in used:
                    continue
                colour[best] = c
                if solve():
                    return True
                del colour[best]
            return False

        if solve():
            return k, dict(colour)
    raise AssertionError("unreachable")


def _classify_by_definition(nbrs, anti_nbrs, a: set[int], b: set[int]) -> tuple[bool, bool]:
    """``(is_skew, is_tight)`` for the partition ``(a, b)``."""
    acomps = _pieces(nbrs, a)
    bparts = _pieces(anti_nbrs, b)
    if len(acomps) < 2 or len(bparts) < 2:
        return False, False
    for v in a:
        if any(part <= nbrs[v] for part in bparts):
            return True, False
    for v in b:
        if any(not (comp & nbrs[v]) for comp in acomps):
            return True, False
    return True, True


@dataclass(frozen=True)
class OraclePartition:
    A: frozenset[int]
    B: frozenset[int]
    tight: bool
    balanced: bool | None = None

    @property
    def key(self):
        return tuple(sorted(self.B)), tuple(sorted(self.A))


def enumerate_skew_partitions_bruteforce(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET, with_balance: bool = False
) -> list[OraclePartition]:
    """Every skew partition of ``g`` with its tightness (and balance, on request)."""
    budget.check(g.n, budget.max_partition_vertices)
    nbrs = _nbrs(g)
    anti = _nbrs(g, True)
    verts = range(g.n)
    out = []
    for r in range(2, g.n - 1):
        for bt in combinations(verts, r):
            b = set(bt)
            a = set(verts) - b
            skew, tight = _classify_by_definition(nbrs, anti, a, b)
            if not skew:
                continue
            bal = is_balanced_bruteforce(g, a, b, budget) if with_balance else None
            out.append(OraclePartition(frozenset(a), frozenset(b), tight, bal))
    return sorted(out, key=lambda p: p.key)


def is_loose_by_definition(g: Graph, a, b) -> bool:
    a, b = _set(a), _set(b)
    skew, tight = _classify_by_definition(_nbrs(g), _nbrs(g, True), a, b)
    return skew and not tight


def is_skew_by_definition(g: Graph, a, b) -> bool:
    return _classify_by_definition(_nbrs(g), _nbrs(g, True), _set(a), _set(b))[0]


def is_balanced_bruteforce(g: Graph, a, b, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Every induced path between nonadjacent B-vertices through A, and every
    antipath between adjacent A-vertices through B, has even length."""
    budget.check(g.n)
    a, b = _set(a), _set(b)
    for ends, inner, anti in ((b, a, False), (a, b, True)):
        nb = _nbrs(g, anti)
        for u, v in combinations(sorted(ends), 2):
            if v in nb[u]:
                continue
            for path in induced_paths(nb, u, v, inner):
                if (len(path) - 1) % 2:
                    return False
    return True


def odd_path_witness(g: Graph, a, b, budget: OracleBudget = DEFAULT_BUDGET):
    """An odd path or antipath certifying imbalance, as ``(vertices, is_antipath)``, or None."""
    budget.check(g.n)
    a, b = _set(a), _set(b)
    for ends, inner, anti in ((b, a, False), (a, b, True)):
        nb = _nbrs(g, anti)
        for u, v in combinations(sorted(ends), 2):
            if v in nb[u]:
                continue
            for path in induced_paths(nb, u, v, inner):
                if (len(path) - 1) % 2:
                    return path, anti
    return None


def clique_cutsets_bruteforce(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset[int]]:
    """All clique cutsets, the empty set included when ``g`` is disconnected."""
    budget.check(g.n)
    nbrs = _nbrs(g)
    verts = set(range(g.n))
    out = []
    for r in range(0, g.n - 1):
        for zt in combinations(range(g.n), r):
            z = set(zt)
            if all(v in nbrs[u] for u, v in combinations(zt, 2)) and len(_pieces(nbrs, verts - z)) >= 2:
                out.append(frozenset(z))
    return out


def has_star_cutset_bruteforce(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    budget.check(g.n)
    nbrs = _nbrs(g)
    verts = set(range(g.n))
    for r in range(2, g.n - 1):
        for bt in combinations(range(g.n), r):
            b = set(bt)
            if any(b - {c} <= nbrs[c] for c in b) and len(_pieces(nbrs, verts - b)) >= 2:
                return True
    return False


def is_t_cutset_by_definition(g: Graph, b, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """``b`` is a T-cutset: ``(V - b, b)`` is skew with two vertices in different
    components of ``V - b`` complete to one anticomponent of ``b``."""
    budget.check(g.n)
    b = _set(b)
    nbrs = _nbrs(g)
    a = set(range(g.n)) - b
    acomps = _pieces(nbrs, a)
    bparts = _pieces(_nbrs(g, True), b)
    if len(acomps) < 2 or len(bparts) < 2:
        return False
    for part in bparts:
        hit = [c for c in acomps if any(part <= nbrs[v] for v in c)]
        if len(hit) >= 2:
            return True
    return False


def is_cutset_by_definition(g: Graph, x) -> bool:
    x = _set(x)
    return len(_pieces(_nbrs(g), set(range(g.n)) - x)) >= 2


def grow_stable(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[int]:
    """A connected vertex set of size at most ``2*alpha - 1`` whose stability number is ``alpha``.

    Grows a stable set ``S`` inside a maximum stable set ``S'`` together with
    connectors ``T`` (``|T| < |S|``) along shortest paths from ``S`` to
    ``S' - S``, exchanging a vertex of ``S'`` when a path has length three
    and its third vertex has a single neighbour in ``S' - S``.
    """
    budget.check(g.n)
    nbrs = _nbrs(g)
    if g.n == 0 or len(_pieces(nbrs, set(range(g.n)))) != 1:
        raise ValueError("grow_stable needs a nonnull connected graph")
    anti = _nbrs(g, True)
    alpha = stability_number(g, budget)
    target = _max_stable(anti, alpha)
    s = {min(target)}
    t: set[int] = set()
    while len(s) < alpha:
        path = _shortest_path_between(nbrs, s, target - s)
        k = len(path)
        if k == 3:
            s.add(path[2])
            t.add(path[1])
        elif k == 4:
            p1, p2, p3, p4 = path
            others = nbrs[p3] & (target - s)
            if len(others) >= 2:
                q = min(others - {p4})
                s |= {p4, q}
                t |= {p2, p3}
            else:
                target = (target - {p4}) | {p3}
                s.add(p3)
                t.add(p2)
        else:
            raise AssertionError(f"shortest path of {k} vertices contradicts maximality")
        assert len(t) < len(s)
    return frozenset(s | t)


def _max_stable(anti: list[set[int]], alpha: int) -> set[int]:
    for cand in combinations(range(len(anti)), alpha):
        if all(v in anti[u] for u, v in combinations(cand, 2)):
            return set(cand)
    raise AssertionError("no stable set of the claimed size")


def _shortest_path_between(nbrs, src: set[int], dst: set[int]) -> list[int]:
    parent = {v: None for v in src}
    frontier = sorted(src)
    while frontier:
        nxt = []
        for v in frontier:
            for u in sorted(nbrs[v]):
                if u in parent:
                    continue
                parent[u] = v
                if u in dst:
                    path = [u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    raise ValueError("no path")


def count_pellets(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Number of ``2k``-sets that are anticonnected and contain a ``k``-clique."""
    if g.n < 2 * k:
        return 0
    if comb(g.n, 2 * k) > budget.max_subsets:
        raise BudgetExceeded(f"C({g.n}, {2 * k}) subsets exceeds budget")
    nbrs = _nbrs(g)
    anti = _nbrs(g, True)
    count = 0
    for p in combinations(range(g.n), 2 * k):
        ps = set(p)
        if len(_pieces(anti, ps)) != 1:
            continue
        if any(all(v in nbrs[u] for u, v in combinations(q, 2)) for q in combinations(p, k)):
            count += 1
    return count


class RousselRubioFailure(AssertionError):
    """No outcome of the Roussel-Rubio lemma holds for a valid configuration."""


def roussel_rubio_witness(g: Graph, x, path: list[int], budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Which outcome (1, 2 or 3) of the Roussel-Rubio lemma holds for ``(x, path)``.

    1: two adjacent path vertices are complete to ``x``.
    2: the path has length >= 5 and nonadjacent ``a, b`` in ``x`` see
       respectively only the second and only the second-last vertex among
       the path interior.
    3: the path has length 3 and an odd antipath through ``x`` joins its
       two interior vertices.
    """
    budget.check(g.n)
    x = _set(x)
    nbrs = _nbrs(g)
    anti = _nbrs(g, True)
    if not is_berge_bruteforce(g, budget):
        raise ValueError("graph is not Berge")
    if not x or len(_pieces(anti, x)) != 1:
        raise ValueError("x must be nonempty and anticonnected")
    if set(path) & x or len(path) % 2 or len(set(path)) != len(path):
        raise ValueError("path must be odd, vertex-distinct and avoid x")
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            if (path[j] in nbrs[path[i]]) != (j == i + 1):
                raise ValueError("path is not induced")
    if not (x <= nbrs[path[0]] and x <= nbrs[path[-1]]):
        raise ValueError("path ends must be complete to x")

    complete = [x <= nbrs[p] for p in path]
    if any(complete[i] and complete[i + 1] for i in range(len(path) - 1)):
        return 1
    length = len(path) - 1
    inner = path[1:-1]
    if length >= 5:
        second, second_last = path[1], path[-2]
        for a in sorted(x):
            for b in sorted(x):
                if a == b or b in nbrs[a]:
                    continue
                if (nbrs[a] & set(inner)) == {second} and (nbrs[b] & set(inner)) == {second_last}:
                    return 2
    if length == 3:
        u, v = path[1], path[2]
        for ap in induced_paths(anti, u, v, x):
            if (len(ap) - 1) % 2:
                return 3
    raise RousselRubioFailure(f"no outcome for x={sorted(x)}, path={path}")
