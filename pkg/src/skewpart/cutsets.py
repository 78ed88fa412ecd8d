"""Star cutsets, T-cutsets and clique-cutset decomposition trees."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    anticomponents,
    components,
    iter_members,
    mask_of,
    set_key,
)


def is_cutset(g: Graph, x: int) -> bool:
    """True iff removing ``x`` leaves at least two components."""
    return len(components(g, g.full & ~x)) >= 2


def find_star_cutset(g: Graph) -> int | None:
    """Return a star cutset of ``g`` or None if there is none.

    Vertices are scanned in ascending order.  For each vertex ``v`` three
    candidate shapes are tried: the whole closed neighbourhood, the closed
    neighbourhood minus one neighbour with no edges to the rest, and (for a
    dominating ``v``) everything except a nonadjacent pair of neighbours.
    On a Berge graph the partition this induces is balanced.
    """
    full = g.full
    adj = g.adj
    for v in range(g.n):
        nv = adj[v]
        if not nv:
            continue
        closed = nv | (1 << v)
        rest = full & ~closed
        comps = components(g, rest)
        if len(comps) >= 2:
            return closed
        deg = nv.bit_count()
        if deg >= 2 and len(comps) == 1:
            c = comps[0]
            for u in iter_members(nv):
                if not adj[u] & c:
                    return closed & ~(1 << u)
        if deg >= 3 and closed == full:
            for x in iter_members(nv):
                # smallest y > x in N(v) not adjacent to x
                later = nv & ~adj[x] & ~((1 << (x + 1)) - 1)
                if later:
                    return full & ~(1 << x) & ~(later & -later)
    return None


def find_t_cutset(g: Graph) -> int | None:
    """Return a T-cutset of ``g`` or None.

    For nonadjacent ``a1 < a2`` and each anticomponent ``B1`` of their common
    neighbourhood, ``B2`` collects the outside vertices complete to ``B1``;
    ``B1 | B2`` is returned when it is nonempty on the ``B2`` side and
    separates ``a1`` from ``a2``.
    """
    n = g.n
    adj = g.adj
    full = g.full
    for a1 in range(n):
        for a2 in range(a1 + 1, n):
            if adj[a1] >> a2 & 1:
                continue
            pair = (1 << a1) | (1 << a2)
            for b1 in anticomponents(g, adj[a1] & adj[a2]):
                b2 = 0
                for w in iter_members(full & ~b1 & ~pair):
                    if adj[w] & b1 == b1:
                        b2 |= 1 << w
                if not b2:
                    continue
                for comp in components(g, full & ~(b1 | b2)):
                    if comp >> a1 & 1:
                        if not comp >> a2 & 1:
                            return b1 | b2
                        break
    return None


@dataclass
class CCNode:
    """Node of a clique-cutset decomposition tree."""

    vertices: int
    children: tuple[CCNode, CCNode] | None = None

    @property
    def separator(self) -> int | None:
        if self.children is None:
            return None
        return self.children[0].vertices & self.children[1].vertices


@dataclass
class CCDecompTree:
    root: CCNode
    nodes: list[CCNode] = field(default_factory=list)

    def internal_nodes(self) -> list[CCNode]:
        return [t for t in self.nodes if t.children is not None]

    def leaves(self) -> list[CCNode]:
        return [t for t in self.nodes if t.children is None]


def _mcs_m(g: Graph) -> tuple[list[int], list[int], int]:
    n = g.n
    adj = g.adj
    weight = [0] * n
    fill = list(adj)
    unnumbered = g.full
    order = [0] * n
    generators = 0
    previous = -1
    for i in range(n - 1, -1, -1):
        best = -1
        v = -1
        for u in iter_members(unnumbered):
            if weight[u] > best:
                best = weight[u]
                v = u
        order[i] = v
        # no weight increase: the higher neighbourhood of v is a minimal separator
        if best <= previous:
            generators |= 1 << v
        previous = best
        unnumbered &= ~(1 << v)
        by_weight: dict[int, int] = {}
        for u in iter_members(unnumbered):
            by_weight[weight[u]] = by_weight.get(weight[u], 0) | (1 << u)
        hit = 0
        below = 0  # unnumbered vertices of weight < current level
        for level in sorted(by_weight):
            # vertices reachable from v through interiors of weight < level
            reach = 0
            frontier = adj[v] & below
            while frontier:
                reach |= frontier
                nxt = 0
                for w in iter_members(frontier):
                    nxt |= adj[w]
                frontier = nxt & below & ~reach
            touch = adj[v]
            for w in iter_members(reach):
                touch |= adj[w]
            hit |= touch & by_weight[level]
            below |= by_weight[level]
        for u in iter_members(hit):
            weight[u] += 1
            fill[u] |= 1 << v
            fill[v] |= 1 << u
    return order, fill, generators


def minimal_elimination_ordering(g: Graph) -> tuple[list[int], list[int]]:
    """MCS-M: a minimal elimination ordering and its fill-in graph.

    Returns ``(order, fill)`` where ``order[i]`` is the vertex numbered ``i``
    (``order[0]`` is eliminated first) and ``fill[v]`` is the neighbourhood of
    ``v`` in the minimal triangulation.
    """
    order, fill, _ = _mcs_m(g)
    return order, fill


def _atoms(g: Graph) -> list[tuple[int, int]]:
    """Split a connected graph along clique minimal separators.

    Walks a minimal elimination ordering; whenever the higher neighbourhood
    ``S`` of a generator ``x`` in the triangulation is a clique of ``g``
    separating what remains, the component of ``x`` plus ``S`` is split off.
    Returns the ``(atom, separator)`` pairs in order.
    """
    order, fill, generators = _mcs_m(g)
    higher = [0] * g.n
    later = 0
    for v in reversed(order):
        higher[v] = fill[v] & later
        later |= 1 << v

    splits = []
    rest = g.full
    for x in order:
        if not generators >> x & 1 or not rest >> x & 1:
            continue
        s = higher[x]
        if s & ~rest or not g.is_clique(s):
            continue
        comp = next(c for c in components(g, rest & ~s) if c >> x & 1)
        if not rest & ~(s | comp):
            continue
        splits.append((comp | s, s))
        rest &= ~comp
    return splits


def _decompose(g: Graph, x: int, nodes: list[CCNode]) -> CCNode:
    node = CCNode(x)
    nodes.append(node)
    comps = components(g, x)
    if len(comps) >= 2:
        # the empty clique separates a disconnected piece
        node.children = (_decompose(g, comps[0], nodes), _decompose(g, x & ~comps[0], nodes))
        return node
    sub, labels = g.induced(x)
    current = node
    rest = x
    for atom, sep in _atoms(sub):
        atom = mask_of(labels[i] for i in iter_members(atom))
        sep = mask_of(labels[i] for i in iter_members(sep))
        rest &= ~(atom & ~sep)
        leaf = CCNode(atom)
        right = CCNode(rest)
        current.children = (leaf, right)
        nodes.extend((leaf, right))
        current = right
    return node


def cc_decomposition_tree(g: Graph) -> CCDecompTree:
    """Decompose ``g`` along clique cutsets.

    The empty set counts as a clique, so a disconnected graph is first split
    into its components; each component is then split along clique cutsets
    found from a minimal elimination ordering.  A connected piece of ``p``
    vertices contributes at most ``p - 2`` internal nodes.
    """
    nodes: list[CCNode] = []
    root = _decompose(g, g.full, nodes)
    return CCDecompTree(root, nodes)


def clique_cutset_kernels(g: Graph) -> list[int]:
    """Separators of a CC-decomposition tree, deduplicated and canonically sorted.

    Every clique cutset of ``g`` includes at least one of them.  The empty set
    appears exactly when ``g`` is disconnected.  There are at most ``n - 2``
    of them except for the two-vertex edgeless graph, whose only clique
    cutset is the empty set.
    """
    seps = {t.separator for t in cc_decomposition_tree(g).internal_nodes()}
    return sorted(seps, key=set_key)

