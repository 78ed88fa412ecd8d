"""Optimal colouring of Berge graphs by balanced-skew-partition decomposition.

For clique number ``k`` the graph is broken up along balanced skew
partitions into a tree of pieces; leaves are coloured directly and sibling
colourings are merged bottom-up, using recursive calls for clique number
below ``k`` to make the colours on the shared part agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, anticomponents, components, iter_members, mask_of, members
from .oracles import OracleBudget, exact_chromatic
from .skew import SkewPartition, find_balanced


@dataclass
class Colouring:
    """A map vertex -> colour in ``1..palette``."""

    palette: int
    colours: dict[int, int]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in sorted(self.colours):
            out.setdefault(self.colours[v], []).append(v)
        return out


LeafColourer = Callable[[Graph], Colouring]

# leaf pieces are Berge graphs without a balanced skew partition; the exact
# colourer stands in for a dedicated polynomial algorithm on them
LEAF_VERTEX_LIMIT = 64


def exact_leaf_colourer(g: Graph) -> Colouring:
    chi, colours = exact_chromatic(g, OracleBudget(max_vertices=max(LEAF_VERTEX_LIMIT, 1)))
    return Colouring(chi, colours)


def verify_colouring(g: Graph, c: Colouring) -> bool:
    """Total, proper, and within the declared palette."""
    if set(c.colours) != set(range(g.n)):
        return False
    for v, col in c.colours.items():
        if not 1 <= col <= c.palette:
            return False
    return all(c.colours[u] != c.colours[v] for u, v in g.edges())


def max_clique(g: Graph, x: int | None = None) -> tuple[int, int]:
    """Clique number of ``g[x]`` and a witness clique, by branch and bound."""
    adj = g.adj
    best = [0, 0]

    def grow(clique: int, size: int, cand: int):
        if size > best[0]:
            best[0], best[1] = size, clique
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            grow(clique | low, size + 1, cand & adj[v])
            cand ^= low

    grow(0, 0, g.full if x is None else x)
    return best[0], best[1]


def _restrict(g: Graph, x: int, colourer: Callable[[Graph], Colouring]) -> dict[int, int]:
    """Colour ``g[x]`` with ``colourer`` and map the result back to ``g``'s labels."""
    sub, labels = g.induced(x)
    c = colourer(sub)
    return {labels[v]: col for v, col in c.colours.items()}


def _front_permutation(chosen: set[int], palette: int) -> dict[int, int]:
    """Bijection of ``1..palette`` sending ``chosen`` onto ``1..len(chosen)``; identity elsewhere."""
    size = len(chosen)
    incoming = sorted(c for c in chosen if c > size)
    vacant = sorted(c for c in range(1, size + 1) if c not in chosen)
    perm = {c: c for c in range(1, palette + 1)}
    for src, dst in zip(incoming, vacant):
        perm[src] = dst
        perm[dst] = src
    return perm


def _swap_to(targets: list[int], current: list[int], palette: int) -> dict[int, int]:
    """Bijection sending ``current[i]`` to ``targets[i]`` (both lists distinct)."""
    perm = {c: c for c in range(1, palette + 1)}
    for src, dst in zip(current, targets):
        if perm[src] == dst:
            continue
        # find which colour currently maps to dst and swap images
        other = next(c for c, img in perm.items() if img == dst)
        perm[other], perm[src] = perm[src], dst
    return perm


class CombineError(AssertionError):
    """An internal guarantee of the colour-merging step failed."""


def combine_colourings(
    g: Graph,
    a1: int,
    a2: int,
    b: int,
    phi1: dict[int, int],
    phi2: dict[int, int],
    sub: Callable[[Graph], Colouring],
    log: list[dict] | None = None,
) -> Colouring:
    """Merge optimal colourings of ``g[a1 | b]`` and ``g[a2 | b]`` into a ``k``-colouring of ``g``.

    ``(a1 | a2, b)`` must be a balanced skew partition of the Berge graph
    ``g`` with ``a1`` anticomplete to ``a2``; ``sub`` must optimally colour
    Berge graphs of clique number below ``k = omega(g)``.  When ``log`` is
    given, the quantities checked along the way are appended to it.
    """
    adj = g.adj
    if a1 & a2 or a1 & b or a2 & b or a1 | a2 | b != g.full or not a1 or not a2:
        raise ValueError("a1, a2, b must partition the vertices with a1, a2 nonempty")
    if any(adj[v] & a2 for v in iter_members(a1)):
        raise ValueError("a1 must be anticomplete to a2")
    for part, phi in ((a1 | b, phi1), (a2 | b, phi2)):
        if set(phi) != set(members(part)):
            raise ValueError("colouring does not cover its side")
        for v in iter_members(part):
            if any(phi[u] == phi[v] for u in iter_members(adj[v] & part)):
                raise ValueError("input colouring is improper")

    n = g.n
    k, _ = max_clique(g)
    parts = anticomponents(g, b)
    if len(parts) < 2:
        raise ValueError("b must not be anticonnected")

    # step 1: B1 complete to B2, with |B1| - w(B1) <= |B2| - w(B2)
    bb1 = parts[0]
    bb2 = b & ~bb1
    w1, _ = max_clique(g, bb1)
    w2, _ = max_clique(g, bb2)
    if bb1.bit_count() - w1 > bb2.bit_count() - w2:
        bb1, bb2, w1, w2 = bb2, bb1, w2, w1

    entry = {"k": k, "b1": w1, "n": n}
    psi = []
    for side, phi in ((a1 | b, phi1), (a2 | b, phi2)):
        palette = max(phi.values())
        # step 2: colours used on B1 moved to the front
        used = {phi[v] for v in iter_members(bb1)}
        ell = len(used)
        perm = _front_permutation(used, palette)
        phi = {v: perm[c] for v, c in phi.items()}
        s = mask_of(v for v in iter_members(side) if phi[v] <= ell)
        if ell > k - 1:
            raise CombineError(f"ell={ell} exceeds k-1={k - 1}")
        if s & bb2 or bb1 & ~s:
            raise CombineError("B1 must lie inside S and B2 outside it")

        # step 3: recolour S together with a clique of ell - b1 new vertices seeing B1
        extra = ell - w1
        if not 0 <= extra <= bb1.bit_count() - w1 <= bb2.bit_count() - w2:
            raise CombineError("ell - b1 <= |B1| - b1 <= |B2| - b2 violated")
        hsub, labels = g.induced(s)
        rows = list(hsub.adj) + [0] * extra
        b1_local = mask_of(i for i, v in enumerate(labels) if bb1 >> v & 1)
        base = hsub.n
        new = mask_of(range(base, base + extra))
        for i in range(base, base + extra):
            rows[i] = b1_local | (new & ~(1 << i))
        for j in iter_members(b1_local):
            rows[j] |= new
        h = Graph.from_rows(rows)
        if h.n > n:
            raise CombineError(f"|V(H)|={h.n} exceeds n={n}")
        xi = sub(h)
        if xi.palette > ell:
            raise CombineError("recursive colouring of H used too many colours")
        new_colours = [xi.colours[i] for i in range(base, base + extra)]
        perm = _swap_to(list(range(w1 + 1, ell + 1)), new_colours, max(ell, xi.palette))
        xi_cols = {labels[i]: perm[xi.colours[i]] for i in range(base)}
        side_psi = {v: (xi_cols[v] if s >> v & 1 else c) for v, c in phi.items()}
        if any(side_psi[v] > w1 for v in iter_members(bb1)):
            raise CombineError("B1 not confined to colours 1..b1")
        entry.setdefault("ell", []).append(ell)
        entry.setdefault("h_size", []).append(h.n)
        entry.setdefault("h", []).append(h)
        psi.append(side_psi)

    # step 4: colours 1..b1 and the rest are coloured separately
    t = mask_of(v for side_psi in psi for v, c in side_psi.items() if c <= w1)
    if bb1 & ~t or bb2 & t:
        raise CombineError("B1 must lie inside T and B2 outside it")
    wt, _ = max_clique(g, t)
    entry["omega_t"] = wt
    if wt > w1:
        raise CombineError(f"omega(T)={wt} exceeds b1={w1}")
    low = _restrict(g, t, sub) if t else {}
    rest = g.full & ~t
    high = _restrict(g, rest, sub) if rest else {}
    colours = dict(low)
    colours.update({v: c + w1 for v, c in high.items()})
    if log is not None:
        log.append(entry)
    return Colouring(max(colours.values(), default=0), colours)


class LeafKind(str, enum.Enum):
    SMALL = "small"
    CLIQUE_DROP = "clique-number-drop"
    NOT_ANTICONNECTED = "not-anticonnected"
    NO_BALANCED_SP = "no-balanced-sp"


@dataclass
class SPNode:
    vertices: int
    children: tuple[SPNode, SPNode] | None = None
    partition: SkewPartition | None = None  # in g's labels, restricted to this piece
    kind: LeafKind | None = None


@dataclass
class SPDecompTree:
    root: SPNode
    omega: int
    nodes: list[SPNode] = field(default_factory=list)

    def internal_nodes(self) -> list[SPNode]:
        return [t for t in self.nodes if t.children is not None]

    def leaves(self) -> list[SPNode]:
        return [t for t in self.nodes if t.children is None]


def _lift(sp: SkewPartition, labels: list[int]) -> SkewPartition:
    a = mask_of(labels[v] for v in iter_members(sp.A))
    b = mask_of(labels[v] for v in iter_members(sp.B))
    return SkewPartition(a, b, sp.tight, None, sp.balance)


def process_node(g: Graph, x: int, k: int) -> tuple[int, int, SkewPartition] | LeafKind:
    """Either a leaf tag for ``g[x]`` or the two child pieces and the partition splitting it."""
    if x.bit_count() < 2 * k:
        return LeafKind.SMALL
    if max_clique(g, x)[0] < k:
        return LeafKind.CLIQUE_DROP
    if len(anticomponents(g, x)) >= 2:
        return LeafKind.NOT_ANTICONNECTED
    sub, labels = g.induced(x)
    sp = find_balanced(sub)
    if sp is None:
        return LeafKind.NO_BALANCED_SP
    sp = _lift(sp, labels)
    comps = components(g, sp.A)
    first = comps[0]
    return first | sp.B, (sp.A & ~first) | sp.B, sp


def build_sp_tree(g: Graph) -> SPDecompTree:
    k, _ = max_clique(g)
    root = SPNode(g.full)
    tree = SPDecompTree(root, k, [root])
    stack = [root]
    while stack:
        node = stack.pop()
        out = process_node(g, node.vertices, k)
        if isinstance(out, LeafKind):
            node.kind = out
            continue
        x1, x2, sp = out
        node.partition = sp
        node.children = (SPNode(x1), SPNode(x2))
        tree.nodes.extend(node.children)
        stack.extend(reversed(node.children))
    return tree


def _two_colour(g: Graph) -> Colouring:
    colours = {}
    for comp in components(g, g.full):
        start = (comp & -comp).bit_length() - 1
        colours[start] = 1
        queue = [start]
        for v in queue:
            for u in iter_members(g.adj[v]):
                if u not in colours:
                    colours[u] = 3 - colours[v]
                    queue.append(u)
                elif colours[u] == colours[v]:
                    raise ValueError("triangle-free graph is not bipartite; input is not Berge")
    return Colouring(max(colours.values(), default=0), colours)


def colour_berge(
    g: Graph, leaf: LeafColourer = exact_leaf_colourer, log: list[dict] | None = None
) -> Colouring:
    """An optimal colouring of a Berge graph (exactly ``omega(g)`` colours)."""
    n = g.n
    if n == 0:
        return Colouring(0, {})
    k, _ = max_clique(g)
    if k == 1:
        return Colouring(1, {v: 1 for v in range(n)})
    if k == 2:
        return _two_colour(g)

    def recurse(h: Graph) -> Colouring:
        return colour_berge(h, leaf, log)

    comps = components(g, g.full)
    if len(comps) >= 2:
        colours = {}
        for comp in comps:
            colours.update(_restrict(g, comp, recurse))
        return Colouring(k, colours)

    tree = build_sp_tree(g)
    coloured: dict[int, dict[int, int]] = {}

    def colour_node(node: SPNode) -> dict[int, int]:
        x = node.vertices
        if node.children is None:
            if node.kind is LeafKind.NO_BALANCED_SP:
                return _restrict(g, x, leaf)
            if node.kind is LeafKind.SMALL:
                return _restrict(g, x, exact_leaf_colourer)
            if node.kind is LeafKind.CLIQUE_DROP:
                return _restrict(g, x, recurse)
            out, offset = {}, 0
            for part in anticomponents(g, x):
                piece = _restrict(g, part, recurse)
                out.update({v: c + offset for v, c in piece.items()})
                offset = max(out.values())
            return out
        left, right = node.children
        phi1 = colour_node(left)
        phi2 = colour_node(right)
        b = left.vertices & right.vertices
        sub, labels = g.induced(x)
        index = {v: i for i, v in enumerate(labels)}
        merged = combine_colourings(
            sub,
            mask_of(index[v] for v in iter_members(left.vertices & ~b)),
            mask_of(index[v] for v in iter_members(right.vertices & ~b)),
            mask_of(index[v] for v in iter_members(b)),
            {index[v]: c for v, c in phi1.items()},
            {index[v]: c for v, c in phi2.items()},
            recurse,
            log,
        )
        return {labels[i]: c for i, c in merged.colours.items()}

    colours = colour_node(tree.root)
    return Colouring(max(colours.values()), colours)
