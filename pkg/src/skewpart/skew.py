"""Finding skew partitions: tight, unbalanced-tight, loose and balanced."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import NamedTuple

from .cutsets import find_star_cutset, find_t_cutset
from .graph import (
    Graph,
    anticomponents,
    components,
    enumerate_c4_holes,
    iter_members,
    set_key,
    shortest_induced_path,
)
from .kennedy_reed import kennedy_reed_list


class Balance(str, enum.Enum):
    BALANCED = "balanced"
    UNBALANCED = "unbalanced"
    UNKNOWN = "unknown"


class LooseWitness(NamedTuple):
    """Why a skew partition is loose.

    ``side == "A"``: ``vertex`` in A is complete to the anticomponent ``part`` of B.
    ``side == "B"``: ``vertex`` in B is anticomplete to the component ``part`` of A.
    """

    side: str
    vertex: int
    part: int


class SquareBase(NamedTuple):
    """The 4-hole ``a-b-c-d`` certifying a square-based partition.

    ``in_complement`` marks a hole found in the complement graph (the
    partition was then obtained by swapping sides).
    """

    hole: tuple[int, int, int, int]
    in_complement: bool = False


@dataclass(frozen=True)
class SkewPartition:
    A: int
    B: int
    tight: bool
    witness: LooseWitness | None = None
    balance: Balance = Balance.UNKNOWN
    base: SquareBase | None = None

    @property
    def loose(self) -> bool:
        return not self.tight

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return set_key(self.B), set_key(self.A)

    def flipped(self) -> SkewPartition:
        """The same partition read in the complement graph, sides swapped."""
        w = self.witness
        if w is not None:
            w = LooseWitness("B" if w.side == "A" else "A", w.vertex, w.part)
        return replace(self, A=self.B, B=self.A, witness=w)


def loose_witness(g: Graph, a: int, b: int) -> LooseWitness | None:
    """First witness of looseness for the partition ``(a, b)``, or None if it is tight."""
    adj = g.adj
    bparts = anticomponents(g, b)
    for v in iter_members(a):
        for part in bparts:
            if adj[v] & part == part:
                return LooseWitness("A", v, part)
    aparts = components(g, a)
    for v in iter_members(b):
        for part in aparts:
            if not adj[v] & part:
                return LooseWitness("B", v, part)
    return None


def is_skew(g: Graph, a: int, b: int) -> bool:
    return len(components(g, a)) >= 2 and len(anticomponents(g, b)) >= 2


def classify(g: Graph, a: int, b: int) -> SkewPartition | None:
    """Classify ``(a, b)``: None if it is not a skew partition, else with tightness resolved."""
    if a & b or a | b != g.full:
        raise ValueError("(A, B) must partition the vertex set")
    if not is_skew(g, a, b):
        return None
    w = loose_witness(g, a, b)
    return SkewPartition(a, b, tight=w is None, witness=w)


def _sorted_unique(parts) -> list[SkewPartition]:
    out = {}
    for sp in parts:
        out.setdefault(sp.key, sp)
    return [out[k] for k in sorted(out)]


def square_based_tight(g: Graph) -> list[SkewPartition]:
    """Tight skew partitions of ``g`` that are square-based in ``g``.

    Meant for Berge input: there, every induced path between the two
    ends of the base square through ``A`` has the same parity, so one
    shortest path decides it.
    """
    adj = g.adj
    found = []
    seen = set()
    for a, b, c, d in enumerate_c4_holes(g):
        # either diagonal pair of the square can play the role of "a, c"
        for (p, q), (r, s) in (((a, c), (b, d)), ((b, d), (a, c))):
            bset = (adj[p] & adj[q]) | (adj[r] & adj[s])
            if (bset, p, q) in seen:
                continue
            seen.add((bset, p, q))
            aset = g.full & ~bset
            sp = classify(g, aset, bset)
            if sp is None or not sp.tight:
                continue
            path = shortest_induced_path(g, p, q, aset)
            if path is not None and path.length % 2 == 1:
                hole = (p, r, q, s)
                found.append(replace(sp, balance=Balance.UNBALANCED, base=SquareBase(hole)))
    return _sorted_unique(found)


def unbalanced_tight_list(g: Graph) -> list[SkewPartition]:
    """All unbalanced tight skew partitions of a Berge graph."""
    parts = square_based_tight(g)
    for sp in square_based_tight(g.complement()):
        flipped = sp.flipped()
        parts.append(replace(flipped, base=SquareBase(sp.base.hole, True)))
    return _sorted_unique(parts)


def tight_list(g: Graph, candidates: list[int] | None = None) -> list[SkewPartition]:
    """All tight skew partitions of ``g`` (any graph); at most ``n**4`` of them."""
    if candidates is None:
        candidates = kennedy_reed_list(g)
    out = []
    for b in candidates:
        if len(anticomponents(g, b)) < 2:
            continue
        sp = classify(g, g.full & ~b, b)
        if sp is not None and sp.tight:
            out.append(sp)
    return _sorted_unique(out)


def find_loose(g: Graph) -> SkewPartition | None:
    """A loose skew partition of ``g``, or None if none exists."""
    b = find_star_cutset(g)
    if b is not None:
        return classify(g, g.full & ~b, b)
    b = find_t_cutset(g)
    if b is not None:
        return classify(g, g.full & ~b, b)
    for b in kennedy_reed_list(g):
        sp = classify(g, g.full & ~b, b)
        if sp is not None and sp.loose:
            return sp
    return None


class StarCutsetPresent(ValueError):
    """Raised when the balancing loop is called on a graph (or complement) with a star cutset."""


@dataclass
class BalanceTrace:
    """Potential ``2|B1| - |B|`` before the loop and after every move."""

    potentials: list[int]
    moves: list[tuple[str, int]]


def _anchor(g: Graph, a: int, b: int, b1: int) -> tuple[int, list[int]]:
    """The anticomponent of ``b`` containing ``b1`` and the components of ``a`` some vertex of it misses."""
    part = next(p for p in anticomponents(g, b) if p & b1)
    missed = [c for c in components(g, a) if any(not g.adj[v] & c for v in iter_members(part))]
    return part, missed


def balance_loose(g: Graph, sp: SkewPartition, trace: BalanceTrace | None = None) -> SkewPartition:
    """Move vertices across a loose skew partition until it is balanced.

    ``g`` must be Berge with no star cutset in ``g`` or its complement, and
    some vertex of an anticomponent of ``B`` must miss some component of
    ``A`` entirely (pass the complement and flipped partition otherwise).
    Each move raises ``2|B1| - |B|`` (``B1`` the tracked anticomponent), so
    the loop stops within ``2n`` moves.
    """
    if find_star_cutset(g) is not None or find_star_cutset(g.complement()) is not None:
        raise StarCutsetPresent("graph or its complement has a star cutset")
    a, b = sp.A, sp.B
    adj = g.adj
    b1 = None
    for part in anticomponents(g, b):
        if any(not adj[v] & c for v in iter_members(part) for c in components(g, a)):
            b1 = part
            break
    if b1 is None:
        raise ValueError("no vertex of B is anticomplete to a component of A")
    potential = 2 * b1.bit_count() - b.bit_count()
    if trace is not None:
        trace.potentials.append(potential)
    for _ in range(2 * g.n + 1):
        b1, missed = _anchor(g, a, b, b1)
        move = None
        # vertex outside B1 with no neighbour in a component B1 misses
        for v in iter_members(b & ~b1):
            if any(not adj[v] & c for c in missed):
                move = ("to_A", v)
                break
        if move is None:
            others = [p for p in anticomponents(g, b) if not p & b1]
            for v in iter_members(a):
                if adj[v] & b1 != b1 and any(adj[v] & p == p for p in others):
                    move = ("to_B", v)
                    break
        if move is None:
            out = classify(g, a, b)
            if out is None or out.tight:
                raise AssertionError("balancing loop left the class of loose skew partitions")
            return replace(out, balance=Balance.BALANCED)
        kind, v = move
        if kind == "to_A":
            a |= 1 << v
            b &= ~(1 << v)
        else:
            a &= ~(1 << v)
            b |= 1 << v
            b1 = next(p for p in anticomponents(g, b) if p & b1)
        new = 2 * b1.bit_count() - b.bit_count()
        if new <= potential:
            raise AssertionError("balancing potential did not increase")
        potential = new
        if trace is not None:
            trace.potentials.append(potential)
            trace.moves.append(move)
    raise AssertionError("balancing loop exceeded 2n moves")


def _star_partition(g: Graph) -> SkewPartition | None:
    b = find_star_cutset(g)
    if b is None:
        return None
    sp = classify(g, g.full & ~b, b)
    return replace(sp, balance=Balance.BALANCED)


def find_loose_balanced(g: Graph, trace: BalanceTrace | None = None) -> SkewPartition | None:
    """A loose skew partition of ``g`` (balanced when ``g`` is Berge), or None if none exists."""
    sp = _star_partition(g)
    if sp is not None:
        return sp
    sp = _star_partition(g.complement())
    if sp is not None:
        return sp.flipped()
    sp = find_loose(g)
    if sp is None:
        return None
    if sp.witness.side == "B":
        return balance_loose(g, sp, trace)
    # in the complement, the A-side witness becomes a B-side one
    return balance_loose(g.complement(), sp.flipped(), trace).flipped()


def find_balanced(g: Graph) -> SkewPartition | None:
    """A balanced skew partition of a Berge graph, or None if there is none."""
    sp = find_loose_balanced(g)
    if sp is not None:
        return sp
    tight = tight_list(g)
    if not tight:
        return None
    unbalanced = {sp.key for sp in unbalanced_tight_list(g)}
    for sp in tight:
        if sp.key not in unbalanced:
            return replace(sp, balance=Balance.BALANCED)
    return None
