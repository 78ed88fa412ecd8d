"""A guided look at the four kinds of skew partition on small graphs.

Run with ``python demos/skew_partition_tour.py``.
"""

from skewpart import find_balanced, find_loose, tight_list, unbalanced_tight_list
from skewpart.generators import TUSP8_LABELS, cycle, path, tusp8
from skewpart.graph import members
from skewpart.oracles import OracleBudget, enumerate_skew_partitions_bruteforce, odd_path_witness


def show(name, g, labels=None):
    def fmt(mask):
        return "{" + ", ".join(labels[v] if labels else str(v) for v in members(mask)) + "}"

    print(f"\n== {name}: {g.n} vertices, {g.m} edges")
    loose = find_loose(g)
    if loose is None:
        print("  loose:     none")
    else:
        w = loose.witness
        why = "complete to the anticomponent" if w.side == "A" else "anticomplete to the component"
        name = labels[w.vertex] if labels else w.vertex
        print(f"  loose:     A={fmt(loose.A)} B={fmt(loose.B)}, since {name} is {why} {fmt(w.part)}")
    tight = tight_list(g)
    print("  tight:    ", [f"A={fmt(sp.A)} B={fmt(sp.B)}" for sp in tight] or "none")
    unbalanced = unbalanced_tight_list(g)
    for sp in unbalanced:
        print(f"  unbalanced tight: A={fmt(sp.A)} B={fmt(sp.B)}, square {[labels[v] for v in sp.base.hole]}")
    balanced = find_balanced(g)
    print("  balanced: ", "none" if balanced is None else f"A={fmt(balanced.A)} B={fmt(balanced.B)}")
    return unbalanced


# P4 a-b-c-d: the middle edge separates the two ends and is loose on both counts
show("path a-b-c-d", path(4), list("abcd"))

# an even hole has no skew partition at all
show("hexagon", cycle(6), [f"v{i}" for i in range(6)])

# the smallest tight skew partitions need eight vertices: a one-vertex
# component of A would see every vertex of B and so be complete to it
g = tusp8()
(sp,) = show("eight-vertex fixture", g, list(TUSP8_LABELS))
witness, anti = odd_path_witness(g, members(sp.A), members(sp.B))
kind = "antipath" if anti else "path"
print(f"  odd {kind} certifying imbalance: {' - '.join(TUSP8_LABELS[v] for v in witness)}")
everything = enumerate_skew_partitions_bruteforce(g, OracleBudget(max_partition_vertices=8), with_balance=True)
print(f"  brute force agrees: {len(everything)} skew partition(s), "
      f"{sum(p.tight for p in everything)} tight, {sum(not p.balanced for p in everything)} unbalanced")
