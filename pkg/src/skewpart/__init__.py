"""Skew partitions in perfect graphs and optimal colouring of Berge graphs with bounded clique number."""

from .colouring import Colouring, colour_berge, combine_colourings, max_clique, verify_colouring
from .cutsets import cc_decomposition_tree, clique_cutset_kernels, find_star_cutset, find_t_cutset
from .graph import Graph, anticomponents, components
from .kennedy_reed import kennedy_reed_list
from .skew import (
    Balance,
    SkewPartition,
    balance_loose,
    classify,
    find_balanced,
    find_loose,
    find_loose_balanced,
    tight_list,
    unbalanced_tight_list,
)

__all__ = [
    "Balance",
    "Colouring",
    "Graph",
    "SkewPartition",
    "anticomponents",
    "balance_loose",
    "cc_decomposition_tree",
    "classify",
    "clique_cutset_kernels",
    "colour_berge",
    "combine_colourings",
    "components",
    "find_balanced",
    "find_loose",
    "find_loose_balanced",
    "find_star_cutset",
    "find_t_cutset",
    "kennedy_reed_list",
    "max_clique",
    "tight_list",
    "unbalanced_tight_list",
    "verify_colouring",
]
