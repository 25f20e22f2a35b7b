"""Graphs module - Stelle, catene e plumbing pesati."""

from singstar.graphs.plumbing import PlumbingGraph, PlumbingNode
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.star_graph import (
    BranchChain,
    StarGraph,
    canonical_form,
    graphs_isomorphic,
    star_to_plumbing,
)

__all__ = [
    "PlumbingGraph",
    "PlumbingNode",
    "ChainGraph",
    "BranchChain",
    "StarGraph",
    "canonical_form",
    "graphs_isomorphic",
    "star_to_plumbing",
]
