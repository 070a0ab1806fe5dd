"""Exact circular flow numbers of small cubic graphs.

Two independent exact solvers (integer flow search and balanced-valuation
search with a min-cut oracle), certificate verification, labelled family
generators, and mechanical audits of the block/discharging case analysis.
"""

from .graphs import Graph, VertexSet
from .graph6 import parse_graph6, emit_graph6, graph_from_json, graph_to_json
from .rational import Rat, rat, parse_ratio, format_ratio

__version__ = "0.1.0"

__all__ = [
    "Graph", "VertexSet",
    "parse_graph6", "emit_graph6", "graph_from_json", "graph_to_json",
    "Rat", "rat", "parse_ratio", "format_ratio",
    "__version__",
]
