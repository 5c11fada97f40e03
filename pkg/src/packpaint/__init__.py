"""Exact toolkit for packing (1^l, 2^k)-colorings of sparse graphs."""

from .graph import ACYCLIC, UNREACHABLE, Graph, from_edge_list

__all__ = ["ACYCLIC", "UNREACHABLE", "Graph", "from_edge_list"]
__version__ = "0.1.0"
