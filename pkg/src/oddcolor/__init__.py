"""Exact tools for odd colorings of sparse graphs."""

from .coloring import Coloring, is_odd_coloring, is_proper, odd_colors, pick_odd_color
from .graph import Graph, format_graph, parse_graph

__all__ = [
    "Coloring",
    "Graph",
    "format_graph",
    "is_odd_coloring",
    "is_proper",
    "odd_colors",
    "parse_graph",
    "pick_odd_color",
]
