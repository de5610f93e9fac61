"""Delta-minimum 4-edge-colourings of subcubic graphs."""

from .colouring import Colour, DeltaClass, EdgeColouring, delta_count, is_proper, kempe_swap
from .formats import ParseError, format_edgelist, format_graph6, parse_edgelist, parse_graph6, read_graph
from .graph import Graph, GraphError, are_isomorphic, build_graph, odd_girth
from .solver import SolveReport, exact_s, heuristic_colouring, solve
from .structure import verify_all

__all__ = [
    "Colour",
    "DeltaClass",
    "EdgeColouring",
    "Graph",
    "GraphError",
    "ParseError",
    "SolveReport",
    "are_isomorphic",
    "build_graph",
    "delta_count",
    "exact_s",
    "format_edgelist",
    "format_graph6",
    "heuristic_colouring",
    "is_proper",
    "kempe_swap",
    "odd_girth",
    "parse_edgelist",
    "parse_graph6",
    "read_graph",
    "solve",
    "verify_all",
]
