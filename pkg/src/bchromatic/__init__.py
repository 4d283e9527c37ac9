"""Exact b-chromatic numbers, vertex-deletion recoloring, and bound checks."""

from .coloring import Coloring, RecolorTrace, eliminate_color, is_b_coloring, is_proper
from .graph import Graph, delete_vertex, girth
from .recolor import DeletionCertificate, recolor_general, recolor_quasi_line
from .solver import b_chromatic, brute_force_b_chromatic, chromatic_number, find_b_coloring, m_degree

__version__ = "0.1.0"

__all__ = [
    "Coloring", "DeletionCertificate", "Graph", "RecolorTrace", "b_chromatic",
    "brute_force_b_chromatic", "chromatic_number", "delete_vertex", "eliminate_color",
    "find_b_coloring", "girth", "is_b_coloring", "is_proper", "m_degree",
    "recolor_general", "recolor_quasi_line",
]
