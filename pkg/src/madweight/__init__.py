"""Constructive proper 3-weightings and total 2-weightings for graphs of
low maximum average degree: configuration detection, reduction/extension,
exact densest-subgraph Mad, discharging verifiers, and brute-force oracles.
"""

from .graph import Graph, VertexClass, classify, parse_graph, format_graph
from .weighting import Mode, Weighting, phi, rho, violations
from .mad import MadResult, average_degree, mad_exact, mad_less_than

__all__ = [
    "Graph", "VertexClass", "classify", "parse_graph", "format_graph",
    "Mode", "Weighting", "phi", "rho", "violations",
    "MadResult", "average_degree", "mad_exact", "mad_less_than",
]
