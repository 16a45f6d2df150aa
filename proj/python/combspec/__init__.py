"""Exact combinatorial spectra of ring-weighted complete graphs."""

from .errors import CombspecError
from ._combspec import (
    Graph,
    antimagic,
    coloring_count,
    complete_graph,
    connected_graphs,
    cycle_graph,
    dominating,
    edge_deleted_closure_size,
    edge_roman_at_most,
    family_power_size,
    hamiltonian_number,
    hamiltonian_spectrum,
    identity_suites,
    one_two_three,
    oracle,
    path_graph,
    star_graph,
    strength_at_most,
    theorem_suites,
    verify,
    verify_identity,
)

__all__ = [
    "CombspecError",
    "Graph",
    "antimagic",
    "coloring_count",
    "complete_graph",
    "connected_graphs",
    "cycle_graph",
    "dominating",
    "edge_deleted_closure_size",
    "edge_roman_at_most",
    "family_power_size",
    "hamiltonian_number",
    "hamiltonian_spectrum",
    "identity_suites",
    "one_two_three",
    "oracle",
    "path_graph",
    "star_graph",
    "strength_at_most",
    "theorem_suites",
    "verify",
    "verify_identity",
]
