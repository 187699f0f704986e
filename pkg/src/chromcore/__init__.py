"""Exact chromatic core subgraphs of small graphs."""

from .coloring import chromatic_number, clique_number, is_k_colorable, is_perfect, is_weakly_perfect
from .corefinder import CoreCertificate, enumerate_cores, find_core, oracle_core
from .errors import CapabilityError, InputError
from .graph import Graph, make_graph, structor_index

__all__ = [
    "CapabilityError",
    "CoreCertificate",
    "Graph",
    "InputError",
    "chromatic_number",
    "clique_number",
    "enumerate_cores",
    "find_core",
    "is_k_colorable",
    "is_perfect",
    "is_weakly_perfect",
    "make_graph",
    "oracle_core",
    "structor_index",
]
