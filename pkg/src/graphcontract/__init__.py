"""Graph contraction kernelization toolkit.

Kernelizers for contracting a graph into a cycle or a path (optionally
with fixed end vertices), an exact brute-force contraction oracle for
small graphs, instance generators, and a file-based verification harness.
"""

__version__ = "0.1.0"

from .graph import (
    BlockDecomposition,
    Graph,
    WitnessStructure,
    components,
    contract_edge,
    contract_set_onto_rest,
    decompose,
    is_connected,
    is_k_connected,
    is_two_edge_connected,
    validate_witness,
)

__all__ = [
    "BlockDecomposition",
    "Graph",
    "WitnessStructure",
    "components",
    "contract_edge",
    "contract_set_onto_rest",
    "decompose",
    "is_connected",
    "is_k_connected",
    "is_two_edge_connected",
    "validate_witness",
    "__version__",
]
