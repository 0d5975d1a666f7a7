"""resolvekit: resolvability analysis of interconnection networks.

Generators for butterfly, Benes, circumcoronene, and silicate networks;
twin detection; k-resolving verification; an exact k-metric-dimension
solver with twin forcing; and sandwich certificates for the closed-form
fault-tolerant metric dimensions of the three network families.
"""

from ._kernels import BACKEND as kernel_backend
from .certificates import (Certificate, Report, certify_all, certify_benes,
                           certify_butterfly, certify_silicate)
from .generators import (benes, butterfly, circumcoronene, classical,
                         complete, complete_bipartite, cycle,
                         join_complete_empty, join_complete_k1_kt,
                         level_of_label, path, random_connected_graph,
                         silicate, silicate_kind, silicate_radius_sq)
from .graph import (DistanceMatrix, Graph, GraphError, all_pairs_distances,
                    build_graph, format_edge_list, is_connected,
                    parse_edge_list)
from .resolvability import (DistinguisherTable, ResolveCheck, TwinClass,
                            TwinPartition, TwinStructureError,
                            all_vertices_twins, check_k_resolving,
                            distinguisher_table, is_fault_tolerant_by_removal,
                            is_k_resolving, kappa, min_distinguisher_pair,
                            twin_partition, twin_vertices)
from .solver import (InfeasibleKError, SolveResult, solve_exhaustive_oracle,
                     solve_k_metric_dimension)

__version__ = "0.1.0"

__all__ = [
    "kernel_backend", "__version__",
    "Graph", "DistanceMatrix", "GraphError", "build_graph", "is_connected",
    "all_pairs_distances", "format_edge_list", "parse_edge_list",
    "butterfly", "benes", "circumcoronene", "silicate", "classical",
    "path", "cycle", "complete", "complete_bipartite",
    "join_complete_empty", "join_complete_k1_kt", "random_connected_graph",
    "level_of_label", "silicate_kind", "silicate_radius_sq",
    "TwinClass", "TwinPartition", "TwinStructureError", "twin_partition",
    "twin_vertices", "all_vertices_twins", "DistinguisherTable",
    "distinguisher_table", "ResolveCheck", "check_k_resolving",
    "is_k_resolving", "is_fault_tolerant_by_removal", "kappa",
    "min_distinguisher_pair",
    "SolveResult", "InfeasibleKError", "solve_k_metric_dimension",
    "solve_exhaustive_oracle",
    "Certificate", "Report", "certify_butterfly", "certify_benes",
    "certify_silicate", "certify_all",
]
