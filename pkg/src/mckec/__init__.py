"""Monochromatic k-edge-connection colorings of small graphs."""

from .coloring import (
    ColorClass,
    EdgeColoring,
    VerificationReport,
    color_classes,
    count_monochromatic_paths,
    is_mc_k,
    is_umc_k,
)
from .constructions import (
    Decomposition,
    decompose_bipartite,
    decompose_complete_even,
    decompose_complete_odd,
    kkn_mc_coloring,
    single_class_umc_coloring,
)
from .graph import (
    CutCertificate,
    Graph,
    VertexPartition,
    blocks,
    generate,
    is_k_edge_connected,
    local_edge_connectivity,
    parse_graph6,
    shrink_cross_edges,
    to_graph6,
)
from .harness import check_theorems, hamiltonicity_via_umc2, run_conjecture
from .kecss import KecssResult, MaderReport, is_deletable, mader_checks, minimalize, minimum_kecss
from .packing import PsiResult, TreePacking, packing_coloring, psi_oracle, tree_packing_number
from .search import Budget, SearchResult, exact_mc_k, exact_umc_k, improve_coloring

__version__ = "0.1.0"
