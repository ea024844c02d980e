"""Maximum local edge connectivity, Hajos-join certificates, and the
color-or-certify decision procedure for simple undirected graphs."""

from ._kernels import ACTIVE as kernel_backend
from .coloring import (
    ChiWitness,
    Coloring,
    GallaiTreeReport,
    color_or_find_hk_block,
    degree_list_color,
    exact_chromatic,
    exact_k_colorable,
    find_merge_permutation,
    is_critical,
    is_gallai_forest,
    is_proper,
    low_high_split,
    merge_cut_colorings,
    permute_colors,
)
from .connectivity import (
    BlockDecomposition,
    EdgeCut,
    VertexEdgeSeparator,
    block_decomposition,
    connected_components,
    decompose_at_2cut,
    find_vertex_edge_separator,
    is_connected,
    lambda_max,
    local_edge_connectivity,
    min_cut_between_high_vertices,
)
from .errors import (
    InternalInconsistencyError,
    ParseError,
    ResourceLimitError,
    UsageError,
)
from .generate import GeneratorSpec, generate
from .graph import (
    Graph,
    add_clique,
    add_edges,
    complete_graph,
    coloring_number,
    cycle_graph,
    degree_extremes,
    induced_subgraph,
    is_complete,
    is_odd_cycle,
    is_odd_wheel,
    wheel_graph,
)
from .hajos import (
    Certificate,
    CertLeaf,
    CertNode,
    JoinSpec,
    certificate_from_json_obj,
    certificate_to_json_obj,
    embed_in_host,
    gen_hk_random,
    hajos_join,
    recognize_hk,
    remap_certificate,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
