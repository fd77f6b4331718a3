"""Exact clique counting, clique-minor search, and extremal bounds
for graphs with no K_t minor.

Submodules:
  graphs         bitset graphs, exact k-clique counts, graph6 / JSON I/O
  minors         exhaustive clique-minor search with certificates,
                 the dense-graph Hadwiger formula and the graph families
  turan          symbolic complete multipartite graphs and the optimizer scan
  peeling        the anchor-peeling encoder, its audits, branch disks
  bounds         log-space evaluation of every closed-form bound
  constructions  extremal construction generators and the conjecture check
  verify         the oracle / property campaigns behind the verify command
  cli            command-line interface
"""

from .graphs import (
    Graph,
    GraphFormatError,
    clique_number,
    count_k_cliques,
    induced_subgraph,
    max_missing_degree,
    parse_graph,
    serialize_graph,
)
from .minors import (
    VertexCapExceeded,
    dense_hadwiger,
    hadwiger_number,
    has_clique_minor,
    in_family_G,
    in_family_H,
    is_dense,
    validate_model,
)
from .turan import (
    MultipartiteSpec,
    TStarResult,
    c_star_sandwich,
    materialize,
    multipartite_k_cliques,
    omega_star_range_check,
    part_size_bound_check,
    t_star,
    turan_spec,
)
from .peeling import (
    BranchDiskCertificate,
    PeelingTrace,
    PeelStep,
    greedy_branch_set,
    minor_from_branches,
    peel,
    r0_bound,
    replay,
    validate_branch_certificate,
    verify_basic_facts,
    verify_gap,
)
from .logspace import LogValue, log_binomial
from .bounds import (
    BoundReport,
    bound_report,
    count_Ht_bound,
    crude_upper,
    encoding_count_bound,
    key_lemma1_lower,
    reduce2_bound,
    theorem_klarge0_bound,
    theorem_main_bound,
    tree_count,
)
from .constructions import (
    ConstructionSpec,
    WoodCheckResult,
    build,
    closed_form_count,
    verify_minor_free,
    wood_counterexample_check,
)

__version__ = "0.1.0"
