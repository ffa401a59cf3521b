"""Triangle-packing extremal toolkit.

Constructions of the four extremal families, exact packing and matching
solvers, the packing decomposition with its audited edge bounds, the
bound functions with their verified inequalities and identities, and an
exhaustive small-graph census, all behind one CLI (``tripack``).

The headline API is re-exported here; the submodules carry the rest
(graph, extremal, packing, decomposition, bounds, identities, census,
cli).  Nothing here touches numba; the JIT census kernels compile on
first use.
"""

from __future__ import annotations

from .bounds import (
    KAPPA0_DEFAULT,
    Profile,
    SampleStrategy,
    VerifyReport,
    max_family_formula,
    f,
    f_prime,
    g_ell,
    g_small,
    h_lemma,
    moon_bound,
    p_fun,
    verify_lemma_maxf,
    verify_lemma_maxgl,
    verify_lemma_maxgsmall,
)
from .census import CensusRow, MatchingCensus, census_rows, matching_census, triangle_census
from .decomposition import (
    AuditReport,
    Decomposition,
    audit,
    classify,
    decompose,
    random_saturated,
    saturate,
)
from .extremal import (
    ExtremalSpec,
    build,
    e_max,
    edge_formula,
    family_valid,
    figure2_data,
    thresholds,
    type_matrix,
)
from .graph import (
    Graph,
    build_graph,
    complete_graph,
    max_matching,
    matching_number,
    read_graph6,
    triangles,
    write_graph6,
)
from .identities import IDENTITIES, identity_check, identity_names, run_identity_grid
from .packing import (
    PackingResult,
    greedy_packing,
    is_kp1_k3_free,
    max_packing_exact,
    packing_number,
    rotation_improve,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "audit",
    "AuditReport",
    "build",
    "build_graph",
    "census_rows",
    "CensusRow",
    "classify",
    "complete_graph",
    "decompose",
    "Decomposition",
    "e_max",
    "edge_formula",
    "ExtremalSpec",
    "f",
    "f_prime",
    "family_valid",
    "figure2_data",
    "g_ell",
    "g_small",
    "Graph",
    "greedy_packing",
    "h_lemma",
    "IDENTITIES",
    "identity_check",
    "identity_names",
    "is_kp1_k3_free",
    "KAPPA0_DEFAULT",
    "matching_census",
    "matching_number",
    "MatchingCensus",
    "max_family_formula",
    "max_matching",
    "max_packing_exact",
    "moon_bound",
    "p_fun",
    "packing_number",
    "PackingResult",
    "Profile",
    "random_saturated",
    "read_graph6",
    "run_identity_grid",
    "SampleStrategy",
    "saturate",
    "thresholds",
    "triangle_census",
    "triangles",
    "type_matrix",
    "verify_lemma_maxf",
    "verify_lemma_maxgl",
    "verify_lemma_maxgsmall",
    "VerifyReport",
    "write_graph6",
]
