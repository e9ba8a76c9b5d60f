"""Strong edge geodetic sets: exact solvers, closed forms and verified constructions."""

from .constructions import (
    EdgeColoring,
    construct_bipartite,
    construct_multipartite,
    construct_prism,
    one_factorization,
)
from .errors import BudgetExhausted, GeodesicOverflow
from .families import (
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    path_graph,
    path_times_complete,
    star_graph,
    wheel_graph,
)
from .formulas import (
    MultipartiteSpec,
    PrismSpec,
    sge_complete,
    sge_complete_bipartite,
    sge_complete_multipartite,
    sge_path_times_complete,
    sge_single_universal,
)
from .graph import (
    Graph,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    dominant_neighbors,
    enumerate_geodesics,
    simplicial_vertices,
    twins,
    universal_vertices,
)
from .solver import SgeResult, forced_vertices, lower_bound, sge_equals_n, sge_exact, sge_oracle
from .verifier import VerifyReport, Witness, is_strong_edge_geodetic, validate_witness

__version__ = "0.1.0"
