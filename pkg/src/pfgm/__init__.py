"""Constrained graph homomorphism partition sums.

Exact enumeration for small instances, a certified series approximation of
the log partition value for weights near all-ones, zero-region analysis
tools, and adapters for independent sets, hafnians, single-cycle
permutation sums, clique densities, and constrained colorings.
"""

from .apps import (
    ApplicationInstance,
    CertifiedValue,
    IndependenceVerdict,
    clique_density_sum,
    coloring_partition,
    distinguish_independent,
    evaluate_instance,
    hafnian,
    hamiltonian_cycle_count,
    hamiltonian_permanent,
    independent_set_instance,
)
from .errors import (
    InadmissiblePrefixError,
    InputError,
    InstanceTooLargeError,
    InvalidGraphError,
    InvalidMultiplicityError,
    InvalidWeightsError,
    NoCertificateError,
    PfgmError,
    RefusalError,
    WorkCapExceededError,
)
from .exact import (
    RestrictedPrefix,
    exact_partition,
    exact_partition_unrestricted,
    exact_restricted,
    g_polynomial,
    log_multinomial,
    multinomial_exact,
)
from .graph import (
    Graph,
    MultiplicityVector,
    build_graph,
    build_host_graph,
    graph_from_json,
    graph_to_json,
    max_degree,
    validate_multiplicities,
)
from .kernels import backend_name
from .taylor import (
    ApproximationResult,
    approximate_log_partition,
    error_bound,
    extension_count_ratio,
    log_derivatives,
    normalized_derivative,
    select_order,
)
from .weights import (
    EdgeWeights,
    all_ones,
    deviation,
    in_polydisc,
    interpolate,
    per_edge_weights,
    support_edges,
    uniform_weights,
    weights_from_json,
)
from .zeros import (
    ScanReport,
    ZeroRegionConstants,
    compute_beta,
    constants,
    polydisc_scan,
    root_margin,
)

__version__ = "0.1.0"

__all__ = [
    "ApplicationInstance",
    "ApproximationResult",
    "CertifiedValue",
    "EdgeWeights",
    "Graph",
    "IndependenceVerdict",
    "InadmissiblePrefixError",
    "InputError",
    "InstanceTooLargeError",
    "InvalidGraphError",
    "InvalidMultiplicityError",
    "InvalidWeightsError",
    "MultiplicityVector",
    "NoCertificateError",
    "PfgmError",
    "RefusalError",
    "RestrictedPrefix",
    "ScanReport",
    "WorkCapExceededError",
    "ZeroRegionConstants",
    "all_ones",
    "approximate_log_partition",
    "backend_name",
    "build_graph",
    "build_host_graph",
    "clique_density_sum",
    "coloring_partition",
    "compute_beta",
    "constants",
    "deviation",
    "distinguish_independent",
    "error_bound",
    "evaluate_instance",
    "exact_partition",
    "exact_partition_unrestricted",
    "exact_restricted",
    "extension_count_ratio",
    "g_polynomial",
    "graph_from_json",
    "graph_to_json",
    "hafnian",
    "hamiltonian_cycle_count",
    "hamiltonian_permanent",
    "in_polydisc",
    "independent_set_instance",
    "interpolate",
    "log_derivatives",
    "log_multinomial",
    "max_degree",
    "multinomial_exact",
    "normalized_derivative",
    "per_edge_weights",
    "polydisc_scan",
    "root_margin",
    "select_order",
    "support_edges",
    "uniform_weights",
    "validate_multiplicities",
    "weights_from_json",
]
