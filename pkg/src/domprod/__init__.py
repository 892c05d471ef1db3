"""Domination, total domination, and upper domination of direct products
of balanced complete multipartite graphs and of unitary Cayley graphs:
exact solvers, theorem-backed bounds, explicit constructions, and
number-theoretic certificates."""

__version__ = "0.1.0"

from .graphs import (
    DEFAULT_VERTEX_CAP,
    CapExceededError,
    CliquePartition,
    CrtIsomorphism,
    Descriptor,
    DescriptorError,
    Factor,
    Graph,
    ProductSpec,
    clique_partition,
    complete_graph,
    crt_isomorphism,
    direct_product,
    disjoint_union,
    k2_reduction,
    multipartite,
    product_spec_graph,
    ucg_product_spec,
    unitary_cayley,
)
from .numbertheory import (
    Congruence,
    JacobsthalRun,
    crt_solve,
    euler_phi,
    factorize,
    is_prime,
    jacobsthal,
    jacobsthal_run,
    omega,
    radical,
)
from .solvers import (
    Budget,
    BudgetExhausted,
    NoTotalDominationError,
    NotMinimalError,
    OracleCapError,
    SolveResult,
    VertexClassification,
    classify,
    gamma_exact,
    gamma_oracle,
    gamma_total_exact,
    gamma_upper_exact,
    is_dominating,
    is_minimal_dominating,
    is_total_dominating,
    shrink_to_minimal,
)
from .theorems import (
    BoundReport,
    ConjectureCheck,
    ConstructionResult,
    InternalConsistencyError,
    MWitness,
    WitnessN,
    complete_product_gamma,
    conjecture_check,
    consecutive_residue_set,
    cube_corner_set,
    diagonal_set,
    gamma_bounds,
    m_family_witness,
    mt_witness,
    partite_column_set,
    repeated_factor_lower,
    small_first_factor_lower,
    squarefree_gamma_value,
    t_plus_two_set,
    ucg_gamma_bounds,
    ucg_is_dominating,
    ucg_is_total_dominating,
    upper_bounds,
)

__all__ = [
    "__version__",
    "DEFAULT_VERTEX_CAP",
    "Budget",
    "BudgetExhausted",
    "BoundReport",
    "CapExceededError",
    "CliquePartition",
    "Congruence",
    "ConjectureCheck",
    "ConstructionResult",
    "CrtIsomorphism",
    "Descriptor",
    "DescriptorError",
    "Factor",
    "Graph",
    "InternalConsistencyError",
    "JacobsthalRun",
    "MWitness",
    "NoTotalDominationError",
    "NotMinimalError",
    "OracleCapError",
    "ProductSpec",
    "SolveResult",
    "VertexClassification",
    "WitnessN",
    "classify",
    "clique_partition",
    "complete_graph",
    "complete_product_gamma",
    "conjecture_check",
    "consecutive_residue_set",
    "crt_isomorphism",
    "crt_solve",
    "cube_corner_set",
    "diagonal_set",
    "direct_product",
    "disjoint_union",
    "euler_phi",
    "factorize",
    "gamma_bounds",
    "gamma_exact",
    "gamma_oracle",
    "gamma_total_exact",
    "gamma_upper_exact",
    "is_dominating",
    "is_minimal_dominating",
    "is_prime",
    "is_total_dominating",
    "jacobsthal",
    "jacobsthal_run",
    "k2_reduction",
    "m_family_witness",
    "mt_witness",
    "multipartite",
    "omega",
    "partite_column_set",
    "product_spec_graph",
    "radical",
    "repeated_factor_lower",
    "shrink_to_minimal",
    "small_first_factor_lower",
    "squarefree_gamma_value",
    "t_plus_two_set",
    "ucg_gamma_bounds",
    "ucg_is_dominating",
    "ucg_is_total_dominating",
    "ucg_product_spec",
    "unitary_cayley",
    "upper_bounds",
]
