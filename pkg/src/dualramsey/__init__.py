"""Order calculus, morphism predicates, object constructions, and exhaustive
arrow checking for finite linearly ordered relational structures."""

from .orders import (
    Chain,
    ChainMap,
    InputError,
    cmp_alex_subsets,
    cmp_alex_tuples,
    enum_rigid_surjections,
    is_rigid_surjection,
)
from .tuplecalc import (
    TotalQuasiorder,
    all_total_quasiorders,
    cmp_sal_edges,
    cmp_sal_tuples,
    cmp_triangle,
    mat,
    tp,
    tup,
)
from .structures import (
    Failure,
    Hypergraph,
    MetricSpace,
    Morphism,
    Signature,
    Structure,
    Violation,
    automorphisms,
    check_morphism,
    enum_morphisms,
    identity,
    induced_edge_map,
    induced_tuple_map,
    validate,
)
from .constructions import (
    boxtensor_hypergraph,
    build_named,
    dagger,
    empty_reflexive_binary,
    empty_structure,
    erst_to_hypergraph,
    glue_cone,
    hypergraph_to_erst,
    preadjoint,
    star,
    tensor_erst,
    uniform_metric,
)
from .arrows import (
    ArrowProblem,
    ArrowVerdict,
    check_arrow,
    is_k_colorable,
    search_ramsey_object,
    verify_verdict,
)
from .tournaments import (
    CriticalPair,
    critical_pairs,
    is_inflation_of,
    matrix_scan,
    siblings_witness_search,
    verify_tournament_counterexample,
)
from .reference import verify_paper

__version__ = "0.1.0"
