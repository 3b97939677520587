"""Partial line digraphs and the counting of (k,l)-kernels, semikernels and
(k,l)-Grundy functions on a digraph and its partial line digraphs."""

from .digraph import (
    INF,
    Digraph,
    DigraphError,
    DistanceOracle,
    DuplicateArc,
    LoopArc,
    VertexOutOfRange,
    all_pairs_distances,
    build_digraph,
    cycle,
    girth,
    is_acyclic,
    heads,
    min_in_degree,
    omega_minus_set,
    omega_plus_set,
    out_neighborhood_r,
)
from .domination import (
    enumerate_k_independent_sets,
    enumerate_kernels,
    enumerate_kl_kernels,
    enumerate_quasikernels,
    enumerate_semikernels,
    fibonacci_number,
    is_k_independent,
    is_kl_kernel,
    is_l_absorbing,
    is_semikernel,
    map_f,
    map_h,
)
from .fixtures import FIXTURE_NAMES, Fixture, UnknownFixture, fixture
from .generators import SplitMix64, random_dag, random_digraph
from .grundy import (
    IllDefinedProjection,
    NotAcyclic,
    NotAGrundyFunction,
    PreconditionLViolation,
    acyclic_grundy,
    enumerate_kl_grundy,
    grundy_zero_kernel,
    is_grundy,
    is_kl_grundy,
    lift_grundy,
    project_grundy,
)
from .pld import (
    LabeledPld,
    PartialLineMap,
    PldError,
    build_pld,
    count_plds,
    enumerate_plds,
    identity_map,
    iter_plds,
    line_digraph,
    validate_pld,
)

__version__ = "0.1.0"
