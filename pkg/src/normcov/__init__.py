"""Exact partition combinatorics and certified lower bounds for the normal
covering numbers of symmetric and alternating groups."""

from .errors import DomainError, EnumerationGuardError, NegativeDiscriminantError
from .numtheory import (
    Factorization,
    QRep,
    euler_phi,
    factorize,
    omega,
    prime_power,
    q_set,
)
from .partitions import (
    ClusterFamily,
    canonical,
    cluster_intersection,
    count_all_partitions,
    count_cluster_partitions,
    count_coprime,
    count_partitions,
    enumerate_partitions,
    has_cluster,
    projective_triple,
    union_cluster_count,
)
from .covering import (
    Alternating,
    BasicSet,
    CoverageReport,
    GroupKind,
    Imprimitive,
    Intransitive,
    PrimitiveEntry,
    alt,
    conjecture_value,
    counterexample_check,
    covers,
    imprimitive_coprime3_count,
    maroti_basic_set,
    maroti_upper_bound,
    partition_in_group,
    primitive_coprime3_types,
    sym,
    verify_basic_set,
)
from .bounds import (
    BoundReport,
    bound_report,
    f_overhead,
    intransitive_quadratic_solve,
    lower_bound_corollary,
    lower_bound_theorem,
    primitive_cap,
    zeta2,
)

__version__ = "0.1.0"
