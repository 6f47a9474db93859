"""Exact arithmetic toolkit for null-vector templates of random sign matrices.

A length-k integer partition lambda is treated as a template for null
vectors of random n x n Bernoulli (+-1) matrices.  The package computes
the Bernoulli orthogonal complement of a template, its occurrence
probability r_lambda, novelty certificates, reduction and equivalence
relations between templates, ranked tables, inclusion-exclusion
expansions for the singularity probability, and exact small-n matrix
enumeration.  All probabilistic quantities are exact (fractions with
power-of-two denominators); floating point is never used for decisions.
"""

from ntl.core import (
    Partition,
    SignVector,
    Complement,
    DyadicProbability,
    complement,
    r_lambda,
    count_template_vectors,
    template_vectors,
    a_matrix,
)
from ntl.errors import (
    NtlError,
    InfeasibleSizeError,
    NotFairlyDivisibleError,
    VerificationError,
)
from ntl.novelty import (
    NoveltyCertificate,
    rank_of,
    is_novel,
    implies_11,
    reduces,
    equivalent,
    enumerate_novel,
    kernel_primitive,
    minimal_witness,
)

__all__ = [
    "Partition",
    "SignVector",
    "Complement",
    "DyadicProbability",
    "complement",
    "r_lambda",
    "count_template_vectors",
    "template_vectors",
    "a_matrix",
    "NtlError",
    "InfeasibleSizeError",
    "NotFairlyDivisibleError",
    "VerificationError",
    "NoveltyCertificate",
    "rank_of",
    "is_novel",
    "implies_11",
    "reduces",
    "equivalent",
    "enumerate_novel",
    "kernel_primitive",
    "minimal_witness",
]

__version__ = "0.1.0"
