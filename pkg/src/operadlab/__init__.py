"""Exact computation of one-parameter deformations of the dendriform and
diassociative operads in arity 3."""

from .arith import QQq, ZZ, Poly, q
from .linalg import Matrix, hnf, hnf_with_transform, nullspace_basis, rank
from .operad import Relation, module_equal, s3_closure
from .pipelines import PIPELINES, run_pipeline, verify_specialization

__version__ = "0.1.0"

__all__ = [
    "QQq", "ZZ", "Poly", "q", "Matrix", "hnf", "hnf_with_transform", "nullspace_basis",
    "rank", "Relation", "module_equal", "s3_closure", "PIPELINES", "run_pipeline",
    "verify_specialization",
]
