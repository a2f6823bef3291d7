from .invariants import (
    NonIntegerResult,
    molien_coefficients,
    molien_invariant_dimension,
    reynolds_linear_is_zero,
    verify_invariance,
)
from .lines import (
    DisjointnessCertificate,
    DuplicateLines,
    IntersectionGraph,
    build_intersection_graph,
    miyaoka_bound,
    rams_bound,
    verify_disjoint_family,
)
from .report import CLAIMS, CertificateReport, Claim, Pipeline, full_report, run_claims
from .search import independent_set_search
from .smoothness import SingularPointFound, SmoothnessCertificate, find_smooth_prime, smoothness_certificate

__all__ = [
    "CLAIMS",
    "CertificateReport",
    "Claim",
    "DisjointnessCertificate",
    "DuplicateLines",
    "IntersectionGraph",
    "NonIntegerResult",
    "Pipeline",
    "SingularPointFound",
    "SmoothnessCertificate",
    "build_intersection_graph",
    "find_smooth_prime",
    "full_report",
    "independent_set_search",
    "miyaoka_bound",
    "molien_coefficients",
    "molien_invariant_dimension",
    "rams_bound",
    "reynolds_linear_is_zero",
    "run_claims",
    "smoothness_certificate",
    "verify_disjoint_family",
    "verify_invariance",
]
