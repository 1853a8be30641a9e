"""Exact facet systems, LP optimality certificates, and volumes for the
convex hull of a product of box-bounded variables.

Rationals are fractions.Fraction on the way out; arguments accept int, str
("p/q", "p", or decimal), or Fraction.
"""

from ._monohull import (
    DualCertificate,
    InequalitySystem,
    Instance,
    LinearInequality,
    PrimalResult,
    UnsupportedError,
    VerificationReport,
    Vertex,
    __version__,
    brute_force_optimize,
    build_certificate,
    candidate_values,
    classify,
    dual_objective,
    evaluate,
    facet_system_cn0,
    facet_system_cn1,
    facet_system_mccormick,
    lifted_Q_facets,
    membership,
    monte_carlo_volume,
    primal_solve,
    separation_check_v2,
    verify_certificate,
    vertices,
    volume_by_decomposition,
    volume_cn0,
    volume_cn1,
    volume_mccormick,
    volume_report,
)

__all__ = [
    "DualCertificate",
    "InequalitySystem",
    "Instance",
    "LinearInequality",
    "PrimalResult",
    "UnsupportedError",
    "VerificationReport",
    "Vertex",
    "__version__",
    "brute_force_optimize",
    "build_certificate",
    "candidate_values",
    "classify",
    "dual_objective",
    "evaluate",
    "facet_system_cn0",
    "facet_system_cn1",
    "facet_system_mccormick",
    "lifted_Q_facets",
    "membership",
    "monte_carlo_volume",
    "primal_solve",
    "separation_check_v2",
    "verify_certificate",
    "vertices",
    "volume_by_decomposition",
    "volume_cn0",
    "volume_cn1",
    "volume_mccormick",
    "volume_report",
]
