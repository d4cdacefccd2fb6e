"""Exact computation of the dominated chromatic number, its stability and
bondage, with generators and an audit harness for the closed-form tables."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    DomchromError,
    GraphFormatError,
    InvalidParameterError,
    NoPredictionError,
    OracleCapError,
    UndefinedInvariantError,
)
from .families import (
    CirculantReduction,
    Family,
    FamilySpec,
    chain_cut_vertices,
    circulant_reduce,
    clique_with_attachments,
    generate,
    parse_family,
    parse_family_range,
    spec,
)
from .graph import (
    Graph,
    cartesian_product,
    components,
    delete_edges,
    delete_vertices,
    diameter,
    disjoint_union,
    format_edge_list,
    make_graph,
    parse_dimacs,
    parse_edge_list,
    point_attach,
    r_glue,
)
from .invariants import (
    InvariantResult,
    chromatic_number,
    domination_number,
    total_domination_number,
)
from .predictions import (
    ERRATA,
    PROVED,
    SUSPECT,
    Erratum,
    Prediction,
    bound_clique_star,
    bound_point_attach,
    bound_r_glue,
    erratum_for,
    predict_dom_chromatic,
    predict_gamma_t_circulant13,
    sandwich,
)
from .perturb import (
    PerturbationResult,
    dom_bondage,
    dom_stability,
    predict_bondage,
    predict_stability,
)
from .audit import AuditReport, AuditRow, audit_specs, report_to_dict
from .solver import (
    DomColoring,
    Violation,
    available_backends,
    dom_chromatic,
    dom_chromatic_oracle,
    exists_k,
    has_compiled_kernel,
    verify,
)

__all__ = [
    "AuditReport",
    "AuditRow",
    "BudgetExceededError",
    "CirculantReduction",
    "DomColoring",
    "DomchromError",
    "ERRATA",
    "Erratum",
    "Family",
    "FamilySpec",
    "Graph",
    "GraphFormatError",
    "InvalidParameterError",
    "InvariantResult",
    "NoPredictionError",
    "OracleCapError",
    "PROVED",
    "PerturbationResult",
    "Prediction",
    "SUSPECT",
    "UndefinedInvariantError",
    "Violation",
    "audit_specs",
    "available_backends",
    "bound_clique_star",
    "bound_point_attach",
    "bound_r_glue",
    "cartesian_product",
    "chain_cut_vertices",
    "chromatic_number",
    "circulant_reduce",
    "clique_with_attachments",
    "components",
    "delete_edges",
    "delete_vertices",
    "diameter",
    "disjoint_union",
    "dom_bondage",
    "dom_chromatic",
    "dom_chromatic_oracle",
    "dom_stability",
    "domination_number",
    "erratum_for",
    "exists_k",
    "format_edge_list",
    "generate",
    "has_compiled_kernel",
    "make_graph",
    "parse_dimacs",
    "parse_edge_list",
    "parse_family",
    "parse_family_range",
    "point_attach",
    "predict_bondage",
    "predict_dom_chromatic",
    "predict_gamma_t_circulant13",
    "predict_stability",
    "r_glue",
    "report_to_dict",
    "sandwich",
    "spec",
    "total_domination_number",
    "verify",
]
