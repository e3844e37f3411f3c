"""Exact planar power series over planar reduced rooted trees."""

from .calculus import (
    DomainError,
    derivation_apply,
    derivative,
    differential,
    differential_substituted,
    verify_chain_rule,
    verify_special_chain_rule,
)
from .expr import ParseError, format_canonical, format_json, format_pretty, format_series, parse
from .report import Mismatch, Report
from .series import (
    DistanceBound,
    OrderBound,
    PrecisionError,
    Series,
    add,
    coefficient,
    distance,
    homogeneous_component,
    one,
    ord_x,
    product,
    scale,
    x_series,
    y_series,
    zero,
)
from .special_series import (
    NotNormalizedError,
    bracket,
    bracket_factorial,
    exp_k,
    h4_discrepancy_report,
    h_closed_form,
    log_k,
    reversion,
    verify_exp_derivative,
    verify_exp_functional_equation,
    verify_h_recurrence,
    verify_log_ode,
    verify_omega_equation,
)
from .substitution import OrderError, composite, eval_y_one, substitute
from .trees import (
    UNIT,
    ArityError,
    decompositions,
    delete_leaf_and_reduce,
    encode,
    enumerate_monomials,
    graft,
    orbit_key,
    orbit_sum,
    relabel_leaf,
)

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "format_canonical",
    "format_json",
    "format_pretty",
    "format_series",
    "parse",
    "Mismatch",
    "Report",
    "OrderError",
    "composite",
    "eval_y_one",
    "substitute",
    "DomainError",
    "derivation_apply",
    "derivative",
    "differential",
    "differential_substituted",
    "verify_chain_rule",
    "verify_special_chain_rule",
    "DistanceBound",
    "OrderBound",
    "PrecisionError",
    "Series",
    "add",
    "coefficient",
    "distance",
    "homogeneous_component",
    "one",
    "ord_x",
    "product",
    "scale",
    "x_series",
    "y_series",
    "zero",
    "NotNormalizedError",
    "bracket",
    "bracket_factorial",
    "exp_k",
    "h4_discrepancy_report",
    "h_closed_form",
    "log_k",
    "reversion",
    "verify_exp_derivative",
    "verify_exp_functional_equation",
    "verify_h_recurrence",
    "verify_log_ode",
    "verify_omega_equation",
    "UNIT",
    "ArityError",
    "decompositions",
    "delete_leaf_and_reduce",
    "encode",
    "enumerate_monomials",
    "graft",
    "orbit_key",
    "orbit_sum",
    "relabel_leaf",
]
