"""Numerical toolkit for Euclidean Jordan algebras."""

from ._jordanlab import (
    Algebra,
    Element,
    JordanError,
    apply_function,
    cli,
    commutant,
    commute_residual,
    counterexample_matches,
    counterexample_names,
    family,
    identity_residual,
    is_effect,
    is_positive,
    jordan_mul,
    operator_commute,
    order_unit_norm,
    power,
    q_operator,
    q_panel,
    seq_product,
    spectrum,
    sqrt,
    suite_records,
    t_operator,
    theorem_report,
)

__all__ = [
    "Algebra",
    "Element",
    "JordanError",
    "apply_function",
    "cli",
    "commutant",
    "commute_residual",
    "counterexample_matches",
    "counterexample_names",
    "family",
    "identity_residual",
    "is_effect",
    "is_positive",
    "jordan_mul",
    "operator_commute",
    "order_unit_norm",
    "power",
    "q_operator",
    "q_panel",
    "seq_product",
    "spectrum",
    "sqrt",
    "suite_records",
    "t_operator",
    "theorem_report",
]
