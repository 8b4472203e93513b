"""Table emitters: small, bit-stable summaries (CSV or JSON) of the
valuation-growth formula, the ramification data, and the omega products.

Every cell is a canonically formatted string (rationals always "a/b"),
and rows are sorted lexicographically, so identical parameters always
produce identical bytes.
"""

from __future__ import annotations

import json

from .formulas import FormulaInput, OmegaPolynomial, lvalue_valuation_rhs
from .padic import canonical_rational
from .ramification import (different_exponent, herbrand_function,
                           tower_different_exponent)
from .suites import SCHEMA_VERSION

TABLE_KINDS = ("valuation-growth", "ramification", "omega")


def _growth_table(params: dict) -> tuple[list[str], list[list[str]]]:
    p = int(params.get("p", 5))
    n_max = int(params.get("n_max", 9))
    lam = int(params.get("lambda", 0))
    mu = int(params.get("mu", 0))
    rows = []
    for n in range(1, n_max + 1):
        eps = (-1) ** (n - 1)
        v = lvalue_valuation_rhs(
            FormulaInput(p, n, epsilon=eps, lambda_inv=lam, mu_inv=mu))
        rows.append([f"{n:02d}", canonical_rational(v.value)])
    return ["n", "valuation"], rows


def _ramification_table(params: dict) -> tuple[list[str], list[list[str]]]:
    p = int(params.get("p", 3))
    n = int(params.get("n", 2))
    h = herbrand_function(p, n)
    rows = []
    for (u, psi_u) in h.breakpoints:
        rows.append(["breakpoint", canonical_rational(u),
                     canonical_rational(psi_u)])
    for i in range(1, n + 1):
        rows.append(["different", str(i),
                     canonical_rational(different_exponent(p, n, i))])
    rows.append(["tower-different", "-",
                 canonical_rational(tower_different_exponent(p, n))])
    return ["kind", "index", "value"], rows


def _omega_table(params: dict) -> tuple[list[str], list[list[str]]]:
    p = int(params.get("p", 5))
    n = int(params.get("n", 3))
    rows = []
    for sign, label in ((1, "+"), (-1, "-")):
        poly = OmegaPolynomial(sign, n)
        factors = []
        if poly.has_linear_factor:
            factors.append("gamma-1")
        factors.extend(f"cyclo(p^{k})" for k in poly.cyclotomic_indices)
        factor_str = ";".join(factors) or "1"
        for m in range(1, n + 1):
            v = poly.valuation_at_order(p, m)
            rows.append([label, str(m), factor_str, str(v)])
    return ["sign", "order_exponent", "factors", "valuation"], rows


_BUILDERS = {
    "valuation-growth": _growth_table,
    "ramification": _ramification_table,
    "omega": _omega_table,
}


def build_table(kind: str, params: dict | None = None
                ) -> tuple[list[str], list[list[str]]]:
    if kind not in _BUILDERS:
        raise ValueError(
            f"unknown table kind {kind!r}; available: {', '.join(TABLE_KINDS)}")
    columns, rows = _BUILDERS[kind](params or {})
    rows.sort()
    return columns, rows


def emit_table(kind: str, params: dict | None = None,
               fmt: str = "csv") -> str:
    """Render the table as a string; bit-stable for fixed inputs."""
    columns, rows = build_table(kind, params)
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(row) for row in rows)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {"schema": SCHEMA_VERSION, "kind": kind,
               "params": {k: str(v) for k, v in sorted((params or {}).items())},
               "columns": columns, "rows": rows}
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    raise ValueError(f"unknown format {fmt!r}; use csv or json")
