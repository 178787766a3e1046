"""
Plain-text rendering for --format text
The B-tables keep the column headers B, |mu(B)|, w(B), h(B)/h(F), s, Delta
"""

from typing import Any, Iterable, List, Sequence

from quatclass.arith import format_rational
from quatclass.assisted import AssistedReport
from quatclass.cm.orders import CMOrderEntry
from quatclass.pipeline import BatchSummary, ClassNumberReport

B_TABLE_HEADERS = ["B", "|μ(B)|", "w(B)", "h(B)/h(F)", "s", "Δ+", "Δ-"]
BATCH_HEADERS = ["p", "regime", "ζ_F(-1)", "h1+", "h1-", "h_sc+", "h_sc-", "|Tp|", "status"]

def table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces"""
    cells = [[str(h) for h in headers]] + [["" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)

def _b_rows(entries: List[CMOrderEntry]) -> List[List[Any]]:
    return [
        [e.label, e.mu_order, e.unit_index, e.h_ratio_text(), int(e.selective),
         e.delta_principal, e.delta_nonprincipal]
        for e in entries
    ]

def render_report(result: ClassNumberReport) -> str:
    field = result.field
    lines = [
        f"F = Q(sqrt {result.p})   regime {result.regime.value}",
        f"zeta_F(-1) = {format_rational(field.zeta_minus_one)}   h(F) = {field.class_number}"
        f"   h+(F) = {field.narrow_class_number}",
        f"fundamental unit: {result.fundamental_unit}",
    ]
    if result.auxiliary_class_numbers:
        lines.append("   ".join(f"{k} = {v}" for k, v in sorted(result.auxiliary_class_numbers.items())))
    if result.kron2p is not None:
        lines.append(f"(2|p) = {result.kron2p}")
    masses = result.masses
    lines += [
        "",
        f"Mass^1 = {format_rational(masses.mass1)}   Mass = {format_rational(masses.mass_total)}"
        f"   Mass_sc = {format_rational(masses.mass_sc)}   |SCl| = {masses.scl_size}",
        "",
        "B1 (orders with |μ(B)| > 2):",
        table(B_TABLE_HEADERS, _b_rows(result.b_tables.b1_entries)),
    ]
    if result.b_tables.b_entries is not None:
        lines += ["", "B (orders with w(B) > 1):", table(B_TABLE_HEADERS, _b_rows(result.b_tables.b_entries))]

    lines += [
        "",
        table(["spinor genus", "h1", "h_sc", "types"],
              [[tag, g.h1, g.h_sc, g.type_count] for tag, g in result.per_genus.items()]),
        f"type number |Tp| = {result.type_number_total}",
    ]
    if result.noncyclic_types:
        lines.append("non-cyclic types: " + ", ".join(
            f"{label} {tag.value}" for label, tag in result.noncyclic_types.items()))
    if result.identities_checked:
        passed = sum(1 for r in result.identities_checked if r.passed)
        lines.append(f"checks: {passed}/{len(result.identities_checked)} passed")
    return "\n".join(lines)

def render_batch(summary: BatchSummary) -> str:
    rows = []
    for row in summary.rows:
        status = "ok" if row.failed_check is None else f"FAIL {row.failed_check}"
        rows.append([
            row.p, row.regime, format_rational(row.zeta),
            row.h1.get("principal"), row.h1.get("nonprincipal"),
            row.h_sc.get("principal"), row.h_sc.get("nonprincipal"),
            row.type_number_total, status,
        ])
    verdict = "all checks passed" if summary.passed else "checks FAILED"
    return table(BATCH_HEADERS, rows) + f"\n{len(summary.rows)} primes, {verdict}"

def render_assisted(result: AssistedReport) -> str:
    masses = result.masses
    lines = [
        f"spinor genus: {result.target_genus_label}",
        f"Mass^1 = {format_rational(masses.mass1)}   Mass = {format_rational(masses.mass_total)}"
        f"   Mass_sc = {format_rational(masses.mass_sc)}   |SCl| = {masses.scl_size}",
        f"B1: {', '.join(result.b1_labels) or '-'}",
        f"B: {', '.join(result.b_labels) or '-'}",
    ]
    if result.h1 is not None:
        lines.append(f"h1 = {result.h1}")
    if result.h_sc is not None:
        lines.append(f"h_sc = {result.h_sc}")
    return "\n".join(lines)
