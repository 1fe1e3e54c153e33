"""Renderers: the classic row-per-diagonal Betti table layout, JSON documents
with decimal-string values, and CSV for spreadsheet import.

JSON documents keep a fixed key order and render every computed integer as a
decimal string so no consumer can lose precision on large Betti numbers.
"""

from __future__ import annotations

import json

from .betti import BettiTable, RingInvariants
from .polynomials import FVector, HilbertNumerator


def _layout(rows: list[list[str]]) -> str:
    widths = [0] * max(len(r) for r in rows)
    for row in rows:
        for c, cell in enumerate(row):
            widths[c] = max(widths[c], len(cell))
    lines = []
    for row in rows:
        lines.append(" ".join(cell.rjust(widths[c]) for c, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def render_paper_table(table: BettiTable) -> str:
    """Header of homological positions, a total row, then one row per diagonal
    labeled "0:", "1:", ...; zeros render as "."."""
    pd = table.proj_dim
    top_diag = max([j - i for (i, j), _ in table.nonzero()], default=0)
    rows = [[""] + [str(c) for c in range(pd + 1)]]
    rows.append(["total:"] + [str(v) for v in table.column_totals()])
    for d in range(top_diag + 1):
        cells = []
        for c in range(pd + 1):
            v = table[(c, c + d)]
            cells.append(str(v) if v else ".")
        rows.append([f"{d}:"] + cells)
    return _layout(rows)


def render_csv_table(table: BettiTable) -> str:
    """CSV mirror of the diagonal layout (zeros as 0) for spreadsheet import."""
    pd = table.proj_dim
    top_diag = max([j - i for (i, j), _ in table.nonzero()], default=0)
    lines = ["diagonal," + ",".join(str(c) for c in range(pd + 1))]
    lines.append("total," + ",".join(str(v) for v in table.column_totals()))
    for d in range(top_diag + 1):
        lines.append(
            f"{d}," + ",".join(str(table[(c, c + d)]) for c in range(pd + 1))
        )
    return "\n".join(lines) + "\n"


def betti_doc(table: BettiTable) -> list[dict]:
    return [
        {"i": i, "j": j, "value": str(v)} for (i, j), v in table.nonzero()
    ]


def fvector_doc(fv: FVector) -> list[str]:
    return [str(c) for c in fv.entries]


def numerator_doc(num: HilbertNumerator) -> list[str]:
    return [str(c) for c in num.poly.coeffs] or ["0"]


def invariants_doc(inv: RingInvariants) -> dict:
    return {
        "pd": str(inv.pd),
        "reg": str(inv.reg),
        "depth": str(inv.depth),
        "krull_dim": str(inv.krull_dim),
        "is_cm": inv.is_cm,
    }


def structured_document(
    *,
    sizes,
    k,
    n_vars,
    method,
    field=None,
    betti=None,
    fvector=None,
    numerator=None,
    invariants=None,
    agreement=None,
) -> dict:
    """The one-document-per-invocation schema; key order is part of the contract."""
    return {
        "sizes": list(sizes) if sizes is not None else None,
        "k": k,
        "N": n_vars,
        "method": method,
        "field": field,
        "betti": betti_doc(betti) if betti is not None else None,
        "fvector": fvector_doc(fvector) if fvector is not None else None,
        "numerator": numerator_doc(numerator) if numerator is not None else None,
        "invariants": invariants_doc(invariants) if invariants is not None else None,
        "agreement": agreement,
    }


def to_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
