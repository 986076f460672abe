"""
Aligned text tables for --table output, rendered through pandas.
"""

from typing import Iterable, Optional

import pandas as pd

from braided.braiding import MonomialBraiding
from braided.solutions import Rack, SetSolution
from utils.literals import format_literal


def render(rows: Iterable[dict], columns: Optional[list[str]] = None) -> str:
    df = pd.DataFrame(list(rows), columns=columns)
    if df.empty:
        return "(no rows)"
    return df.to_string(index=False)


def dims_table(report: dict) -> str:
    """One row per degree: dim, candidate count, rank, orbits, seconds."""
    stats = {s["degree"]: s for s in report.get("stats", [])}
    rows = []
    for degree, dim in enumerate(report["dims"]):
        s = stats.get(degree, {})
        rows.append({
            "degree": degree,
            "dim": dim,
            "candidates": s.get("candidates", ""),
            "orbits": s.get("orbits", ""),
            "seconds": round(s["seconds"], 3) if "seconds" in s else "",
        })
    return render(rows)


def braiding_table(c: MonomialBraiding) -> str:
    """c(w_i (x) w_j) = coeff w_si (x) w_tj, 1-based."""
    return render(
        {"i": i + 1, "j": j + 1, "si": si + 1, "tj": tj + 1, "coeff": format_literal(v)}
        for i, j, si, tj, v in c.entries()
    )


def solution_table(sol: SetSolution) -> str:
    return render(
        {"i": i + 1, "j": j + 1, "si": x + 1, "tj": y + 1}
        for (i, j), (x, y) in sol.pairs()
    )


def rack_table(rack: Rack) -> str:
    """Cayley table of |>; row i, column j holds i |> j."""
    df = pd.DataFrame([list(row) for row in rack.op])
    df.insert(0, "|>", range(rack.size))
    return df.to_string(index=False)


def verdict_table(verdicts: Iterable[dict]) -> str:
    rows = []
    for v in verdicts:
        rows.append({
            "family": v["family"],
            "params": " ".join(f"{k}={val}" for k, val in v["params"].items()),
            "verdict": v["verdict"],
            "total": v.get("total", ""),
            "type": v.get("type", ""),
            "rule": v["rule"],
        })
    return render(rows)


def runs_table(rows: Iterable) -> str:
    columns = ["id", "command", "family", "cap", "started_at", "exit_code", "verdict", "total", "cache_hit"]
    return render(({k: row[k] for k in columns} for row in rows), columns)
