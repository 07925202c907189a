"""Canonical report assembly: JSON with sorted keys and decimal-string
integers for every potentially large count, so identical inputs reproduce
byte-identical files across runs and platforms."""

from __future__ import annotations

import json
from typing import Sequence

from . import __version__
from . import codes as _codes
from . import systems as _systems
from .bounds import classify_extremal
from .codes import Code
from .errors import ValidationError
from .fields import FieldTower

CSV_COLUMNS = ("q", "h", "m", "n", "k", "d", "e", "M",
               "bound", "lower", "upper", "verdict")


def matrix_literal(tower: FieldTower, G: Sequence[Sequence[int]]) -> str:
    """Rows joined by ';', entries by ',', entries in the element grammar."""
    return ";".join(",".join(tower.format_element(c) for c in row) for row in G)


def parse_matrix(tower: FieldTower, text: str) -> list[list[int]]:
    rows = []
    for chunk in text.strip().split(";"):
        if not chunk.strip():
            raise ValidationError("empty matrix row")
        rows.append([tower.parse_element(cell) for cell in chunk.split(",")])
    return rows


def code_json_obj(code: Code) -> dict:
    tower = code.tower
    return {
        "field": tower.spec,
        "n": code.n,
        "k": code.k,
        "G": matrix_literal(tower, code.G),
    }


def analyze_code(code: Code, budget: int | None = None,
                 source: str | None = None) -> dict:
    """Full analysis record for one code: distribution, M, every applicable
    bound, and the extremality cross-checks."""
    result = classify_extremal(code, budget)
    dist = _codes.weight_distribution(code, budget)
    classification: dict[str, list[str]] = {}
    for rep in result["reports"]:
        if rep.applicable and rep.verdict:
            classification.setdefault(rep.verdict, []).append(rep.bound)
    record = {
        "tool": {"name": "rankmet", "version": __version__},
        "source": source or "matrix",
        "code": code_json_obj(code),
        "system": _systems.system_of(code).as_dict(),
        "params": result["params"],
        "nondegenerate": _codes.is_nondegenerate(code),
        "is_mrd": result["is_mrd"],
        "weight_distribution": [str(a) for a in dist],
        "M": str(result["M"]),
        "e": result["e"],
        "bounds": [r.as_dict() for r in result["reports"]],
        "classification": {k: sorted(set(v)) for k, v in sorted(classification.items())},
        "checks": {k: bool(v) for k, v in sorted(result["checks"].items())},
    }
    return record


def to_canonical_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def shape_bound_report(code: Code, budget: int | None = None):
    """The base bound matching the code's parameter shape (no refinements);
    used for one-line-per-system outputs."""
    from . import bounds as bd

    tower = code.tower
    q, m, n, k = tower.q, tower.m, code.n, code.k
    M = _codes.max_weight_count(code, budget)
    dist = _codes.weight_distribution(code, budget)
    if k == 2 and n <= m:
        has_n1 = n >= 2 and dist[n - 1] > 0
        return bd.bounds_dim2(q, m, n, has_n1, observed=M)
    if k == 2:
        if _systems.geometric_dual_exists(code) and n < 2 * m:
            return bd.bounds_dim2_dual(q, m, n, observed=M)
        return bd.BoundReport("thm3.5", False, None, None, M,
                              bd.VERDICT_INAPPLICABLE, "no geometric dual")
    if k <= n <= m:
        return bd.bounds_k_nlem(q, m, n, k, observed=M)
    if _systems.geometric_dual_exists(code):
        return bd.bounds_k_mlen(q, m, n, k, observed=M)
    return bd.BoundReport("thm3.12", False, None, None, M,
                          bd.VERDICT_INAPPLICABLE, "no geometric dual")


def scan_row(system, budget: int | None = None) -> dict:
    """One CSV row for a sampled or enumerated system."""
    tower = system.tower
    base = {"q": tower.q, "h": tower.h, "m": tower.m,
            "n": system.n, "k": system.k}
    if not system.spanning:
        return {**base, "d": "", "e": "", "M": "", "bound": "",
                "lower": "", "upper": "", "verdict": "degenerate"}
    code = _systems.code_of(system)
    M = _codes.max_weight_count(code, budget)
    d = _codes.min_distance(code, budget)
    e = _codes.second_max_weight_offset(code, budget)
    rep = shape_bound_report(code, budget)
    return {
        **base,
        "d": d,
        "e": "" if e is None else e,
        "M": str(M),
        "bound": rep.bound,
        "lower": "" if rep.lower is None else str(rep.lower),
        "upper": "" if rep.upper is None else str(rep.upper),
        "verdict": rep.verdict or "",
    }
