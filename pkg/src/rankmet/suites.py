"""Named verification suites run by the CLI `verify` command.

Each check re-derives a pinned desk-scale fact two ways (closed form vs
exhaustive scan, construction vs independent oracle) and reports the
theorem-style identifier it exercises.  Everything here is deterministic:
random sampling uses fixed seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import bounds as bd
from . import codes as cd
from . import constructions as cons
from . import linalg
from . import systems as qs
from .errors import RankmetError
from .fields import make_field


@dataclass(frozen=True)
class CheckResult:
    check: str
    ok: bool
    detail: str


def _result(check: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(check, bool(ok), detail)


# ---------------------------------------------------------------------------


def suite_census() -> list[CheckResult]:
    out = []
    cases = [(2, 1, 2, 2), (2, 1, 3, 2), (2, 1, 3, 3), (3, 1, 2, 2), (2, 2, 2, 2)]
    for p, h, m, k in cases:
        tower = make_field(p, h, m)
        sub = qs.make_system(tower, k, [tuple(1 if j == i else 0 for j in range(k))
                                        for i in range(k)])
        census = qs.hyperplane_census(sub)
        closed = bd.subgeometry_census(tower.q, m, k)
        ok = (census.t0, census.t1, census.ts) == (closed.gamma, closed.delta, closed.beta)
        out.append(_result(
            f"lemma3.6/thm3.8 census q={tower.q} m={m} k={k}", ok,
            f"brute force {(census.t0, census.t1, census.ts)} vs closed "
            f"{(closed.gamma, closed.delta, closed.beta)}"))
        out.append(_result(
            f"lemma3.6 identity q={tower.q} m={m} k={k}",
            closed.gamma + closed.delta + closed.beta == closed.total
            and closed.alpha == closed.delta + closed.beta,
            f"gamma+delta+beta = {closed.gamma + closed.delta + closed.beta} "
            f"of {closed.total}"))
    pinned = bd.subgeometry_census(2, 3, 3)
    out.append(_result(
        "lemma3.6 pinned (2,3,3)",
        (pinned.gamma, pinned.delta, pinned.beta) == (24, 42, 7),
        f"(gamma,delta,beta) = {(pinned.gamma, pinned.delta, pinned.beta)}"))
    return out


def suite_duality() -> list[CheckResult]:
    out = []
    rng = random.Random(20240711)
    combos = [(2, 2), (3, 2), (2, 3), (3, 3)]
    relation_failures = 0
    pairs = 0
    for m, k in combos:
        tower = make_field(2, 1, m)
        km = m * k
        for _ in range(4):
            n = rng.randint(1, km - 1)
            sys = qs.random_system(tower, k, n, rng)
            dual = qs.dual_system(sys)
            if qs.dual_system(dual) != sys:
                out.append(_result("prop2.13 biduality", False, f"failed at m={m} k={k}"))
                return out
            for x in linalg.enumerate_points(tower, k):
                pairs += 2
                if qs.hyperplane_weight(dual, x) != qs.point_weight(sys, x) + km - n - m:
                    relation_failures += 1
                if qs.point_weight(dual, x) != qs.hyperplane_weight(sys, x) + km - n - (k - 1) * m:
                    relation_failures += 1
    out.append(_result("prop2.13 weight relation", relation_failures == 0,
                       f"{pairs} polar pairs checked, {relation_failures} failures"))
    out.append(_result("prop2.13 biduality", True, "dual of dual returned the system"))
    scattered_checked = 0
    scattered_failures = 0
    for m, k in ((2, 2), (3, 2), (2, 3)):
        tower = make_field(2, 1, m)
        for _ in range(5):
            sys = qs.random_system(tower, k, m * k // 2, rng)
            scattered_checked += 1
            if qs.is_scattered(sys) != qs.is_scattered(qs.dual_system(sys)):
                scattered_failures += 1
    out.append(_result("prop2.14 scattered duality", scattered_failures == 0,
                       f"{scattered_checked} half-rank systems, "
                       f"{scattered_failures} mismatches"))
    f4 = make_field(2, 1, 2)
    sub = qs.make_system(f4, 2, [(1, 0), (0, 1)])
    out.append(_result("prop2.13 self-dual subgeometry",
                       qs.dual_system(sub) == sub,
                       "standard-form dual of the rank-2 subgeometry is itself"))
    return out


def suite_bounds() -> list[CheckResult]:
    out = []
    r = bd.bounds_dim2(2, 3, 3, True)
    out.append(_result("thm3.2 window (2,3,3)", (r.lower, r.upper) == (14, 28),
                       f"[{r.lower}, {r.upper}]"))
    r = bd.bounds_dim2_e(2, 3, 3, 1)
    out.append(_result("thm3.3 window (2,3,3,e=1)", (r.lower, r.upper) == (14, 28),
                       f"[{r.lower}, {r.upper}]"))
    out.append(_result("thm3.3 recovery", bd.recover_n(28, 2, 3, 1) == 3,
                       f"n = {bd.recover_n(28, 2, 3, 1)}"))
    r = bd.bounds_dim2_dual(2, 3, 4)
    out.append(_result("thm3.5 window (2,3,4)", (r.lower, r.upper) == (42, 42),
                       f"[{r.lower}, {r.upper}]"))
    r = bd.bounds_k_nlem(2, 3, 3, 3)
    out.append(_result("thm3.8 forced (2,3,3,3)",
                       r.lower == r.upper == 24 * 7,
                       f"[{r.lower}, {r.upper}]"))
    r = bd.bounds_k_nlem_e(2, 3, 3, 3, 1)
    out.append(_result("thm3.10 window (2,3,3,3,e=1)",
                       (r.lower // 7, r.upper // 7) == (8, 32),
                       f"per-scale [{r.lower // 7}, {r.upper // 7}], "
                       f"proof-tight {r.extras['proof_tight_lower'] // 7}"))
    out.append(_result("thm3.10 recovery",
                       bd.recover_k_nlem(2, 3, 3, 1, 24 * 7) == 6,
                       f"m(k-2)+n = {bd.recover_k_nlem(2, 3, 3, 1, 24 * 7)}"))
    r = bd.bounds_k_mlen(2, 3, 6, 3)
    out.append(_result("thm3.12 forced (2,3,6,3)",
                       r.lower // 7 == r.upper // 7 == 66,
                       f"per-scale [{r.lower // 7}, {r.upper // 7}]"))
    r = bd.bounds_k_mlen(2, 3, 5, 3, e=1)
    out.append(_result("thm3.12 window (2,3,5,3,e=1)",
                       (r.lower // 7, r.upper // 7) == (58, 62),
                       f"per-scale [{r.lower // 7}, {r.upper // 7}]"))
    out.append(_result("thm3.12 recovery",
                       bd.recover_k_mlen(2, 3, 3, 1, 7 * 58) == 4,
                       f"km-n = {bd.recover_k_mlen(2, 3, 3, 1, 7 * 58)}"))
    ok13 = (bd.bound_subgeom_upper(2, 3, 5, 3, 1) == 60
            and bd.bound_subgeom_upper(2, 3, 5, 3, 2) == 62)
    out.append(_result("thm3.13 values (2,3,5,3)", ok13, "r=1 -> 60, r=2 -> 62"))
    tower = make_field(2, 1, 3)
    rng = random.Random(414243)
    forced_ok = True
    for _ in range(10):
        sys = qs.random_spanning_system(tower, 3, 3, rng)
        if cd.max_weight_count(qs.code_of(sys)) != 168:
            forced_ok = False
            break
    out.append(_result("thm3.8+thm4.8 forced M (random [3,3])", forced_ok,
                       "10 random spanning systems all have M = 168"))
    return out


def suite_constructions() -> list[CheckResult]:
    out = []
    f8 = make_field(2, 1, 3)
    f16 = make_field(2, 1, 4)
    gab = cons.gabidulin(f8, 3, 2)
    dist = cd.weight_distribution(gab)
    closed = cd.mrd_weight_distribution(2, 3, 3, 2)
    out.append(_result("thm2.2 MRD distribution", dist == closed == (1, 0, 49, 14),
                       f"brute {dist} vs closed {closed}"))
    poly = cons.poly_code(f8, (1, 2))
    pd = cd.weight_distribution(poly)
    out.append(_result("thm5.2 poly distribution", pd == (1, 7, 28, 28), f"{pd}"))
    oracle = cons.vdv_spectrum(2, 3, 1, 2)
    spec = qs.point_spectrum(cons.poly_system(f8, (1, 2)))
    out.append(_result("thm2.10 spectrum oracle", oracle.counts == spec.counts,
                       f"closed {oracle.counts} vs scan {spec.counts}"))
    rep = bd.bounds_dim2(2, 3, 3, True, observed=cd.max_weight_count(poly))
    out.append(_result("thm5.4 upper attainment", rep.verdict == bd.VERDICT_UPPER,
                       f"M = {cd.max_weight_count(poly)}, window [{rep.lower}, {rep.upper}]"))
    gd = qs.geometric_dual(poly)
    mirror = cons.poly_code(f8, (2, 1))
    out.append(_result("remark5.3 dual closure",
                       cd.weight_distribution(gd) == cd.weight_distribution(mirror),
                       f"dual {cd.weight_distribution(gd)}"))
    redei = cons.redei_code(f8)
    rep = bd.bounds_k_mlen(2, 3, 5, 3, observed=cd.max_weight_count(redei))
    out.append(_result("remark4.8+thm4.3 minimal example",
                       cd.max_weight_count(redei) == 406
                       and rep.verdict == bd.VERDICT_LOWER
                       and not cd.is_mrd(redei),
                       f"M = {cd.max_weight_count(redei)}, MRD = {cd.is_mrd(redei)}"))
    lifted = cons.lifted_poly_code(f16, 2, 1, (1, 2))
    ldual = qs.geometric_dual(lifted)
    out.append(_result("thm5.8 lifted parameters",
                       (lifted.n, lifted.k, cd.min_distance(lifted)) == (5, 2, 2)
                       and (ldual.n, ldual.k, cd.min_distance(ldual)) == (3, 2, 1),
                       f"[{lifted.n},{lifted.k},{cd.min_distance(lifted)}] and dual "
                       f"[{ldual.n},{ldual.k},{cd.min_distance(ldual)}]"))
    lifted_sq = cons.lifted_poly_code(f16, 2, 1, (1, 1))
    m_sq = cd.max_weight_count(lifted_sq)
    rep = bd.bounds_dim2(2, 4, 4, True, observed=m_sq)
    out.append(_result("thm5.9 lifted upper attainment",
                       rep.verdict == bd.VERDICT_UPPER,
                       f"M = {m_sq}, window [{rep.lower}, {rep.upper}]"))
    big = cons.poly_code(f8, (2, 2, 2))
    hyp = bd.check_max_hypotheses(2, 3, 3, (2, 2, 2))
    rep = bd.subgeom_bound_report(big, 1)
    out.append(_result("thm5.5 forward attainment",
                       hyp["thm5.5"]["holds"] and rep.applicable
                       and rep.verdict == bd.VERDICT_UPPER,
                       f"M = {cd.max_weight_count(big)}, thm3.13 r=1 upper {rep.upper}"))
    dist12 = cd.weight_distribution(poly)
    need = (2 ** 3 - 1) * (2 ** (3 - 2) + 2)
    out.append(_result("thm5.6 forward hypothesis",
                       dist12[2] >= need and cd.max_weight_count(poly) == 28,
                       f"A_2 = {dist12[2]} >= {need} and maximal M"))
    return out


SUITES = {
    "census": suite_census,
    "duality": suite_duality,
    "bounds": suite_bounds,
    "constructions": suite_constructions,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        results = []
        for key in ("duality", "census", "bounds", "constructions"):
            results.extend(SUITES[key]())
        return results
    if name not in SUITES:
        raise RankmetError(f"unknown suite {name!r}; choose from "
                           f"{sorted(SUITES)} or 'all'")
    return SUITES[name]()
