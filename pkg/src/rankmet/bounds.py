"""Closed-form bounds on the number of maximum-weight codewords, hypothesis
predicates, parameter recovery, and extremality classification.

Every bound is evaluated in exact integer arithmetic; where a printed bound
has a rational right-hand side the reported integer bound is the tightest
integer implied by it (floor on subtracted terms).  Recovery of a missing
parameter from M uses integer comparisons, never floating-point logarithms.

Bound names are stable identifiers used in reports and on the wire
("thm3.2", "thm3.3", "thm3.5", "thm3.8", "thm3.10", "thm3.12", "thm3.13").
Reported lower/upper values are on the same scale as M itself (not divided
by q^m - 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from . import codes as _codes
from . import linalg
from . import systems as _systems
from .codes import Code
from .errors import BudgetError, InternalError, ValidationError
from .fields import q_binomial

VERDICT_LOWER = "attained-lower"
VERDICT_INTERIOR = "interior"
VERDICT_UPPER = "attained-upper"
VERDICT_VIOLATED = "violated"
VERDICT_INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: values on the M scale, verdict vs observed M."""

    bound: str
    applicable: bool
    lower: int | None = None
    upper: int | None = None
    observed: int | None = None
    verdict: str | None = None
    note: str = ""
    extras: dict = dc_field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        def enc(v):
            return None if v is None else str(v)

        out = {
            "bound": self.bound,
            "applicable": self.applicable,
            "lower": enc(self.lower),
            "upper": enc(self.upper),
            "observed": enc(self.observed),
            "verdict": self.verdict,
        }
        if self.note:
            out["note"] = self.note
        if self.extras:
            out["extras"] = {k: enc(v) for k, v in sorted(self.extras.items())}
        return out


def _finish(bound: str, lower: int, upper: int, observed: int | None,
            note: str = "", extras: dict | None = None) -> BoundReport:
    verdict = None
    if observed is not None:
        if observed < lower or observed > upper:
            verdict = VERDICT_VIOLATED
        elif observed == lower:
            verdict = VERDICT_LOWER
        elif observed == upper:
            verdict = VERDICT_UPPER
        else:
            verdict = VERDICT_INTERIOR
    return BoundReport(bound, True, lower, upper, observed, verdict,
                       note, extras or {})


def _inapplicable(bound: str, note: str) -> BoundReport:
    return BoundReport(bound, False, None, None, None,
                       VERDICT_INAPPLICABLE, note)


def _floor_log(q: int, value: int) -> int:
    """Largest t >= 0 with q^t <= value."""
    if value <= 0:
        raise ValidationError("recovery value is not positive")
    t = 0
    while q ** (t + 1) <= value:
        t += 1
    return t


def _m_scale(M: int, q: int, m: int) -> int:
    per, rem = divmod(M, q ** m - 1)
    if rem:
        raise ValidationError("M is not divisible by q^m - 1")
    return per


# ---------------------------------------------------------------------------
# hyperplanes against a canonical subgeometry


@dataclass(frozen=True)
class SubgeometryCensus:
    """Hyperplane counts against a canonical subgeometry of PG(k-1, q^m):
    external (gamma), tangent (delta), secant (beta), meeting (alpha)."""

    q: int
    m: int
    k: int
    alpha: int
    beta: int
    gamma: int
    delta: int

    @property
    def total(self) -> int:
        return (self.q ** (self.m * self.k) - 1) // (self.q ** self.m - 1)


def subgeometry_census(q: int, m: int, k: int) -> SubgeometryCensus:
    """Closed-form census; the secant count uses the tangent product starting
    at i = 1 (the variant starting at i = 0 double-counts the scalar factor
    q^m - 1 and fails the total identity, so it is rejected here)."""
    if k > m:
        raise ValidationError("census formulas need k <= m")
    if k < 1:
        raise ValidationError("k must be positive")
    total = (q ** (m * k) - 1) // (q ** m - 1)
    gamma = 1
    for i in range(1, k):
        gamma *= q ** m - q ** i
    delta = (q ** k - 1) // (q - 1)
    for i in range(1, k - 1):
        delta *= q ** m - q ** i
    beta = total - gamma - delta
    alpha = total - gamma
    census = SubgeometryCensus(q, m, k, alpha, beta, gamma, delta)
    if census.gamma + census.delta + census.beta != total or census.alpha != census.delta + census.beta:
        raise InternalError("subgeometry census identities failed")
    return census


# ---------------------------------------------------------------------------
# dimension-two bounds


def bounds_dim2(q: int, m: int, n: int, has_weight_n_minus_1: bool = False,
                observed: int | None = None) -> BoundReport:
    """Two-dimensional codes with n <= m: maximum-weight count between the
    scattered extreme and the minimal-line extreme; the upper bound tightens
    when a codeword of weight n-1 exists."""
    if not 2 <= n <= m:
        raise ValidationError("this bound needs 2 <= n <= m")
    top = q ** (2 * m) - 1
    per = q ** m - 1
    lower = top - per * (q ** n - 1) // (q - 1)
    if has_weight_n_minus_1:
        upper = top - per * (q ** (n - 1) + 1)
        note = "upper tightened by a weight-(n-1) codeword"
    else:
        upper = top - per * (q + 1)
        note = ""
    return _finish("thm3.2", lower, upper, observed, note)


def bounds_dim2_e(q: int, m: int, n: int, e: int,
                  observed: int | None = None) -> BoundReport:
    """Refinement of the two-dimensional bounds by the second maximum weight
    n - e; when m = n the offset must divide m, otherwise inapplicable."""
    if not 2 <= n <= m:
        raise ValidationError("this bound needs 2 <= n <= m")
    if not 1 <= e < n:
        raise ValidationError("offset e out of range")
    if m == n and m % e:
        return _inapplicable("thm3.3", f"e={e} does not divide m={m}")
    top = q ** (2 * m) - 1
    per = q ** m - 1
    lower = top - per * (q ** n - 1) // (q ** e - 1)
    upper = top - per * (q ** (n - e) + 1)
    return _finish("thm3.3", lower, upper, observed, extras={"e": e})


def recover_n(M: int, q: int, m: int, e: int) -> int:
    """Invert the dimension-two bound: n from M and the weight offset e."""
    v = q ** m + 1 - _m_scale(M, q, m)
    return _floor_log(q, v) + e


def bounds_dim2_dual(q: int, m: int, n: int, e: int | None = None,
                     observed: int | None = None) -> BoundReport:
    """Two-dimensional codes with m < n < 2m, assuming every hyperplane
    misses full intersection (d >= n - m + 1): bounds through the dual
    linear set of rank 2m - n."""
    if not m < n < 2 * m:
        raise ValidationError("this bound needs m < n < 2m")
    dual_rank = 2 * m - n
    if dual_rank < 2:
        return _inapplicable(
            "thm3.5", "dual rank 2m-n < 2: the dual linear set cannot span")
    top = q ** (2 * m) - 1
    per = q ** m - 1
    if e is None:
        lower = top - per * (q ** dual_rank - 1) // (q - 1)
        upper = top - per * (q + 1)
        return _finish("thm3.5", lower, upper, observed,
                       note="assumes d >= n-m+1")
    if not 1 <= e < dual_rank:
        raise ValidationError("offset e out of range for the dual rank")
    lower = top - per * (q ** dual_rank - 1) // (q ** e - 1)
    upper = top - per * (q ** (dual_rank - e) + 1)
    return _finish("thm3.5", lower, upper, observed,
                   note="assumes d >= n-m+1", extras={"e": e})


def recover_n_dual(M: int, q: int, m: int, e: int) -> int:
    v = q ** m + 1 - _m_scale(M, q, m)
    return 2 * m - _floor_log(q, v) - e


# ---------------------------------------------------------------------------
# dimension >= 3, n <= m


def bounds_k_nlem(q: int, m: int, n: int, k: int,
                  observed: int | None = None) -> BoundReport:
    """k > 2 and k <= n <= m: external-hyperplane count squeezed between the
    secant census of a contained subgeometry and the full-rank matrix count."""
    if not (2 < k <= n <= m):
        raise ValidationError("this bound needs 2 < k <= n <= m")
    per = q ** m - 1
    total = (q ** (m * k) - 1) // per
    beta = subgeometry_census(q, m, k).beta
    lower_per = total - ((q ** n - 1) // (q - 1)) * ((q ** ((k - 1) * m) - 1) // per) + q * beta
    upper_per = 1
    for i in range(1, n):
        upper_per *= q ** m - q ** i
    return _finish("thm3.8", per * lower_per, per * upper_per, observed)


def bounds_k_nlem_e(q: int, m: int, n: int, k: int, e: int,
                    observed: int | None = None) -> BoundReport:
    """k >= 3, n <= m, second maximum weight n - e.  The printed lower bound
    is reported; the tactical-decomposition argument actually supports a
    lower bound larger by q^(m(k-2)) per scale unit, reported as the
    "proof_tight_lower" extra."""
    if k < 3 or n > m:
        raise ValidationError("this bound needs k >= 3 and n <= m")
    if not 1 <= e < n:
        raise ValidationError("offset e out of range")
    per = q ** m - 1
    upper_per = q ** (m * (k - 1)) - q ** (m * (k - 2) + n - e)
    slack = (q ** (m * (k - 2)) * (q ** (n - e) - 1)) // (q ** e - 1)
    lower_per = upper_per - slack
    tight = per * (lower_per + q ** (m * (k - 2)))
    return _finish("thm3.10", per * lower_per, per * upper_per, observed,
                   extras={"proof_tight_lower": tight, "e": e})


def recover_k_nlem(q: int, m: int, k: int, e: int, M: int) -> int:
    """Recover m(k-2) + n from M and e."""
    v = q ** (m * (k - 1)) - _m_scale(M, q, m)
    return _floor_log(q, v) + e


# ---------------------------------------------------------------------------
# dimension >= 3, m <= n


def bounds_k_mlen(q: int, m: int, n: int, k: int, e: int | None = None,
                  observed: int | None = None) -> BoundReport:
    """k >= 3 and m <= n, assuming d_{k-1} >= n - m + 1: bounds through the
    dual linear set of rank km - n; inapplicable when the dual cannot span."""
    if k < 3 or m > n:
        raise ValidationError("this bound needs k >= 3 and m <= n")
    dual_rank = m * k - n
    if dual_rank < k:
        return _inapplicable(
            "thm3.12", f"dual rank km-n = {dual_rank} < k: dual cannot span")
    per = q ** m - 1
    total = (q ** (m * k) - 1) // per
    if e is None:
        lower_per = total - (q ** dual_rank - 1) // (q - 1)
        upper_per = total - (q ** k - 1) // (q - 1)
        return _finish("thm3.12", per * lower_per, per * upper_per, observed,
                       note="assumes d_(k-1) >= n-m+1")
    if not 1 <= e < dual_rank:
        raise ValidationError("offset e out of range for the dual rank")
    lower_per = total - (q ** dual_rank - 1) // (q ** e - 1)
    upper_per = total - (q ** (dual_rank - e) + (q ** (k - 1) - 1) // (q - 1))
    return _finish("thm3.12", per * lower_per, per * upper_per, observed,
                   note="assumes d_(k-1) >= n-m+1", extras={"e": e})


def recover_k_mlen(q: int, m: int, k: int, e: int, M: int) -> int:
    """Recover km - n from M and e."""
    total = (q ** (m * k) - 1) // (q ** m - 1)
    v = total - _m_scale(M, q, m)
    return _floor_log(q, v) + e


def bound_subgeom_upper(q: int, m: int, n: int, k: int, r: int) -> int:
    """Upper bound on M/(q^m - 1) when the dual linear set meets some
    codimension-r subspace in a canonical subgeometry of it."""
    if not 1 <= r < k:
        raise ValidationError("need 1 <= r < k")
    if m > n:
        raise ValidationError("this bound needs m <= n")
    dual_rank = m * k - n
    low_exp = dual_rank - k + r
    if low_exp < 1:
        raise ValidationError("parameters leave no room for the subgeometry tail")
    per_total = (q ** (m * k) - 1) // (q ** m - 1)
    tail = sum(q ** j for j in range(low_exp, dual_rank)) + (q ** r - 1) // (q - 1)
    return per_total - tail


def check_subgeom_hypothesis(code_dual: Code, r: int, budget: int | None = None) -> bool:
    """Search for r independent codewords of the geometric dual whose common
    support pullback spans a codim-r subspace as a canonical subgeometry:
    equivalently, some codim-r subspace S with dim_Fq(U' . S) equal to
    dim_{F_{q^m}}(<U' . S>) equal to k - r."""
    tower = code_dual.tower
    k = code_dual.k
    if not 1 <= r < k:
        raise ValidationError("need 1 <= r < k")
    n_subspaces = q_binomial(k, r, tower.order)
    cap = 2 ** 16 if budget is None else budget
    if n_subspaces > cap:
        raise BudgetError(f"{n_subspaces} codim-{r} subspaces exceed the budget")
    usys = _systems.system_of(code_dual)
    km = tower.m * k
    uspace = linalg.FqSubspace(tower, km, usys.flat)
    gamma = tower.gamma
    target = k - r
    for basis in _codes.enumerate_fqm_subspaces(tower, k, target):
        w_rows = [linalg.flatten_vector(tower, tuple(tower.mul(g, c) for c in vec))
                  for vec in basis for g in gamma]
        wspace = linalg.FqSubspace.from_vectors(tower, w_rows, km)
        inter = uspace.intersect(wspace)
        if inter.dim != target:
            continue
        vecs = [linalg.unflatten_vector(tower, row, k) for row in inter.rows]
        if _codes.fqm_rank(tower, vecs, k) == target:
            return True
    return False


# ---------------------------------------------------------------------------
# hypothesis predicates for the maximal constructions


def _sqrt_sum_at_least(terms: Sequence[int], q: int, k: int) -> tuple[bool, str]:
    """Exact test of k <= sum over s of (q^s - 2*q^(s/2)) / s, s the distinct
    term values; q^(s/2) for odd s is irrational, so the comparison runs on
    R + S*sqrt(q) >= k with rational R, S."""
    r_part = Fraction(0)
    s_part = Fraction(0)
    for s in terms:
        r_part += Fraction(q ** s, s)
        if s % 2 == 0:
            r_part -= Fraction(2 * q ** (s // 2), s)
        else:
            s_part -= Fraction(2 * q ** ((s - 1) // 2), s)
    lhs = r_part - k
    desc = f"sum = {float(r_part + s_part * _float_sqrt(q)):.3f}"
    if s_part >= 0:
        if lhs >= 0:
            return True, desc
        ok = s_part > 0 and s_part * s_part * q >= lhs * lhs
        return ok, desc
    ok = lhs >= 0 and lhs * lhs >= s_part * s_part * q
    return ok, desc


def _float_sqrt(q: int) -> float:
    return q ** 0.5


def check_max_hypotheses(q: int, m: int, k: int, t: Sequence[int]) -> dict:
    """Evaluate the hypothesis disjuncts under which the block constructions
    attain the subgeometry upper bound: the direct route (offsets m - t_i - 1)
    and the lifted route (offsets t_i - 1).  A zero offset makes the sum
    condition inapplicable; that is recorded, not raised."""
    tseq = tuple(sorted(int(x) for x in t))
    if any(ti < 1 for ti in tseq):
        raise ValidationError("t entries must be positive")
    out = {}
    for name, svals, linear_lhs in (
        ("thm5.5", sorted({m - ti - 1 for ti in tseq}, reverse=True),
         m * k - k - sum(tseq)),
        ("thm5.10", sorted({ti - 1 for ti in tseq}, reverse=True),
         sum(tseq) - k),
    ):
        record: dict = {"s_values": list(svals), "linear_lhs": linear_lhs,
                        "linear_condition": linear_lhs <= q}
        if any(s < 0 for s in svals):
            record["sum_condition"] = None
            record["sum_note"] = "negative offset: outside the hypothesis range"
        elif 0 in svals:
            record["sum_condition"] = None
            record["sum_note"] = "zero offset makes the sum condition undefined"
        else:
            ok, desc = _sqrt_sum_at_least(svals, q, k)
            record["sum_condition"] = ok
            record["sum_note"] = desc
        record["holds"] = bool(record["sum_condition"]) or record["linear_condition"]
        out[name] = record
    return out


# ---------------------------------------------------------------------------
# classification


def applicable_bound_reports(code: Code, budget: int | None = None,
                             with_subgeom: bool = True) -> list[BoundReport]:
    """Evaluate every bound whose parameter shape matches the code."""
    tower = code.tower
    q, m, n, k = tower.q, tower.m, code.n, code.k
    M = _codes.max_weight_count(code, budget)
    e = _codes.second_max_weight_offset(code, budget)
    dist = _codes.weight_distribution(code, budget)
    reports: list[BoundReport] = []
    dual_ok = _systems.geometric_dual_exists(code)
    if k == 2:
        if n <= m:
            has_n1 = n >= 2 and dist[n - 1] > 0
            reports.append(bounds_dim2(q, m, n, has_n1, observed=M))
            if e is not None:
                reports.append(bounds_dim2_e(q, m, n, e, observed=M))
        else:
            if n < 2 * m and dual_ok:
                reports.append(bounds_dim2_dual(q, m, n, observed=M))
                if e is not None and e < 2 * m - n:
                    reports.append(bounds_dim2_dual(q, m, n, e, observed=M))
            else:
                reports.append(_inapplicable(
                    "thm3.5", "geometric dual does not exist"))
    else:
        if k <= n <= m:
            reports.append(bounds_k_nlem(q, m, n, k, observed=M))
            if e is not None:
                reports.append(bounds_k_nlem_e(q, m, n, k, e, observed=M))
        if m <= n:
            if dual_ok:
                reports.append(bounds_k_mlen(q, m, n, k, observed=M))
                if e is not None and e < m * k - n:
                    reports.append(bounds_k_mlen(q, m, n, k, e, observed=M))
                if with_subgeom:
                    reports.append(subgeom_bound_report(code, 1, budget))
            else:
                reports.append(_inapplicable(
                    "thm3.12", "geometric dual does not exist"))
    return reports


def subgeom_bound_report(code: Code, r: int, budget: int | None = None) -> BoundReport:
    """The codim-r subgeometry upper bound, with its hypothesis searched on
    the geometric dual."""
    tower = code.tower
    q, m, n, k = tower.q, tower.m, code.n, code.k
    name = f"thm3.13:r={r}"
    if m > n or not 1 <= r < k:
        return _inapplicable(name, "shape mismatch")
    if m * k - n - k + r < 1:
        return _inapplicable(name, "no room for the subgeometry tail")
    if not _systems.geometric_dual_exists(code):
        return _inapplicable(name, "geometric dual does not exist")
    dual = _systems.geometric_dual(code)
    try:
        hyp = check_subgeom_hypothesis(dual, r, budget)
    except BudgetError:
        return _inapplicable(name, "hypothesis search over budget")
    if not hyp:
        return _inapplicable(name, "no codim-r subgeometry section found")
    M = _codes.max_weight_count(code, budget)
    per = q ** m - 1
    upper = per * bound_subgeom_upper(q, m, n, k, r)
    lower = 0
    report = _finish(name, lower, upper, M, note="upper bound only; lower trivial")
    return report


def classify_extremal(code: Code, budget: int | None = None) -> dict:
    """Compute M, evaluate every applicable bound, and cross-check the
    extremality characterizations on attained bounds.  Disagreement between
    an attained bound and its characterization predicate is an internal
    error: the theorems say it cannot happen."""
    tower = code.tower
    q, m, n, k = tower.q, tower.m, code.n, code.k
    M = _codes.max_weight_count(code, budget)
    e = _codes.second_max_weight_offset(code, budget)
    d = _codes.min_distance(code, budget)
    reports = applicable_bound_reports(code, budget)
    usys = _systems.system_of(code)
    checks: dict[str, bool] = {}
    mrd = _codes.is_mrd(code, budget)

    def report_named(name: str) -> BoundReport | None:
        for r in reports:
            if r.bound == name and r.applicable:
                return r
        return None

    if k == 2 and n <= m:
        base = report_named("thm3.2")
        attained = M == base.lower
        if attained != mrd:
            raise InternalError("2-dim lower attainment disagrees with MRD test")
        checks["min_iff_mrd"] = attained == mrd
        if attained and not _systems.is_scattered(usys):
            raise InternalError("MRD system must be scattered")
    if k == 2 and m < n:
        base = report_named("thm3.5")
        if base is not None:
            dual_code = _systems.geometric_dual(code)
            dual_mrd = _codes.is_mrd(dual_code, budget)
            attained = M == base.lower
            if attained != dual_mrd:
                raise InternalError(
                    "2-dim dual lower attainment disagrees with dual MRD test")
            checks["min_iff_dual_mrd"] = attained == dual_mrd
    if k >= 3 and k <= n <= m:
        base = report_named("thm3.8")
        attained_low = M == base.lower
        attained_up = M == base.upper
        if n < m:
            subgeom = _systems.is_canonical_subgeometry(usys)
            if attained_low and not subgeom:
                raise InternalError("forced lower attainment without a subgeometry")
            if attained_up != (n == k and subgeom):
                raise InternalError("upper attainment must pin the simplex shape")
            checks["upper_iff_whole_space"] = True
            if attained_low:
                checks["lower_implies_subgeometry"] = True
    if k >= 3 and m <= n:
        base = report_named("thm3.12")
        if base is not None:
            dual_sys = _systems.dual_system(usys)
            dual_scattered = _systems.is_scattered(dual_sys)
            attained = M == base.lower
            if attained != dual_scattered:
                raise InternalError(
                    "dual-scattered characterization disagrees with attainment")
            checks["min_iff_dual_scattered"] = attained == dual_scattered
            if attained and 2 * n < m * k:
                raise InternalError("minimum M forces n >= km/2")
            if mrd:
                if attained != (2 * n == m * k):
                    raise InternalError("MRD minimality must pin n = mk/2")
                checks["mrd_min_iff_half_length"] = True
            if 2 * n == m * k:
                if attained != mrd:
                    raise InternalError("at n = mk/2, minimal M must mean MRD")
                checks["half_length_min_iff_mrd"] = True
            if M == base.upper:
                dual_subgeom = _systems.is_canonical_subgeometry(dual_sys)
                if not (m * k - n == k and dual_subgeom):
                    raise InternalError(
                        "upper attainment must pin the dual simplex shape")
                checks["upper_iff_dual_whole_space"] = True

    return {
        "params": {"q": q, "m": m, "n": n, "k": k, "d": d},
        "M": M,
        "e": e,
        "is_mrd": mrd,
        "reports": reports,
        "checks": checks,
    }
