"""Systems (F_q-subspaces of F_{q^m}^k) and their linear sets.

The geometric counterpart of a non-degenerate code: the F_q-span of the
columns of a generator matrix.  A system is stored as a canonical F_q-basis
(reduced echelon form of the flattened basis matrix), so equality of systems
is equality of stored bases.  Point and hyperplane weights, spectra and
censuses are exhaustive scans; they assert the standard linear-set relations
before returning.

Duality is taken with respect to the fixed form Tr_{q^m/q}(sum u_i v_i).
Duals of non-spanning subspaces are representable (flagged via .spanning);
only the passage back to a code insists on spanning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import linalg
from .codes import Code, fqm_rank, make_code
from .errors import BudgetError, InternalError, ValidationError
from .fields import FieldTower

Vector = tuple[int, ...]


@dataclass(frozen=True)
class System:
    """An F_q-subspace U of F_{q^m}^k given by a canonical F_q-basis."""

    tower: FieldTower = field(compare=False)
    k: int
    basis: tuple[Vector, ...]          # n vectors in F_{q^m}^k
    flat: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    spanning: bool = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.basis)

    def as_dict(self) -> dict:
        return {
            "field": self.tower.spec,
            "k": self.k,
            "basis": [",".join(self.tower.format_element(c) for c in vec)
                      for vec in self.basis],
        }

    def __repr__(self) -> str:
        t = self.tower
        return f"System[n={self.n},k={self.k}]_({t.q}^{t.m}/{t.q})"


def make_system(tower: FieldTower, k: int, vectors: Sequence[Sequence[int]]) -> System:
    """Canonicalize the F_q-span of the given vectors of F_{q^m}^k."""
    if k < 1:
        raise ValidationError("ambient dimension k must be positive")
    vecs = [tuple(v) for v in vectors]
    if any(len(v) != k for v in vecs):
        raise ValidationError("vector length does not match k")
    km = tower.m * k
    flat = linalg.fq_rref(tower, [linalg.flatten_vector(tower, v) for v in vecs], km)
    basis = tuple(linalg.unflatten_vector(tower, row, k) for row in flat)
    spanning = fqm_rank(tower, basis, k) == k if basis else k == 0
    return System(tower, k, basis, flat, spanning)


def system_of(code: Code) -> System:
    """The system associated with a code: F_q-span of the generator columns."""
    tower = code.tower
    cols = [tuple(row[j] for row in code.G) for j in range(code.n)]
    sys = make_system(tower, code.k, cols)
    if sys.n != code.n:
        raise ValidationError("code is degenerate: dependent generator columns")
    if not sys.spanning:
        raise InternalError("system of a valid code must span")
    return sys


def code_of(system: System) -> Code:
    """A code associated with a system: columns are the stored basis."""
    if not system.spanning:
        raise ValidationError("system does not span F_{q^m}^k; no code exists")
    G = [[system.basis[j][i] for j in range(system.n)] for i in range(system.k)]
    return make_code(system.tower, G)


# ---------------------------------------------------------------------------
# weights of points and hyperplanes


def point_weight(system: System, point: Sequence[int]) -> int:
    """dim_{F_q}(U intersect <point>_{F_{q^m}})."""
    tower = system.tower
    if not any(point):
        raise ValidationError("not a projective point")
    km = tower.m * system.k
    rows = list(system.flat)
    for g in tower.gamma:
        rows.append(linalg.flatten_vector(tower, tuple(tower.mul(g, c) for c in point)))
    return system.n + tower.m - linalg.fq_rank(tower, rows, km)


def hyperplane_weight(system: System, functional: Sequence[int]) -> int:
    """dim_{F_q}(U intersect x^perp) for the hyperplane defined by x."""
    tower = system.tower
    km = tower.m * system.k
    rows = list(system.flat)
    hyp = linalg.hyperplane_basis(tower, functional)
    for vec in hyp:
        for g in tower.gamma:
            rows.append(linalg.flatten_vector(tower, tuple(tower.mul(g, c) for c in vec)))
    return system.n + tower.m * (system.k - 1) - linalg.fq_rank(tower, rows, km)


def subspace_weight(system: System, basis: Sequence[Sequence[int]]) -> int:
    """dim_{F_q}(U intersect W) for an F_{q^m}-subspace W given by a basis."""
    tower = system.tower
    km = tower.m * system.k
    rows = list(system.flat)
    for vec in basis:
        for g in tower.gamma:
            rows.append(linalg.flatten_vector(tower, tuple(tower.mul(g, c) for c in vec)))
    wdim = tower.m * len(basis)
    return system.n + wdim - linalg.fq_rank(tower, rows, km)


# ---------------------------------------------------------------------------
# the linear set of a system


def linear_set(system: System) -> dict[Vector, int]:
    """Map from the points of L_U (normalized vectors) to their weights,
    computed by one pass over the q^n vectors of U."""
    tower = system.tower
    n, k, q = system.n, system.k, tower.q
    if q ** n > linalg.ENUM_CAP:
        raise BudgetError(f"enumerating {q ** n} vectors of U exceeds the cap")
    add, mul = tower.add, tower.mul
    counts: dict[Vector, int] = {}
    basis = system.basis
    for coeffs in itertools.product(tower.subfield_elements, repeat=n):
        v = [0] * k
        nonzero = False
        for c, b in zip(coeffs, basis):
            if c:
                nonzero = True
                for j in range(k):
                    if b[j]:
                        v[j] = add(v[j], mul(c, b[j]))
        if not nonzero:
            continue
        pt = linalg.normalize_point(tower, v)
        counts[pt] = counts.get(pt, 0) + 1
    out: dict[Vector, int] = {}
    for pt, cnt in counts.items():
        w = 0
        while q ** w - 1 < cnt:
            w += 1
        if q ** w - 1 != cnt:
            raise InternalError("point multiplicity is not of the form q^w - 1")
        out[pt] = w
    return out


@dataclass(frozen=True)
class PointSpectrum:
    """Counts N_i of points of weight i in L_U, i = 1..n."""

    rank: int
    counts: tuple[int, ...]  # index i = N_i; counts[0] is always 0

    @property
    def size(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict:
        return {"N": list(self.counts[1:]), "size": self.size}


def point_spectrum(system: System) -> PointSpectrum:
    """Spectrum of L_U; all four point-count relations are asserted."""
    tower = system.tower
    n, q = system.n, tower.q
    weights = linear_set(system)
    counts = [0] * (n + 1)
    for w in weights.values():
        counts[w] += 1
    spec = PointSpectrum(n, tuple(counts))
    size = spec.size
    if size != len(weights):
        raise InternalError("spectrum size mismatch")
    if size > (q ** n - 1) // (q - 1):
        raise InternalError("linear set exceeds its maximum size")
    vec_count = sum(c * (q ** i - 1) // (q - 1) for i, c in enumerate(counts))
    if vec_count != (q ** n - 1) // (q - 1):
        raise InternalError("weighted point count does not cover U")
    if size and size % q != 1:
        raise InternalError("linear set size is not 1 mod q")
    if system.spanning and size < (q ** system.k - 1) // (q - 1):
        raise InternalError("spanning linear set below the subgeometry size")
    return spec


def is_scattered(system: System) -> bool:
    """All points of L_U have weight one (maximum point count)."""
    spec = point_spectrum(system)
    q, n = system.tower.q, system.n
    scattered = spec.size == (q ** n - 1) // (q - 1)
    if scattered and 2 * n > system.tower.m * system.k:
        raise InternalError("scattered system violates the rank bound mk/2")
    return scattered


def is_canonical_subgeometry(system: System) -> bool:
    """Scattered, rank k, spanning: a copy of PG(k-1, q)."""
    return system.spanning and system.n == system.k and is_scattered(system)


# ---------------------------------------------------------------------------
# hyperplane census


@dataclass(frozen=True)
class HyperplaneCensus:
    """Hyperplanes meeting L_U in 0, 1, and >= 2 points."""

    t0: int
    t1: int
    ts: int

    @property
    def total(self) -> int:
        return self.t0 + self.t1 + self.ts

    def as_dict(self) -> dict:
        return {"t0": self.t0, "t1": self.t1, "ts": self.ts}


def hyperplane_census(system: System) -> HyperplaneCensus:
    """Exact incidence counts over all hyperplanes of PG(k-1, q^m)."""
    tower, k = system.tower, system.k
    points = list(linear_set(system))
    t0 = t1 = ts = 0
    for x in linalg.enumerate_hyperplanes(tower, k):
        cnt = 0
        for pt in points:
            if linalg.dot(tower, x, pt) == 0:
                cnt += 1
                if cnt >= 2:
                    break
        if cnt == 0:
            t0 += 1
        elif cnt == 1:
            t1 += 1
        else:
            ts += 1
    census = HyperplaneCensus(t0, t1, ts)
    if census.total != linalg.n_projective_points(tower, k):
        raise InternalError("hyperplane census does not cover the dual space")
    return census


# ---------------------------------------------------------------------------
# duality


def dual_system(system: System) -> System:
    """U^perp' under (u, v) -> Tr_{q^m/q}(sum u_i v_i); rank km - n.

    The result need not span; it is flagged, and only code_of rejects it.
    """
    tower, k = system.tower, system.k
    m, km = tower.m, tower.m * system.k
    gamma = tower.gamma
    rows = []
    for u in system.basis:
        row = []
        for j in range(k):
            uj = u[j]
            for t in range(m):
                row.append(tower.trace(tower.mul(uj, gamma[t])) if uj else 0)
        rows.append(row)
    kernel = linalg.fq_kernel(tower, rows, km)
    vecs = [linalg.unflatten_vector(tower, row, k) for row in kernel]
    dual = make_system(tower, k, vecs)
    if dual.n != km - system.n:
        raise InternalError("dual system has the wrong rank")
    return dual


def polar_point_of_hyperplane(functional: Sequence[int]) -> Vector:
    """Under the standard symmetric form the polarity swaps the defining
    vector roles: the polar of the hyperplane x^perp is the point <x>."""
    return tuple(functional)


def geometric_dual(code: Code) -> Code:
    """A code associated with U^perp'; defined when the dual still spans,
    i.e. when d_{k-1}(C) >= n - m + 1."""
    sys = system_of(code)
    dual = dual_system(sys)
    if not dual.spanning:
        raise ValidationError(
            "geometric dual undefined: U contains an F_{q^m}-line, "
            "equivalently d_{k-1}(C) < n - m + 1")
    return code_of(dual)


def geometric_dual_exists(code: Code) -> bool:
    try:
        sys = system_of(code)
    except ValidationError:
        return False
    return dual_system(sys).spanning


# ---------------------------------------------------------------------------
# tangent hyperplanes


def find_tangent_hyperplane(system: System, point: Sequence[int]) -> Vector:
    """A hyperplane through the given point meeting L_U in exactly one point.

    Existence is guaranteed when 3 <= k <= n <= m and the point lies on L_U,
    and when L_U is a canonical subgeometry, 3 <= k <= m and the point lies
    off it.  Outside those hypotheses the search still runs but may exhaust.
    """
    tower, k = system.tower, system.k
    if k < 3:
        raise ValidationError("tangent-hyperplane search requires k >= 3")
    pt = linalg.normalize_point(tower, point)
    points = list(linear_set(system))
    on_set = pt in set(points)
    if on_set:
        guaranteed = 3 <= k <= system.n <= tower.m
    else:
        guaranteed = 3 <= k <= tower.m and is_canonical_subgeometry(system)
    for x in linalg.enumerate_hyperplanes(tower, k):
        if linalg.dot(tower, x, pt) != 0:
            continue
        cnt = 0
        for q_pt in points:
            if linalg.dot(tower, x, q_pt) == 0:
                cnt += 1
                if cnt >= 2:
                    break
        if cnt == 1:
            return x
    if guaranteed:
        raise InternalError("tangent hyperplane must exist under the hypotheses")
    raise ValidationError("no tangent hyperplane through the point")


# ---------------------------------------------------------------------------
# helpers used by verification suites


def random_system(tower: FieldTower, k: int, n: int, rng) -> System:
    """A uniformly-ish random rank-n system: random vectors until rank n."""
    km = tower.m * k
    if n > km:
        raise ValidationError("rank cannot exceed km")
    while True:
        vecs = [tuple(rng.randrange(tower.order) for _ in range(k))
                for _ in range(n)]
        sys = make_system(tower, k, vecs)
        if sys.n == n:
            return sys


def random_spanning_system(tower: FieldTower, k: int, n: int, rng) -> System:
    while True:
        sys = random_system(tower, k, n, rng)
        if sys.spanning:
            return sys


def max_weight_count_via_geometry(system: System) -> int:
    """M of any associated code, read off the geometry: external hyperplanes
    to L_U when n <= m, external points to the dual linear set when n >= m."""
    tower = system.tower
    if not system.spanning:
        raise ValidationError("geometric count needs a spanning system")
    if system.n <= tower.m:
        return (tower.order - 1) * hyperplane_census(system).t0
    dual = dual_system(system)
    outside = linalg.n_projective_points(tower, system.k) - len(linear_set(dual))
    return (tower.order - 1) * outside


def enumerate_systems(tower: FieldTower, k: int, n: int) -> Iterator[System]:
    """All rank-n F_q-subspaces of F_{q^m}^k (spanning or not), in the
    deterministic order of echelon bases over F_q."""
    km = tower.m * k
    total = linalg.count_subspaces(tower, km, n)
    if total > linalg.ENUM_CAP:
        raise BudgetError(f"{total} subspaces exceed the enumeration cap")
    sub = tower.subfield_elements
    for pivots in itertools.combinations(range(km), n):
        pivot_set = set(pivots)
        cells = [(i, c) for i, p in enumerate(pivots)
                 for c in range(p + 1, km) if c not in pivot_set]
        for vals in itertools.product(sub, repeat=len(cells)):
            rows = [[0] * km for _ in range(n)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), v in zip(cells, vals):
                rows[i][c] = v
            vecs = [linalg.unflatten_vector(tower, r, k) for r in rows]
            yield make_system(tower, k, vecs)
