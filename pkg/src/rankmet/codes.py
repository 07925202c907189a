"""Rank-metric codes as F_{q^m}-row spaces of generator matrices.

A code is immutable once validated; the weight distribution, minimum
distance and maximum-weight count are computed on first demand by exhaustive
codeword enumeration (odometer order over the message space) and cached.
Every brute-force path is guarded by the 2^20 enumeration budget and fails
loudly instead of truncating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import linalg
from .errors import BudgetError, ValidationError
from .fields import FieldTower, q_binomial

Matrix = tuple[tuple[int, ...], ...]


def fqm_rank(tower: FieldTower, rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Rank over the top field F_{q^m} (entries are arbitrary codes)."""
    reduced, _ = linalg._fq_rref(tower, rows, ncols)
    return len(reduced)


@dataclass
class Code:
    """An [n, k]_{q^m/q} rank-metric code with generator matrix G (k x n)."""

    tower: FieldTower
    G: Matrix
    _distribution: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.G[0])

    @property
    def k(self) -> int:
        return len(self.G)

    @property
    def max_weight(self) -> int:
        return min(self.tower.m, self.n)

    @property
    def params(self) -> tuple[int, int, int, int]:
        t = self.tower
        return (t.q, t.m, self.n, self.k)

    def __repr__(self) -> str:
        t = self.tower
        return f"Code[{self.n},{self.k}]_({t.q}^{t.m}/{t.q})"


def make_code(tower: FieldTower, G: Sequence[Sequence[int]]) -> Code:
    """Validate and wrap a generator matrix; G must have F_{q^m}-rank k."""
    rows = tuple(tuple(r) for r in G)
    if not rows or not rows[0]:
        raise ValidationError("generator matrix must be nonempty")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValidationError("ragged generator matrix")
    if any(not 0 <= c < tower.order for r in rows for c in r):
        raise ValidationError("matrix entry outside the field")
    if fqm_rank(tower, rows, n) != len(rows):
        raise ValidationError("generator matrix is rank-deficient over F_{q^m}")
    return Code(tower, rows)


def weight(tower: FieldTower, c: Sequence[int]) -> int:
    """Rank weight of a vector: dim_{F_q} of the span of its entries."""
    return linalg.rank_weight(tower, c)


def iter_codewords(code: Code) -> Iterator[tuple[int, ...]]:
    """All q^(mk) codewords xG, x in odometer order over F_{q^m}^k."""
    tower, G = code.tower, code.G
    mul, add = tower.mul, tower.add
    n, k = code.n, code.k
    for x in itertools.product(range(tower.order), repeat=k):
        c = [0] * n
        for xi, row in zip(x, G):
            if xi:
                for j, gij in enumerate(row):
                    if gij:
                        c[j] = add(c[j], mul(xi, gij))
        yield tuple(c)


def _check_budget(code: Code, budget: int | None = None) -> None:
    cap = linalg.ENUM_CAP if budget is None else budget
    size = code.tower.order ** code.k
    if size > cap:
        raise BudgetError(
            f"enumerating {size} codewords exceeds the budget {cap}")


def weight_distribution(code: Code, budget: int | None = None) -> tuple[int, ...]:
    """Exact counts (A_0, ..., A_min(m,n)) by scoring every codeword."""
    if code._distribution is None:
        _check_budget(code, budget)
        tower = code.tower
        counts = [0] * (code.max_weight + 1)
        if tower.q == 2:
            rank = linalg.bits_rank
            for c in iter_codewords(code):
                counts[rank(c)] += 1
        else:
            for c in iter_codewords(code):
                counts[weight(tower, c)] += 1
        dist = tuple(counts)
        if sum(dist) != tower.order ** code.k or dist[0] != 1:
            raise ValidationError("weight distribution failed its tally check")
        code._distribution = dist
    return code._distribution


def max_weight_count(code: Code, budget: int | None = None) -> int:
    """M(C): the number of codewords of the maximum possible weight min(m, n)."""
    return weight_distribution(code, budget)[code.max_weight]


def min_distance(code: Code, budget: int | None = None) -> int:
    dist = weight_distribution(code, budget)
    for i in range(1, len(dist)):
        if dist[i]:
            return i
    raise ValidationError("code has no nonzero codeword")


def second_max_weight_offset(code: Code, budget: int | None = None) -> int | None:
    """e such that min(m,n) - e is the second maximum weight; None if all
    nonzero codewords already have maximum weight."""
    dist = weight_distribution(code, budget)
    top = code.max_weight
    for i in range(top - 1, 0, -1):
        if dist[i]:
            return top - i
    return None


def is_mrd(code: Code, budget: int | None = None) -> bool:
    """Equality in the rank-metric Singleton bound."""
    m, n, k = code.tower.m, code.n, code.k
    d = min_distance(code, budget)
    return m * k == max(m, n) * (min(m, n) - d + 1)


def is_nondegenerate(code: Code) -> bool:
    """True iff the n columns of G, expanded over F_q, are independent."""
    tower = code.tower
    cols = [linalg.flatten_vector(tower, tuple(row[j] for row in code.G))
            for j in range(code.n)]
    return linalg.fq_rank(tower, cols, tower.m * code.k) == code.n


def mrd_weight_distribution(q: int, m: int, n: int, k: int, d: int | None = None) -> tuple[int, ...]:
    """Closed-form weight distribution shared by every MRD code with the
    given parameters; exact integers, A_0 = 1."""
    mp, np_ = min(m, n), max(m, n)
    if m * k % np_ != 0:
        raise ValidationError(f"no MRD code with q={q}, m={m}, n={n}, k={k}")
    d_expected = mp - (m * k) // np_ + 1
    if d_expected < 1:
        raise ValidationError("parameters leave no room for a positive distance")
    if d is None:
        d = d_expected
    elif d != d_expected:
        raise ValidationError(
            f"d={d} violates the Singleton equality (expected {d_expected})")
    counts = [0] * (mp + 1)
    counts[0] = 1
    for ell in range(mp - d + 1):
        total = 0
        for t in range(ell + 1):
            term = q_binomial(ell + d, ell - t, q) * q ** ((ell - t) * (ell - t - 1) // 2)
            term *= q ** (np_ * (t + 1)) - 1
            total += term if (ell - t) % 2 == 0 else -term
        counts[d + ell] = q_binomial(mp, d + ell, q) * total
    if sum(counts) != q ** (m * k):
        raise ValidationError("MRD distribution failed its tally check")
    return tuple(counts)


# ---------------------------------------------------------------------------
# generalized rank weights


def enumerate_fqm_subspaces(tower: FieldTower, k: int, dim: int) -> Iterator[Matrix]:
    """All dim-dimensional F_{q^m}-subspaces of F_{q^m}^k as reduced-echelon
    basis matrices, deterministic order."""
    if dim == 0:
        yield ()
        return
    order = tower.order
    for pivots in itertools.combinations(range(k), dim):
        pivot_set = set(pivots)
        cells = [(i, c) for i, p in enumerate(pivots)
                 for c in range(p + 1, k) if c not in pivot_set]
        for vals in itertools.product(range(order), repeat=len(cells)):
            rows = [[0] * k for _ in range(dim)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), v in zip(cells, vals):
                rows[i][c] = v
            yield tuple(tuple(r) for r in rows)


def generalized_weight(code: Code, r: int, budget: int | None = None) -> int:
    """The r-th generalized rank weight: n minus the largest F_q-dimension of
    the intersection of the associated system with a codim-r subspace."""
    tower, k, n = code.tower, code.k, code.n
    if not 1 <= r <= k:
        raise ValidationError(f"r={r} outside 1..k")
    if not is_nondegenerate(code):
        raise ValidationError("generalized weights need a non-degenerate code")
    n_subspaces = q_binomial(k, r, tower.order)
    cap = 2 ** 16 if budget is None else budget
    if n_subspaces > cap:
        raise BudgetError(
            f"enumerating {n_subspaces} codim-{r} subspaces exceeds the budget")
    km = tower.m * k
    u_rows = [linalg.flatten_vector(tower, tuple(row[j] for row in code.G))
              for j in range(n)]
    gamma = tower.gamma
    best = 0
    for basis in enumerate_fqm_subspaces(tower, k, k - r):
        w_rows = [linalg.flatten_vector(tower, tuple(tower.mul(g, c) for c in vec))
                  for vec in basis for g in gamma]
        stacked = u_rows + w_rows
        inter = n + len(w_rows) - linalg.fq_rank(tower, stacked, km)
        if inter > best:
            best = inter
    return n - best


def simplex_code(tower: FieldTower, k: int) -> Code:
    """A non-degenerate [mk, k] code whose columns form an F_q-basis of
    F_{q^m}^k; every nonzero codeword has weight exactly m."""
    m = tower.m
    if tower.order ** k > linalg.ENUM_CAP:
        raise BudgetError("simplex code parameters exceed the size cap")
    gamma = tower.gamma
    G = [[0] * (m * k) for _ in range(k)]
    for i in range(k):
        for j in range(m):
            G[i][i * m + j] = gamma[j]
    return make_code(tower, G)
