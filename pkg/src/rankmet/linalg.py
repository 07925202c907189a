"""Linear algebra over F_q inside F_{q^m}-spaces.

Matrices over F_q are lists of rows; a row is a tuple of F_q element codes.
For q = 2 the element codes are 0/1, and the performance-sensitive kernels
(rank, echelon form, kernels) run on rows packed into Python ints, one bit
per column, as in the classic GF(2) bitset idiom.  General q uses dense rows
and tower arithmetic.  Both produce the same canonical reduced row echelon
forms, so subspace identity is decidable by comparing rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BudgetError, ValidationError
from .fields import FieldTower, q_binomial

ENUM_CAP = 2 ** 20  # safety valve for any projective/vector enumeration

Row = tuple[int, ...]
Vector = tuple[int, ...]


# ---------------------------------------------------------------------------
# GF(2) bitset kernels


def bits_pack(row: Sequence[int]) -> int:
    acc = 0
    for j, c in enumerate(row):
        if c:
            acc |= 1 << j
    return acc


def bits_unpack(bits: int, ncols: int) -> Row:
    return tuple((bits >> j) & 1 for j in range(ncols))


def bits_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as bit-packed ints."""
    basis: dict[int, int] = {}  # pivot bit -> row with that lowest set bit
    for row in rows:
        while row:
            low = row & -row
            b = basis.get(low)
            if b is None:
                basis[low] = row
                break
            row ^= b
    return len(basis)


def bits_rref(rows: Iterable[int]) -> list[int]:
    """Canonical reduced echelon rows (pivot = lowest set bit), sorted by pivot."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            b = basis.get(low)
            if b is None:
                basis[low] = row
                break
            row ^= b
    out = [basis[piv] for piv in sorted(basis)]
    for i in range(len(out) - 1, -1, -1):
        piv = out[i] & -out[i]
        for j in range(i):
            if out[j] & piv:
                out[j] ^= out[i]
    return out


def bits_kernel(rows: Sequence[int], ncols: int) -> list[int]:
    """Canonical basis of {v : M v = 0} over GF(2), rows bit-packed."""
    rref = bits_rref(rows)
    pivots = [(b & -b).bit_length() - 1 for b in rref]
    pivot_set = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for b, piv in zip(rref, pivots):
            if (b >> free) & 1:
                v |= 1 << piv
        out.append(v)
    return bits_rref(out)


# ---------------------------------------------------------------------------
# dense rows over general F_q


def _fq_rref(tower: FieldTower, rows: Iterable[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    work = [list(r) for r in rows]
    mul, add, neg, inv = tower.mul, tower.add, tower.neg, tower.inv
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        c = inv(work[rank][col])
        if c != 1:
            work[rank] = [mul(c, x) for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = neg(work[i][col])
                work[i] = [add(x, mul(f, y)) for x, y in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def fq_rref(tower: FieldTower, rows: Iterable[Sequence[int]], ncols: int) -> tuple[Row, ...]:
    """Canonical reduced row echelon form; zero rows dropped."""
    if tower.q == 2:
        packed = bits_rref([bits_pack(r) for r in rows])
        return tuple(bits_unpack(b, ncols) for b in packed)
    reduced, _ = _fq_rref(tower, rows, ncols)
    return tuple(tuple(r) for r in reduced)


def fq_rank(tower: FieldTower, rows: Iterable[Sequence[int]], ncols: int) -> int:
    """Exact rank over F_q by elimination."""
    if tower.q == 2:
        return bits_rank(bits_pack(r) for r in rows)
    reduced, _ = _fq_rref(tower, rows, ncols)
    return len(reduced)


def fq_kernel(tower: FieldTower, rows: Sequence[Sequence[int]], ncols: int) -> tuple[Row, ...]:
    """Canonical basis of the right kernel {v : M v = 0}."""
    if tower.q == 2:
        packed = bits_kernel([bits_pack(r) for r in rows], ncols)
        return tuple(bits_unpack(b, ncols) for b in packed)
    rref, pivots = _fq_rref(tower, rows, ncols)
    pivot_set = set(pivots)
    neg = tower.neg
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, piv in zip(rref, pivots):
            if r[free]:
                v[piv] = neg(r[free])
        out.append(v)
    return fq_rref(tower, out, ncols)


def fq_solve_matrix(tower: FieldTower, columns: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of the square matrix whose columns are given, as a row list."""
    n = len(columns)
    aug = [list(col[i] for col in columns) + [1 if j == i else 0 for j in range(n)]
           for i in range(n)]
    reduced, pivots = _fq_rref(tower, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValidationError("matrix is singular")
    return [row[n:] for row in reduced]


def fq_matvec(tower: FieldTower, rows: Sequence[Sequence[int]], vec: Sequence[int]) -> list[int]:
    mul, add = tower.mul, tower.add
    out = []
    for row in rows:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# subspaces of F_q^N


@dataclass(frozen=True)
class FqSubspace:
    """An F_q-subspace of F_q^ncols in canonical reduced echelon form."""

    tower: FieldTower = field(compare=False)
    ncols: int
    rows: tuple[Row, ...]

    @classmethod
    def from_vectors(cls, tower: FieldTower, vectors: Iterable[Sequence[int]], ncols: int) -> "FqSubspace":
        return cls(tower, ncols, fq_rref(tower, vectors, ncols))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec: Sequence[int]) -> bool:
        return fq_rank(self.tower, list(self.rows) + [list(vec)], self.ncols) == self.dim

    def sum(self, other: "FqSubspace") -> "FqSubspace":
        self._check_ambient(other)
        return FqSubspace.from_vectors(self.tower, list(self.rows) + list(other.rows), self.ncols)

    def intersect(self, other: "FqSubspace") -> "FqSubspace":
        """Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
        intersection in their right half."""
        self._check_ambient(other)
        n = self.ncols
        stacked = [tuple(r) + tuple(r) for r in self.rows]
        stacked += [tuple(r) + (0,) * n for r in other.rows]
        reduced = fq_rref(self.tower, stacked, 2 * n)
        inter = [r[n:] for r in reduced if not any(r[:n])]
        return FqSubspace.from_vectors(self.tower, inter, n)

    def dim_intersection(self, other: "FqSubspace") -> int:
        self._check_ambient(other)
        stacked = list(self.rows) + list(other.rows)
        return self.dim + other.dim - fq_rank(self.tower, stacked, self.ncols)

    def _check_ambient(self, other: "FqSubspace") -> None:
        if self.ncols != other.ncols or self.tower is not other.tower:
            raise ValidationError("subspace ambients do not match")


# ---------------------------------------------------------------------------
# expansion matrices and rank supports


def expand(tower: FieldTower, x: Sequence[int], gamma: Sequence[int] | None = None) -> list[Row]:
    """n x m expansion of a vector over F_{q^m}: row i holds the basis
    coordinates of x_i.  gamma defaults to the tower's canonical basis."""
    if gamma is None or tuple(gamma) == tower.gamma:
        return [tower.coords(xi) for xi in x]
    gamma = tuple(gamma)
    if len(gamma) != tower.m or not tower._fq_independent(gamma):
        raise ValidationError("gamma is not an F_q-basis of F_{q^m}")
    cols = [tower.coords(g) for g in gamma]
    inv_rows = fq_solve_matrix(tower, cols)
    return [tuple(fq_matvec(tower, inv_rows, tower.coords(xi))) for xi in x]


def rank_weight(tower: FieldTower, x: Sequence[int]) -> int:
    """dim_{F_q} of the span of the entries of x (rank of the expansion)."""
    if tower.q == 2:
        # codes of F_{2^m} elements are exactly their coordinate bit rows
        return bits_rank(x)
    return fq_rank(tower, [tower.coords(xi) for xi in x], tower.m)


def rank_support(tower: FieldTower, x: Sequence[int]) -> FqSubspace:
    """Column span of the expansion of x: a subspace of F_q^n, dim = weight."""
    mat = expand(tower, x)
    n = len(mat)
    cols = [tuple(mat[i][j] for i in range(n)) for j in range(tower.m)]
    return FqSubspace.from_vectors(tower, cols, n)


# ---------------------------------------------------------------------------
# projective enumeration


def n_projective_points(tower: FieldTower, k: int) -> int:
    return (tower.order ** k - 1) // (tower.order - 1)


def normalize_point(tower: FieldTower, vec: Sequence[int]) -> Vector:
    """Scale so the first nonzero coordinate is 1; unique representative."""
    for c in vec:
        if c:
            if c == 1:
                return tuple(vec)
            inv_c = tower.inv(c)
            return tuple(tower.mul(inv_c, x) for x in vec)
    raise ValidationError("cannot normalize the zero vector")


def enumerate_points(tower: FieldTower, k: int) -> Iterator[Vector]:
    """All points of PG(k-1, q^m) as normalized vectors, deterministic order:
    by position of the leading 1, then odometer order on the tail."""
    if k < 1:
        raise ValidationError("k must be positive")
    total = n_projective_points(tower, k)
    if total > ENUM_CAP:
        raise BudgetError(f"{total} projective points exceed the enumeration cap")
    order = tower.order
    for lead in range(k):
        tail_len = k - lead - 1
        counters = [0] * tail_len
        while True:
            yield (0,) * lead + (1,) + tuple(counters)
            i = tail_len - 1
            while i >= 0:
                counters[i] += 1
                if counters[i] < order:
                    break
                counters[i] = 0
                i -= 1
            if i < 0:
                break


def enumerate_hyperplanes(tower: FieldTower, k: int) -> Iterator[Vector]:
    """Hyperplanes of PG(k-1, q^m), each as the normalized defining functional
    x of the subspace {y : sum x_i y_i = 0}."""
    return enumerate_points(tower, k)


def hyperplane_basis(tower: FieldTower, x: Sequence[int]) -> list[Vector]:
    """An F_{q^m}-basis of the hyperplane x^perp = {y : sum x_i y_i = 0}."""
    k = len(x)
    piv = next((i for i in range(k) if x[i]), None)
    if piv is None:
        raise ValidationError("zero functional does not define a hyperplane")
    inv_piv = tower.inv(x[piv])
    out = []
    for j in range(k):
        if j == piv:
            continue
        v = [0] * k
        v[j] = 1
        v[piv] = tower.neg(tower.mul(x[j], inv_piv))
        out.append(tuple(v))
    return out


def dot(tower: FieldTower, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = tower.add(acc, tower.mul(a, b))
    return acc


# ---------------------------------------------------------------------------
# flattening F_{q^m}^k into F_q^(km)


def flatten_vector(tower: FieldTower, vec: Sequence[int]) -> Row:
    """Concatenate the gamma-coordinates of each component."""
    out: list[int] = []
    for c in vec:
        out.extend(tower.coords(c))
    return tuple(out)


def unflatten_vector(tower: FieldTower, row: Sequence[int], k: int) -> Vector:
    m = tower.m
    return tuple(tower.from_coords(row[j * m:(j + 1) * m]) for j in range(k))


def count_subspaces(tower: FieldTower, ambient_dim: int, dim: int) -> int:
    return q_binomial(ambient_dim, dim, tower.q)
