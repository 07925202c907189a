"""F_q linear algebra: ranks, canonical forms, kernels, projective streams."""

import random

import pytest

from rankmet import linalg as la
from rankmet.errors import ValidationError
from rankmet.fields import make_field, q_binomial


def _span_set(tower, rows, ncols):
    """Explicit span as a set of tuples, using only tower scalar ops."""
    span = {(0,) * ncols}
    for r in rows:
        new = set()
        for c in tower.subfield_elements:
            scaled = tuple(tower.mul(c, x) for x in r)
            for v in span:
                new.add(tuple(tower.add(a, b) for a, b in zip(v, scaled)))
        span = new
    return span


def _rank_oracle(tower, rows, ncols):
    size = len(_span_set(tower, rows, ncols))
    r = 0
    while tower.q ** r < size:
        r += 1
    assert tower.q ** r == size
    return r


@pytest.mark.parametrize("params", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_rank_rref_kernel_against_span_oracle(params):
    tower = make_field(*params)
    rng = random.Random(99)
    sub = tower.subfield_elements
    for _ in range(25):
        nrows, ncols = rng.randint(1, 4), rng.randint(1, 5)
        rows = [tuple(rng.choice(sub) for _ in range(ncols)) for _ in range(nrows)]
        rank = la.fq_rank(tower, rows, ncols)
        assert rank == _rank_oracle(tower, rows, ncols)
        rref = la.fq_rref(tower, rows, ncols)
        assert len(rref) == rank
        assert la.fq_rref(tower, rref, ncols) == rref
        assert _span_set(tower, rref, ncols) == _span_set(tower, rows, ncols)
        kernel = la.fq_kernel(tower, rows, ncols)
        assert len(kernel) == ncols - rank
        for v in kernel:
            for row in rows:
                assert la.dot(tower, row, v) == 0


def test_rref_canonical_under_generator_shuffle(f8):
    rng = random.Random(5)
    rows = [(1, 0, 3), (0, 1, 5), (1, 1, 6)]
    base = la.fq_rref(f8, rows, 3)
    for _ in range(10):
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert la.fq_rref(f8, shuffled, 3) == base


def test_expand_examples(f4):
    w = 2
    assert la.expand(f4, (0, 0)) == [(0, 0), (0, 0)]
    assert la.rank_weight(f4, (0, 0)) == 0
    assert la.expand(f4, (1, w), gamma=(1, w)) == [(1, 0), (0, 1)]
    assert la.rank_weight(f4, (1, w)) == 2
    assert la.rank_weight(f4, (w, w)) == 1
    with pytest.raises(ValidationError):
        la.expand(f4, (1, w), gamma=(1, 1))


def test_rank_support_examples(f4):
    w = 2
    assert la.rank_support(f4, (0, 0)).dim == 0
    sup = la.rank_support(f4, (1, 1))
    assert sup.rows == ((1, 1),)
    # support is independent of the expansion basis
    for gamma in ((1, w), (w, 1), (1, 3)):
        mat = la.expand(f4, (1, w), gamma=gamma)
        cols = [tuple(mat[i][j] for i in range(2)) for j in range(2)]
        assert la.FqSubspace.from_vectors(f4, cols, 2).dim == 2


def test_rank_weight_invariant_under_basis(f8):
    rng = random.Random(3)
    elems = list(f8.elements())
    for _ in range(15):
        x = tuple(rng.choice(elems) for _ in range(4))
        w = la.rank_weight(f8, x)
        while True:
            gamma = tuple(rng.choice(elems) for _ in range(3))
            try:
                mat = la.expand(f8, x, gamma=gamma)
                break
            except ValidationError:
                continue
        assert la.fq_rank(f8, mat, 3) == w


def test_projective_enumeration_counts(f4, f8):
    assert len(list(la.enumerate_points(f4, 1))) == 1
    assert len(list(la.enumerate_points(f4, 2))) == 5
    hyps = list(la.enumerate_hyperplanes(f8, 3))
    assert len(hyps) == 73
    assert len(set(hyps)) == 73
    for tower, k in ((f4, 2), (f4, 3), (f8, 2)):
        pts = list(la.enumerate_points(tower, k))
        expected = q_binomial(k, 1, tower.order)
        assert len(pts) == len(set(pts)) == expected
        assert all(p[next(i for i, c in enumerate(p) if c)] == 1 for p in pts)


def test_subspace_operations(f4):
    a = la.FqSubspace.from_vectors(f4, [(1, 0), (0, 1)], 2)
    b = la.FqSubspace.from_vectors(f4, [(1, 1)], 2)
    assert a.intersect(a) == a
    assert a.intersect(b) == b
    assert b.dim == 1
    assert a.sum(b) == a
    assert a.dim_intersection(b) == 1
    assert b.contains((1, 1)) and not b.contains((1, 0))


def test_intersection_dimension_formula(f8):
    rng = random.Random(17)
    for _ in range(20):
        rows_a = [tuple(rng.randint(0, 1) for _ in range(5)) for _ in range(3)]
        rows_b = [tuple(rng.randint(0, 1) for _ in range(5)) for _ in range(3)]
        a = la.FqSubspace.from_vectors(f8, rows_a, 5)
        b = la.FqSubspace.from_vectors(f8, rows_b, 5)
        inter = a.intersect(b)
        assert inter.dim == a.dim_intersection(b)
        assert inter.dim == a.dim + b.dim - a.sum(b).dim
        for row in inter.rows:
            assert a.contains(row) and b.contains(row)


def test_hyperplane_basis(f8):
    for x in la.enumerate_points(f8, 3):
        basis = la.hyperplane_basis(f8, x)
        assert len(basis) == 2
        for v in basis:
            assert la.dot(f8, x, v) == 0


def test_flatten_roundtrip(f8, f9):
    rng = random.Random(8)
    for tower in (f8, f9):
        for _ in range(20):
            vec = tuple(rng.randrange(tower.order) for _ in range(3))
            flat = la.flatten_vector(tower, vec)
            assert len(flat) == 3 * tower.m
            assert la.unflatten_vector(tower, flat, 3) == vec


def test_expansion_reassembles_exactly(f8, f9):
    rng = random.Random(21)
    for tower in (f8, f9):
        gamma = tower.gamma
        for _ in range(15):
            x = tuple(rng.randrange(tower.order) for _ in range(4))
            mat = la.expand(tower, x)
            for xi, row in zip(x, mat):
                acc = 0
                for c, g in zip(row, gamma):
                    acc = tower.add(acc, tower.mul(c, g))
                assert acc == xi
