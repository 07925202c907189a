"""Reference code families and systems used throughout the test batteries.

All constructors are deterministic: default generators come from the tower's
canonical element ordering, t-sequences are sorted ascending on intake (a
column permutation, so every verified quantity is unchanged), and basis
orders are fixed.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .codes import Code, make_code
from .errors import ValidationError
from .fields import FieldTower
from .systems import System, PointSpectrum, code_of, dual_system, make_system


def _require_extension_generator(tower: FieldTower, lam: int) -> None:
    powers = [tower.pow(lam, i) for i in range(tower.m)]
    if not tower._fq_independent(powers):
        raise ValidationError("lambda does not generate F_{q^m} over F_q")


def poly_code(tower: FieldTower, t: Sequence[int], lam: int | None = None) -> Code:
    """Block code with rows (1, lam, ..., lam^(t_i - 1)); parameters
    [t_1 + ... + t_k, k, t_1] after ascending sort of the block sizes."""
    tseq = tuple(sorted(int(x) for x in t))
    if not tseq:
        raise ValidationError("t-sequence must be nonempty")
    if any(ti < 1 or ti > tower.m - 1 for ti in tseq):
        raise ValidationError("each t_i must satisfy 1 <= t_i <= m-1")
    lam = tower.find_generator() if lam is None else lam
    _require_extension_generator(tower, lam)
    n = sum(tseq)
    G = []
    offset = 0
    for ti in tseq:
        row = [0] * n
        for j in range(ti):
            row[offset + j] = tower.pow(lam, j)
        G.append(row)
        offset += ti
    return make_code(tower, G)


def gabidulin(tower: FieldTower, n: int, k: int) -> Code:
    """Moore-matrix code on the first n canonical basis elements; MRD with
    minimum distance n - k + 1."""
    if not 1 <= k <= n:
        raise ValidationError("need 1 <= k <= n")
    if n > tower.m:
        raise ValidationError("Moore rows need n <= m independent points")
    points = tower.gamma[:n]
    G = []
    row = list(points)
    for _ in range(k):
        G.append(tuple(row))
        row = [tower.frobenius(x) for x in row]
    return make_code(tower, G)


def redei_scattered_system(tower: FieldTower) -> System:
    """The scattered subspace {(x, x^q, a) : x in F_{q^m}, a in F_q} of
    F_{q^m}^3, of rank m + 1."""
    if tower.m < 2:
        raise ValidationError("the graph subspace needs m >= 2")
    vecs = [(g, tower.frobenius(g), 0) for g in tower.gamma]
    vecs.append((0, 0, 1))
    sys = make_system(tower, 3, vecs)
    if sys.n != tower.m + 1:
        raise ValidationError("graph subspace has unexpected rank")
    return sys


def redei_code(tower: FieldTower) -> Code:
    """The [2m-1, 3, m-1] code associated with the dual of the graph
    subspace; attains the minimum number of maximum-weight codewords
    without being MRD."""
    w = redei_scattered_system(tower)
    u = dual_system(w)
    if not u.spanning:
        raise ValidationError("dual of the graph subspace fails to span")
    return code_of(u)


def vdv_spectrum(q: int, m: int, t1: int, t2: int) -> PointSpectrum:
    """Closed-form point spectrum of the rank-(t1+t2) linear set on the
    projective line defined by a pair of generator-power blocks; serves as
    the independent oracle for two-block poly_code spectra."""
    if not (1 <= t1 <= t2 and t1 + t2 <= m):
        raise ValidationError("need 1 <= t1 <= t2 and t1 + t2 <= m")
    n = t1 + t2
    counts = [0] * (n + 1)
    counts[t2] += 1                       # the distinguished point <(0, 1)>
    counts[t1] += q ** (t2 - t1 + 1)      # remaining points of weight t1
    for i in range(1, t1):
        counts[i] += q ** (n - 2 * i + 1) - q ** (n - 2 * i - 1)
    spec = PointSpectrum(n, tuple(counts))
    if spec.size != q ** (n - 1) + 1 or spec.size % q != 1:
        raise ValidationError("closed-form spectrum failed its size check")
    return spec


# ---------------------------------------------------------------------------
# lifted construction


def subfield_elements_of_order(tower: FieldTower, t: int) -> tuple[int, ...]:
    """Elements of the intermediate field F_{q^t} inside F_{q^m} (t | m)."""
    if tower.m % t:
        raise ValidationError(f"F_(q^{t}) is not a subfield of F_(q^m)")
    size = tower.q ** t
    if size == tower.order:
        return tuple(range(tower.order))
    n1 = tower.order - 1
    s = n1 // (size - 1)
    elems = {0} | {tower._exp[(i * s) % n1] for i in range(size - 1)}
    return tuple(sorted(elems))


def middle_generator(tower: FieldTower, t: int) -> int:
    """Least element mu with F_q(mu) = F_{q^t}."""
    elems = subfield_elements_of_order(tower, t)
    for mu in elems:
        if tower._fq_independent([tower.pow(mu, i) for i in range(t)]):
            # powers 1..mu^(t-1) independent over F_q and mu inside F_{q^t}
            return mu
    raise ValidationError(f"no generator of F_(q^{t}) found")


def default_lift_space(tower: FieldTower, t: int, ell: int) -> tuple[int, ...]:
    """Default F_{q^t}-basis (g, g^2, ..., g^ell) for the lifted block,
    g the canonical generator of F_{q^m}."""
    g = tower.find_generator()
    return tuple(tower.pow(g, j + 1) for j in range(ell))


def lifted_poly_code(
    tower: FieldTower,
    t: int,
    ell: int,
    tseq: Sequence[int],
    mu: int | None = None,
    sbar_basis: Sequence[int] | None = None,
) -> Code:
    """Lifted block code: the first row carries an F_q-basis of an
    F_{q^t}-subspace S of F_{q^m} alongside its generator-power block.

    Requires m = l' * t with ell < l', S of F_{q^t}-dimension ell with
    1 not in S and S meeting F_{q^t} trivially, and t_i + t_j <= t + 1 for
    all i != j.  The resulting parameters are [ell*t + sum(t_i), k, min_{i>1} t_i].
    """
    m = tower.m
    if t < 1 or m % t:
        raise ValidationError("block degree t must divide m")
    lprime = m // t
    if not 1 <= ell < lprime:
        raise ValidationError("need 1 <= ell < m/t")
    tseq = tuple(sorted(int(x) for x in tseq))
    if len(tseq) < 2:
        raise ValidationError("the lifted construction needs k >= 2 blocks")
    if any(ti < 1 for ti in tseq):
        raise ValidationError("each t_i must be positive")
    for i, j in itertools.combinations(range(len(tseq)), 2):
        if tseq[i] + tseq[j] > t + 1:
            raise ValidationError("need t_i + t_j <= t + 1 for all pairs")
    mu = middle_generator(tower, t) if mu is None else mu
    middle = set(subfield_elements_of_order(tower, t))
    if mu not in middle or not tower._fq_independent([tower.pow(mu, i) for i in range(t)]):
        raise ValidationError("mu does not generate F_{q^t} over F_q")
    sbar = tuple(sbar_basis) if sbar_basis is not None else default_lift_space(tower, t, ell)
    if len(sbar) != ell:
        raise ValidationError("S-bar basis must have ell elements")
    # F_q-basis of S-bar in deterministic order: mu-powers within each block
    c_elems = [tower.mul(tower.pow(mu, i), s) for s in sbar for i in range(t)]
    if not tower._fq_independent(c_elems):
        raise ValidationError("S-bar basis is not F_{q^t}-independent")
    if not tower._fq_independent(c_elems + [1]):
        raise ValidationError("1 lies in S-bar; pick another basis")
    mu_block = [tower.pow(mu, i) for i in range(t)]
    if not tower._fq_independent(c_elems + mu_block):
        raise ValidationError("S-bar meets F_{q^t} nontrivially; pick another basis")
    k = len(tseq)
    n = ell * t + sum(tseq)
    G = [[0] * n for _ in range(k)]
    G[0][: ell * t] = c_elems
    offset = ell * t
    for i, ti in enumerate(tseq):
        for j in range(ti):
            G[i][offset + j] = tower.pow(mu, j)
        offset += ti
    return make_code(tower, G)


def poly_system(tower: FieldTower, t: Sequence[int], lam: int | None = None) -> System:
    """The product-of-power-blocks system associated with poly_code."""
    tseq = tuple(sorted(int(x) for x in t))
    lam = tower.find_generator() if lam is None else lam
    _require_extension_generator(tower, lam)
    k = len(tseq)
    vecs = []
    for i, ti in enumerate(tseq):
        for j in range(ti):
            v = [0] * k
            v[i] = tower.pow(lam, j)
            vecs.append(tuple(v))
    return make_system(tower, k, vecs)


def parse_construction(spec: str):
    """Parse a CLI construction spec into a code.

    Grammar:
      gabidulin:p^h:m:n:k
      poly:p^h:m:lambda=auto|<element>:t=1,2
      lifted:p^h:m:t=<int>:ell=<int>:tseq=1,2
      redei:p^h:m
    """
    from .fields import make_field

    parts = spec.split(":")
    if len(parts) < 3:
        raise ValidationError(f"bad construction spec {spec!r}")
    kind = parts[0]
    try:
        p_str, h_str = parts[1].split("^")
        p, h, m = int(p_str), int(h_str), int(parts[2])
    except (ValueError, IndexError) as exc:
        raise ValidationError(f"bad field in construction spec {spec!r}") from exc
    tower = make_field(p, h, m)
    if kind == "gabidulin":
        if len(parts) != 5:
            raise ValidationError("gabidulin spec needs p^h:m:n:k")
        return gabidulin(tower, int(parts[3]), int(parts[4]))
    if kind == "redei":
        if len(parts) != 3:
            raise ValidationError("redei spec needs p^h:m")
        return redei_code(tower)
    if kind == "poly":
        lam = None
        tseq = None
        for part in parts[3:]:
            key, _, val = part.partition("=")
            if key == "lambda":
                lam = None if val == "auto" else tower.parse_element(val)
            elif key == "t":
                tseq = [int(x) for x in val.split(",") if x]
            else:
                raise ValidationError(f"unknown poly option {key!r}")
        if not tseq:
            raise ValidationError("poly spec needs t=...")
        return poly_code(tower, tseq, lam)
    if kind == "lifted":
        t_val = ell = None
        tseq = None
        for part in parts[3:]:
            key, _, val = part.partition("=")
            if key == "t":
                t_val = int(val)
            elif key == "ell":
                ell = int(val)
            elif key == "tseq":
                tseq = [int(x) for x in val.split(",") if x]
            else:
                raise ValidationError(f"unknown lifted option {key!r}")
        if t_val is None or ell is None or not tseq:
            raise ValidationError("lifted spec needs t=, ell=, tseq=")
        return lifted_poly_code(tower, t_val, ell, tseq)
    raise ValidationError(f"unknown construction kind {kind!r}")
