"""Exact arithmetic in the tower F_p <= F_q <= F_{q^m}, with q = p^h.

Elements of F_{q^m} are represented as integer codes in [0, p^(h*m)): the
base-p digits of a code are the coefficients of the element written in the
power basis of F_p[z]/(f), constant term first, where f is the canonical
modulus (the lexicographically least monic irreducible polynomial of degree
h*m over F_p, coefficients compared constant term first).

Multiplication runs on discrete log/antilog tables built once per tower, so
every arithmetic call after construction is table lookups plus (for p > 2)
digit-wise addition.  Towers are immutable and safe to share.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InternalError, ValidationError

SIZE_CAP = 2 ** 20  # largest permitted |F_{q^m}|


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (lists indexed by degree), used only
# while constructing a tower


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _poly_trim(out)


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    d = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    # mod is monic: x^d == -(mod[0] + ... + mod[d-1] x^(d-1))
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(d):
                if mod[j]:
                    prod[i - d + j] = (prod[i - d + j] - c * mod[j]) % p
    return _poly_trim(prod)


def _poly_powmod(a: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by nonzero b."""
    a = _poly_trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    while a and len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        _poly_trim(a)
    return a


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Monic f of degree d >= 1 irreducible over F_p."""
    d = len(f) - 1
    x = _poly_mod([0, 1], f, p)
    xp = list(x)
    for _ in range(d):
        xp = _poly_powmod(xp, p, f, p)
    if _poly_trim(list(xp)) != x:
        return False
    for r in prime_factors(d):
        xe = list(x)
        for _ in range(d // r):
            xe = _poly_powmod(xe, p, f, p)
        g = _poly_gcd(f, _poly_sub(xe, x, p), p)
        if len(g) != 1:
            return False
    return True


def canonical_modulus(p: int, d: int) -> tuple[int, ...]:
    """Least monic irreducible of degree d over F_p, compared lexicographically
    with the constant coefficient most significant.  Returned constant-term
    first, including the leading 1."""
    for j in range(p ** d):
        coeffs = [(j // p ** (d - 1 - i)) % p for i in range(d)]
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise InternalError(f"no irreducible polynomial of degree {d} over F_{p}")


# ---------------------------------------------------------------------------


class FieldTower:
    """The fixed chain F_p <= F_q <= F_{q^m} with canonical representation.

    The middle field F_q is the set of codes fixed by the Frobenius map
    x -> x^q; it is never given a separate representation.
    """

    def __init__(self, p: int, h: int, m: int):
        if not is_prime(p):
            raise ValidationError(f"p = {p} is not prime")
        if h < 1 or m < 1:
            raise ValidationError("extension degrees must be positive")
        if p ** (h * m) > SIZE_CAP:
            raise ValidationError(
                f"|F_q^m| = {p}^{h * m} exceeds the size cap 2^20")
        self.p = p
        self.h = h
        self.m = m
        self.q = p ** h
        self.hm = h * m
        self.order = p ** (h * m)
        self.modulus = canonical_modulus(p, self.hm)
        self.zero = 0
        self.one = 1
        self._build_log_tables()
        if p == 2:
            self.add = lambda a, b: a ^ b
            self.neg = lambda a: a
        else:
            self.add = self._add_digits
            self.neg = self._neg_digits
        self._subfield = self._enumerate_subfield()
        self._generator: int | None = None
        self._gamma: tuple[int, ...] | None = None
        self._coords_cache: dict[int, tuple[int, ...]] = {}
        self._fq_basis: tuple[int, ...] | None = None
        self._coord_solver: _FpSolver | None = None

    # -- construction helpers ------------------------------------------------

    def _build_log_tables(self) -> None:
        p, n1 = self.p, self.order - 1
        fac = prime_factors(n1) if n1 > 1 else []
        primitive = None
        for cand in range(1, self.order):
            poly = self._int_to_poly(cand)
            if all(
                self._poly_to_int(_poly_powmod(poly, n1 // r, self.modulus, p)) != 1
                for r in fac
            ):
                primitive = cand
                break
        if primitive is None:
            raise InternalError("no primitive element found")
        g_poly = self._int_to_poly(primitive)
        exp = [0] * n1
        log = [-1] * self.order
        cur = [1]
        for i in range(n1):
            code = self._poly_to_int(cur)
            exp[i] = code
            log[code] = i
            cur = _poly_mulmod(cur, g_poly, self.modulus, p)
        if self._poly_to_int(cur) != 1:
            raise InternalError("primitive element order mismatch")
        self._exp = exp
        self._log = log

    def _int_to_poly(self, a: int) -> list[int]:
        p = self.p
        out = []
        while a:
            out.append(a % p)
            a //= p
        return out

    def _poly_to_int(self, poly: Sequence[int]) -> int:
        code = 0
        for c in reversed(poly):
            code = code * self.p + c
        return code

    def _enumerate_subfield(self) -> tuple[int, ...]:
        n1 = self.order - 1
        if self.q == self.order:
            return tuple(range(self.order))
        s = n1 // (self.q - 1)
        elems = {0} | {self._exp[(i * s) % n1] for i in range(self.q - 1)}
        if len(elems) != self.q:
            raise InternalError("subfield enumeration came up short")
        return tuple(sorted(elems))

    # -- arithmetic -----------------------------------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p, out, mult = self.p, 0, 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _neg_digits(self, a: int) -> int:
        p, out, mult = self.p, 0, 1
        while a:
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n1 = self.order - 1
        return self._exp[(self._log[a] + self._log[b]) % n1]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValidationError("zero has no inverse")
        n1 = self.order - 1
        return self._exp[(n1 - self._log[a]) % n1]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ValidationError("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frobenius(self, a: int) -> int:
        """The F_q-linear automorphism x -> x^q."""
        return self.pow(a, self.q)

    def trace(self, a: int) -> int:
        """Tr_{q^m/q}(a) = a + a^q + ... + a^(q^(m-1)); lands in F_q."""
        acc, cur = 0, a
        for _ in range(self.m):
            acc = self.add(acc, cur)
            cur = self.frobenius(cur)
        return acc

    def in_subfield(self, a: int) -> bool:
        """Membership in the middle field F_q (fixed points of x -> x^q)."""
        if a == 0 or self.q == self.order:
            return True
        return self._log[a] % ((self.order - 1) // (self.q - 1)) == 0

    @property
    def subfield_elements(self) -> tuple[int, ...]:
        """All q codes of the middle field, ascending."""
        return self._subfield

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    # -- generator, basis, coordinates ----------------------------------------

    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p ** i) % p for i in range(self.hm)]

    def _fp_independent(self, vectors: Sequence[int]) -> bool:
        """F_p-independence of codes seen as digit vectors of length hm."""
        p = self.p
        if p == 2:
            rows = list(vectors)
            rank = 0
            for col in range(self.hm):
                piv = next((i for i in range(rank, len(rows)) if (rows[i] >> col) & 1), None)
                if piv is None:
                    continue
                rows[rank], rows[piv] = rows[piv], rows[rank]
                for i in range(len(rows)):
                    if i != rank and (rows[i] >> col) & 1:
                        rows[i] ^= rows[rank]
                rank += 1
            return rank == len(vectors)
        rows = [self._digits(v) for v in vectors]
        rank = 0
        for col in range(self.hm):
            piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv_p = pow(rows[rank][col], p - 2, p)
            rows[rank] = [(c * inv_p) % p for c in rows[rank]]
            for i in range(len(rows)):
                if i != rank and rows[i][col]:
                    c = rows[i][col]
                    rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
            rank += 1
        return rank == len(vectors)

    def _fq_independent(self, vectors: Sequence[int]) -> bool:
        """F_q-independence of elements of F_{q^m}."""
        basis_fq = self.fq_basis_over_fp()
        blown = [self.mul(b, v) for v in vectors for b in basis_fq]
        return self._fp_independent(blown)

    def fq_basis_over_fp(self) -> tuple[int, ...]:
        """Power basis (1, u, ..., u^(h-1)) of F_q over F_p for the least
        generating u; (1,) when h = 1."""
        if self._fq_basis is None:
            if self.h == 1:
                self._fq_basis = (1,)
            else:
                for u in self._subfield:
                    powers = [self.pow(u, i) for i in range(self.h)]
                    if self._fp_independent(powers):
                        self._fq_basis = tuple(powers)
                        break
                else:
                    raise InternalError("no F_p-generator of F_q found")
        return self._fq_basis

    def find_generator(self) -> int:
        """Least element (ascending code order) whose powers 1, g, ..., g^(m-1)
        are F_q-independent, i.e. with F_q(g) = F_{q^m}; 1 when m = 1."""
        if self._generator is None:
            if self.m == 1:
                self._generator = 1
            else:
                for cand in range(self.order):
                    if self._fq_independent([self.pow(cand, i) for i in range(self.m)]):
                        self._generator = cand
                        break
                else:
                    raise InternalError("no extension generator found")
        return self._generator

    @property
    def gamma(self) -> tuple[int, ...]:
        """Default ordered F_q-basis of F_{q^m}: powers of the canonical generator."""
        if self._gamma is None:
            g = self.find_generator()
            self._gamma = tuple(self.pow(g, i) for i in range(self.m))
        return self._gamma

    def coords(self, a: int) -> tuple[int, ...]:
        """Coordinates of a over F_q in the default basis gamma (F_q codes)."""
        cached = self._coords_cache.get(a)
        if cached is not None:
            return cached
        if self.h == 1:
            # gamma is (1, z, ..., z^(m-1)) for m > 1 and (1) for m = 1, so the
            # base-p digits are exactly the coordinates
            out = tuple(self._digits(a))
        else:
            out = self._solve_coords(a)
        self._coords_cache[a] = out
        return out

    def _solve_coords(self, a: int) -> tuple[int, ...]:
        if self._coord_solver is None:
            basis_fq = self.fq_basis_over_fp()
            cols = [self.mul(g, u) for g in self.gamma for u in basis_fq]
            self._coord_solver = _FpSolver([self._digits(c) for c in cols], self.p)
        c = self._coord_solver.solve(self._digits(a))
        basis_fq = self.fq_basis_over_fp()
        h = self.h
        out = []
        for j in range(self.m):
            acc = 0
            for i in range(h):
                scalar = c[j * h + i]
                if scalar:
                    acc = self.add(acc, self.mul(scalar, basis_fq[i]))
            out.append(acc)
        return tuple(out)

    def from_coords(self, coeffs: Sequence[int]) -> int:
        """Inverse of coords: sum of coeffs[j] * gamma[j] (coeffs are F_q codes)."""
        acc = 0
        for c, g in zip(coeffs, self.gamma):
            if c:
                acc = self.add(acc, self.mul(c, g))
        return acc

    # -- element and field literals -------------------------------------------

    def format_element(self, a: int) -> str:
        """Polynomial literal over F_p, e.g. "1+z+z^3"."""
        if not 0 <= a < self.order:
            raise ValidationError(f"code {a} outside the field")
        if a == 0:
            return "0"
        terms = []
        for i, c in enumerate(self._digits(a)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z" if i == 1 else f"z^{i}"
                terms.append(z if c == 1 else f"{c}*{z}")
        return "+".join(terms)

    def parse_element(self, text: str) -> int:
        """Parse a literal matching the grammar: sum of terms c*z^i, c in [0,p)."""
        s = text.replace(" ", "")
        if not s:
            raise ValidationError("empty element literal")
        code = 0
        for term in s.split("+"):
            if not term:
                raise ValidationError(f"malformed element literal {text!r}")
            coeff, power = 1, 0
            if "*" in term:
                cs, term = term.split("*", 1)
                if not cs.isdigit():
                    raise ValidationError(f"bad coefficient in {text!r}")
                coeff = int(cs)
            if term.startswith("z"):
                rest = term[1:]
                if rest == "":
                    power = 1
                elif rest.startswith("^") and rest[1:].isdigit():
                    power = int(rest[1:])
                else:
                    raise ValidationError(f"bad power in {text!r}")
            elif term.isdigit():
                if coeff != 1:
                    raise ValidationError(f"bad term in {text!r}")
                coeff, power = int(term), 0
            else:
                raise ValidationError(f"bad term in {text!r}")
            if coeff >= self.p:
                raise ValidationError(
                    f"coefficient {coeff} not in [0, {self.p}) in {text!r}")
            if power >= self.hm:
                raise ValidationError(
                    f"power z^{power} outside the field (degree {self.hm}) in {text!r}")
            # the monomial z^power is reduced, so its code is p**power
            code = self.add(code, self.mul(coeff, self.p ** power))
        return code

    @property
    def spec(self) -> str:
        """CLI field spec string "p^h:m"."""
        return f"{self.p}^{self.h}:{self.m}"

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, h={self.h}, m={self.m})"


class _FpSolver:
    """Solver for a fixed invertible matrix over F_p, given column vectors."""

    def __init__(self, columns: list[list[int]], p: int):
        n = len(columns)
        self.p = p
        aug = [[columns[j][i] for j in range(n)] + [1 if t == i else 0 for t in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise InternalError("coordinate basis matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = pow(aug[col][col], p - 2, p)
            aug[col] = [(c * inv_p) % p for c in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[col])]
        self.inverse = [row[n:] for row in aug]

    def solve(self, rhs: list[int]) -> list[int]:
        p = self.p
        return [sum(a * b for a, b in zip(row, rhs)) % p for row in self.inverse]


@lru_cache(maxsize=None)
def make_field(p: int, h: int, m: int) -> FieldTower:
    """Build (or fetch) the canonical tower F_p <= F_{p^h} <= F_{p^(h*m)}."""
    return FieldTower(p, h, m)


def parse_field_spec(spec: str) -> FieldTower:
    """Parse "p^h:m" (e.g. "2^1:3") into a tower."""
    try:
        base, m_str = spec.split(":")
        p_str, h_str = base.split("^")
        p, h, m = int(p_str), int(h_str), int(m_str)
    except (ValueError, AttributeError) as exc:
        raise ValidationError(f"bad field spec {spec!r}; expected p^h:m") from exc
    return make_field(p, h, m)


def q_binomial(s: int, t: int, q: int) -> int:
    """Number of t-dimensional F_q-subspaces of an s-dimensional space.

    Exact integer arithmetic; 0 when s < 0, t < 0 or t > s, and 1 when t = 0.
    """
    if q < 2:
        raise ValidationError("q must be at least 2")
    if s < 0 or t < 0 or t > s:
        return 0
    if t == 0:
        return 1
    num = den = 1
    for i in range(1, t + 1):
        num *= q ** (s - i + 1) - 1
        den *= q ** i - 1
    quot, rem = divmod(num, den)
    if rem:
        raise InternalError("q-binomial was not an integer")
    return quot
