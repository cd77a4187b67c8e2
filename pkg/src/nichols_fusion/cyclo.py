"""Exact arithmetic in the cyclotomic field Q(zeta), zeta a primitive 4p-th root of unity.

Every scalar in the system is a CycNum.  We work with zeta rather than with
q = zeta^2 = exp(i*pi/p) because half-integer powers of q occur (in the
vertex-vertex braiding and in the ribbon map); all of them are integer powers
of zeta.  Elements are polynomials in zeta with rational coefficients, held in
canonical form reduced modulo the 4p-th cyclotomic polynomial Phi_{4p}.
Reducing modulo Phi_{4p} (not zeta^{4p} - 1) keeps the quotient a field, so an
element is zero iff its coefficient vector is zero.

Coefficients are stored as an integer vector over a single positive
denominator, normalized by their gcd.  Almost every structure constant in the
system is an algebraic integer, so the denominator is usually 1 and all the
hot arithmetic is plain integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
import cmath


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_int(n, d):
    """Quotient and remainder of integer polynomials; division must be exact stepwise."""
    n = list(n)
    dd = len(d) - 1
    lead = d[-1]
    q = [0] * max(len(n) - dd, 1)
    for k in range(len(n) - 1, dd - 1, -1):
        c, rem = divmod(n[k], lead)
        if rem:
            raise ValueError("non-exact polynomial division")
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                n[k - dd + j] -= c * d[j]
    return q, n[:dd]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the n-th cyclotomic polynomial.

    >>> cyclotomic_poly(8)
    (1, 0, 0, 0, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(poly)


class CycNum:
    """An element of Q(zeta_{4p}) in canonical reduced form.

    Immutable; supports +, -, *, ** and exact equality.  Use .inv() for the
    multiplicative inverse and .evalf() for a floating-point embedding (the
    embedding is a sanity cross-check only, exact arithmetic is authoritative).
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num  # tuple[int], length = deg Phi_{4p}
        self.den = den  # int > 0, gcd(num..., den) == 1

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def __add__(self, other):
        f = self.field
        if self.den == other.den:
            return f._make([a + b for a, b in zip(self.num, other.num)], self.den)
        da, db = self.den, other.den
        return f._make([a * db + b * da for a, b in zip(self.num, other.num)], da * db)

    def __sub__(self, other):
        f = self.field
        if self.den == other.den:
            return f._make([a - b for a, b in zip(self.num, other.num)], self.den)
        da, db = self.den, other.den
        return f._make([a * db - b * da for a, b in zip(self.num, other.num)], da * db)

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.num), self.den)

    def __mul__(self, other):
        f = self.field
        if isinstance(other, int):
            return f._make([a * other for a in self.num], self.den)
        conv = [0] * (2 * f.deg - 1)
        for i, ai in enumerate(self.num):
            if ai:
                bn = other.num
                for j in range(f.deg):
                    if bn[j]:
                        conv[i + j] += ai * bn[j]
        # fold degrees >= deg back using the precomputed rows for x^k mod Phi
        for k in range(2 * f.deg - 2, f.deg - 1, -1):
            ck = conv[k]
            if ck:
                row = f.red_rows[k - f.deg]
                for t in range(f.deg):
                    if row[t]:
                        conv[t] += ck * row[t]
        return f._make(conv[: f.deg], self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        acc = self.field.one
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inv(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_{4p}."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the cyclotomic field")
        f = self.field
        a = [Fraction(c, self.den) for c in self.num]
        u = _fraction_poly_invmod(a, [Fraction(c) for c in f.phi])
        den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in u), 1)
        vec = [int(c * den) for c in u] + [0] * (f.deg - len(u))
        return f._make(vec, den)

    def __eq__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evalf(self) -> complex:
        z = cmath.exp(1j * cmath.pi / (2 * self.field.p))
        return sum(c * z**i for i, c in enumerate(self.num) if c) / self.den

    def coeffs(self):
        """Exact coefficients over zeta as (numerators, denominator)."""
        return list(self.num), self.den

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.num):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"CycNum({body})"


def _fraction_poly_invmod(a, m):
    """u with a*u = 1 mod m, over Fraction coefficients; m need not be irreducible
    as long as gcd(a, m) = 1 (true here since Phi_{4p} is irreducible over Q)."""

    def trim(x):
        while x and not x[-1]:
            x.pop()
        return x

    def dm(n, d):
        n = list(n)
        q = [Fraction(0)] * max(len(n) - len(d) + 1, 1)
        while len(n) >= len(d) and any(n):
            if not n[-1]:
                n.pop()
                continue
            c = n[-1] / d[-1]
            k = len(n) - len(d)
            q[k] += c
            for j in range(len(d)):
                n[k + j] -= c * d[j]
            n.pop()
        return q, trim(n)

    r0, r1 = trim(list(m)), trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = dm(r0, r1)
        qs = _fraction_poly_mul(q, s1)
        s = [x - y for x, y in zip(s0 + [Fraction(0)] * len(qs), qs + [Fraction(0)] * len(s0))]
        r0, r1, s0, s1 = r1, r, s1, trim(s)
    # r0 = gcd (a nonzero constant since Phi is irreducible)
    c = r0[0]
    assert len(r0) == 1 and c != 0
    return [x / c for x in s0]


def _fraction_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


class CycField:
    """Q(zeta_{4p}) together with the memoized q-combinatorics at q = zeta^2.

    All values are immutable and operations are pure; instances are safe to
    share across threads (the memo caches are idempotent dict writes).
    """

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("p must be at least 2")
        self.p = p
        self.order = 4 * p
        self.phi = cyclotomic_poly(self.order)
        self.deg = len(self.phi) - 1
        # rows for x^(deg+j) mod Phi, j = 0 .. deg-2, as plain int tuples
        rows = []
        cur = [-c for c in self.phi[:-1]]  # x^deg mod Phi (Phi is monic)
        rows.append(tuple(cur))
        for _ in range(self.deg - 2):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                first = rows[0]
                for t in range(self.deg):
                    nxt[t] += top * first[t]
            cur = nxt
            rows.append(tuple(cur))
        self.red_rows = rows
        self.zero = CycNum(self, (0,) * self.deg, 1)
        self.one = self._basis_monomial(0)
        self._zeta = self._zeta_table()
        self._qint = {}
        self._qfact = {0: self.one}
        self._qbinom = {}
        self._c2 = {}

    def _make(self, vec, den) -> CycNum:
        if den < 0:
            den = -den
            vec = [-a for a in vec]
        g = den
        for a in vec:
            if a:
                g = gcd(g, a)
                if g == 1:
                    break
        if g > 1:
            vec = [a // g for a in vec]
            den //= g
        if not any(vec):
            return self.zero if den == 1 else CycNum(self, (0,) * self.deg, 1)
        return CycNum(self, tuple(vec), den)

    def _basis_monomial(self, k):
        vec = [0] * self.deg
        vec[k] = 1
        return CycNum(self, tuple(vec), 1)

    def _zeta_table(self):
        # canonical forms of zeta^0 .. zeta^{4p-1}
        table = []
        cur = self.one
        z = self._basis_monomial(1) if self.deg > 1 else None
        for k in range(self.order):
            table.append(cur)
            if z is not None:
                cur = cur * z
        return table

    def from_int(self, n: int) -> CycNum:
        return self._make([n] + [0] * (self.deg - 1), 1)

    def from_fraction(self, fr: Fraction) -> CycNum:
        return self._make([fr.numerator] + [0] * (self.deg - 1), fr.denominator)

    def zeta_pow(self, k: int) -> CycNum:
        """zeta^k in canonical form; a group homomorphism Z -> field units."""
        return self._zeta[k % self.order]

    def q_pow(self, k: int) -> CycNum:
        """q^k = zeta^(2k)."""
        return self._zeta[(2 * k) % self.order]

    def q_half_pow(self, k: int) -> CycNum:
        """q^(k/2) = zeta^k."""
        return self._zeta[k % self.order]

    def q_int(self, r: int) -> CycNum:
        """The q-integer [r] = (q^{2r} - 1)/(q^2 - 1), division-free.

        For r >= 0 this is the sum 1 + q^2 + ... + q^{2(r-1)}; negative
        arguments (which occur throughout the module actions) use the exact
        reflection [r] = -q^{2r} [-r].
        """
        v = self._qint.get(r)
        if v is None:
            if r >= 0:
                acc = self.zero
                for i in range(r):
                    acc = acc + self.q_pow(2 * i)
                v = acc
            else:
                v = -(self.q_pow(2 * r) * self.q_int(-r))
            self._qint[r] = v
        return v

    def q_fact(self, r: int) -> CycNum:
        """[r]! = [1][2]...[r], for r >= 0."""
        if r < 0:
            raise ValueError("q_fact needs r >= 0")
        v = self._qfact.get(r)
        if v is None:
            v = self.q_fact(r - 1) * self.q_int(r)
            self._qfact[r] = v
        return v

    def q_binom(self, n: int, k: int) -> CycNum:
        """Gaussian binomial [n over k] at q^2, by the q-Pascal recursion.

        C(n, k) = C(n-1, k-1) + q^{2k} C(n-1, k); well defined at the root of
        unity even where the ratio of factorials degenerates to 0/0.
        """
        if k < 0 or k > n:
            return self.zero
        if k == 0 or k == n:
            return self.one
        v = self._qbinom.get((n, k))
        if v is None:
            v = self.q_binom(n - 1, k - 1) + self.q_pow(2 * k) * self.q_binom(n - 1, k)
            self._qbinom[(n, k)] = v
        return v

    def xi(self) -> CycNum:
        """xi = 1 - q^2, the normalization of the adjoint action of F."""
        return self.one - self.q_pow(2)

    def inv(self, x: CycNum) -> CycNum:
        return x.inv()

    def __repr__(self):
        return f"CycField(p={self.p})"


@lru_cache(maxsize=None)
def cyclotomic_field(p: int) -> CycField:
    return CycField(p)
