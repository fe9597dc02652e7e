"""Polynomials over GF(q) and the quotient ring R = F_q[x]/(x^n - 1).

Provides dense polynomial arithmetic, gcd, the two reciprocal maps used by
the LCD theory (bar: coefficient reversal mod x^n-1; tilde: monic reciprocal),
coefficient-wise conjugation, factorization of x^n - 1 (square-free +
distinct-degree + Cantor-Zassenhaus) and enumeration of (conjugate-)
self-reciprocal divisors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gf import FieldCtx


class RingError(ValueError):
    pass


class Poly:
    """Dense polynomial over a FieldCtx; coeffs low-to-high, trailing zeros trimmed.

    The zero polynomial has an empty coefficient tuple.  Instances are
    immutable and hashable.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, fld, coeffs):
        self.field = fld
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            fld.check(c)
        self.coeffs = tuple(cs)
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(fld):
        return Poly(fld, ())

    @staticmethod
    def one(fld):
        return Poly(fld, (1,))

    @staticmethod
    def x(fld, power=1, coeff=1):
        return Poly(fld, (0,) * power + (coeff,))

    @staticmethod
    def from_terms(fld, terms):
        """terms: iterable of (exponent, coefficient)."""
        deg = max((e for e, _ in terms), default=0)
        cs = [0] * (deg + 1)
        for e, c in terms:
            cs[e] = fld.add(cs[e], c)
        return Poly(fld, cs)

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    # -- arithmetic -----------------------------------------------------------

    def _chk(self, other):
        if self.field != other.field:
            raise RingError("polynomials over different fields")

    def __add__(self, other):
        self._chk(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = f.add(cs[i], c)
        return Poly(f, cs)

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._chk(other)
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(f)
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c):
        f = self.field
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other):
        self._chk(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dd = other.degree
        quot = [0] * max(len(rem) - dd, 0)
        inv_lead = f.inv(other.coeffs[-1])
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                q = f.mul(c, inv_lead)
                quot[i - dd] = q
                for j in range(dd + 1):
                    rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(q, other.coeffs[j]))
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        res = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                res = res * base
            base = base * base
            e >>= 1
        return res

    def divides(self, other):
        return (other % self).is_zero

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def evaluate(self, v):
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, v), c)
        return acc

    def derivative(self):
        f = self.field
        cs = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            m = i % f.p
            acc = 0
            for _ in range(m):
                acc = f.add(acc, c)
            cs.append(acc)
        return Poly(f, cs)

    # -- serialization / display ----------------------------------------------

    def to_list(self):
        return list(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if not c:
                continue
            cstr = "" if (c == 1 and i > 0) else str(c)
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{cstr}x")
            else:
                parts.append(f"{cstr}x^{i}")
        return " + ".join(parts)


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm; gcd(a, 0) = monic(a)."""
    if a.is_zero and b.is_zero:
        raise RingError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a, b):
    if a.is_zero or b.is_zero:
        return Poly.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()


def poly_conj(a, q0=None):
    """Coefficient-wise Frobenius a_i -> a_i^{q0}; default q0 = sqrt(field order)."""
    f = a.field
    if q0 is None:
        q0 = f.sqrt_order
        if q0 is None:
            raise RingError(f"GF({f.q}) has no conjugation: order is not a square")
    return Poly(f, [f.frobenius(c, q0) for c in a.coeffs])


def poly_tilde(a):
    """Monic reciprocal x^{deg a} * a(1/x); requires nonzero constant term."""
    if a.is_zero or a.coeffs[0] == 0:
        raise RingError("reciprocal undefined: zero constant term")
    return Poly(a.field, tuple(reversed(a.coeffs))).monic()


@dataclass(frozen=True)
class RingCtx:
    """The ring F_q[x]/(x^n - 1)."""

    field: FieldCtx
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise RingError(f"ring length {self.n} must be >= 1")

    @property
    def semisimple(self):
        """True when gcd(n, p) = 1, i.e. x^n - 1 is square-free."""
        return self.n % self.field.p != 0

    @property
    def modulus(self):
        f = self.field
        return Poly(f, (f.neg(1),) + (0,) * (self.n - 1) + (1,))

    def reduce(self, a):
        if a.degree < self.n:
            return a
        f = self.field
        cs = [0] * self.n
        for i, c in enumerate(a.coeffs):
            j = i % self.n
            cs[j] = f.add(cs[j], c)
        return Poly(f, cs)

    def coeff_vector(self, a):
        """The length-n coefficient vector [a_0, ..., a_{n-1}] of a reduced a."""
        a = self.reduce(a)
        return list(a.coeffs) + [0] * (self.n - len(a.coeffs))


def poly_mul_mod(a, b, ring):
    """a * b reduced modulo x^n - 1."""
    return ring.reduce(ring.reduce(a) * ring.reduce(b))


def poly_bar(a, ring):
    """x^n * a(1/x) mod x^n - 1: the coefficient reversal (a_0, a_{n-1}, ..., a_1)."""
    v = ring.coeff_vector(a)
    return Poly(ring.field, [v[0]] + v[:0:-1])


# -- factorization of x^n - 1 -------------------------------------------------

def _pth_root(a):
    """g with g^p = a; exists for every polynomial with zero derivative."""
    f = a.field
    cs = []
    for i in range(0, len(a.coeffs), f.p):
        # c^(q/p) is the inverse of the p-power map on GF(q)
        cs.append(f.pow(a.coeffs[i], f.q // f.p))
    return Poly(f, cs)


def squarefree_decomposition(a):
    """List of (square-free monic factor, multiplicity), multiplicities distinct."""
    f = a.field
    a = a.monic()
    out = {}

    def accumulate(g, mult):
        if g.degree > 0:
            out[mult] = out.get(mult, Poly.one(f)) * g

    def sqf(a, mult):
        d = a.derivative()
        if d.is_zero:
            sqf(_pth_root(a), mult * f.p)
            return
        c = poly_gcd(a, d)
        w = a // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            accumulate(w // y, mult * i)
            w, c = y, c // y
            i += 1
        if c.degree > 0:
            sqf(_pth_root(c), mult * f.p)

    sqf(a, 1)
    return sorted(((g.monic(), m) for m, g in out.items()),
                  key=lambda t: (t[1], t[0].degree, t[0].coeffs))


def _xq_pow_mod(a, e_base_q, mod):
    """x^(q^e) mod 'mod' by repeated q-th powering."""
    f = a.field
    res = a
    for _ in range(e_base_q):
        res = _pow_mod(res, f.q, mod)
    return res


def _pow_mod(a, e, mod):
    res = Poly.one(a.field)
    a = a % mod
    while e:
        if e & 1:
            res = (res * a) % mod
        a = (a * a) % mod
        e >>= 1
    return res


def distinct_degree_split(a):
    """List of (product of irreducibles of degree d, d) for square-free monic a."""
    f = a.field
    out = []
    x = Poly.x(f)
    h = x
    rem = a
    d = 0
    while rem.degree > 2 * (d + 1) - 1 and rem.degree > 0:
        d += 1
        h = _pow_mod(h, f.q, rem)
        g = poly_gcd(h - x, rem)
        if g.degree > 0:
            out.append((g, d))
            rem = rem // g
            h = h % rem
    if rem.degree > 0:
        out.append((rem, rem.degree))
    return out


def equal_degree_factor(a, d, rng):
    """Cantor-Zassenhaus split of square-free monic a into irreducibles of degree d."""
    f = a.field
    if a.degree == d:
        return [a.monic()]
    while True:
        r = Poly(f, [rng.randrange(f.q) for _ in range(a.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(r, a) if not r.is_zero else a
        if 0 < g.degree < a.degree:
            break
        if f.p == 2:
            # trace map over GF(2^k): T(r) = r + r^2 + ... + r^(2^(k*d - 1))
            k = f.r
            t = Poly.zero(f)
            s = r % a
            for _ in range(k * d):
                t = (t + s) % a
                s = (s * s) % a
            g = poly_gcd(t, a) if not t.is_zero else a
        else:
            e = (f.q ** d - 1) // 2
            g = poly_gcd(_pow_mod(r, e, a) - Poly.one(f), a)
        if 0 < g.degree < a.degree:
            break
    return sorted(equal_degree_factor(g, d, rng) + equal_degree_factor(a // g, d, rng),
                  key=lambda p: p.coeffs)


def factor_poly(a, rng=None):
    """Complete factorization of a into monic irreducibles with multiplicities."""
    if a.degree < 1:
        raise RingError("cannot factor a constant")
    if rng is None:
        rng = random.Random(0xC2)
    out = {}
    for sqf, mult in squarefree_decomposition(a):
        for prod, d in distinct_degree_split(sqf):
            for irr in equal_degree_factor(prod, d, rng):
                out[irr] = out.get(irr, 0) + mult
    return sorted(out.items(), key=lambda t: (t[0].degree, t[0].coeffs))


def is_irreducible(a):
    if a.degree < 1:
        return False
    if a.degree == 1:
        return True
    sq = squarefree_decomposition(a.monic())
    if len(sq) != 1 or sq[0][1] != 1 or sq[0][0].degree != a.degree:
        return False
    split = distinct_degree_split(sq[0][0])
    return len(split) == 1 and split[0][1] == a.degree


def factor_xn_minus_1(ring):
    """Factor x^n - 1 over the ring's field; deterministic per (q, n)."""
    rng = random.Random(ring.field.q * 1000003 + ring.n)
    return factor_poly(ring.modulus, rng)


MAX_DIVISOR_FACTORS = 24


def all_divisors(ring):
    """All monic divisors of x^n - 1 (including 1 and x^n - 1 itself)."""
    facs = factor_xn_minus_1(ring)
    if sum(m for _, m in facs) > MAX_DIVISOR_FACTORS:
        raise RingError(f"more than {MAX_DIVISOR_FACTORS} irreducible factors; "
                        "divisor enumeration refused")
    divs = [Poly.one(ring.field)]
    for irr, mult in facs:
        powers = [Poly.one(ring.field)]
        for _ in range(mult):
            powers.append(powers[-1] * irr)
        divs = [d * pw for d in divs for pw in powers]
    return sorted(divs, key=lambda p: (p.degree, p.coeffs))


def is_self_reciprocal(g, kind="euclidean"):
    """g = tilde(g) (euclidean/symplectic) or g = conj(tilde(g)) (hermitian)."""
    if g.is_zero or g.coeffs[0] == 0:
        return False
    t = poly_tilde(g)
    if kind == "hermitian":
        t = poly_conj(t)
    elif kind == "symplectic":
        kind = "euclidean"
    return g.monic() == t


def self_reciprocal_divisors(ring, kind="euclidean"):
    """Monic divisors d of x^n - 1 with d equal to its (conjugate-)reciprocal.

    Requires gcd(n, p) = 1; sorted by degree then coefficients.
    """
    if not ring.semisimple:
        raise RingError(f"x^{ring.n} - 1 is not square-free over GF({ring.field.q})")
    if kind == "hermitian" and ring.field.sqrt_order is None:
        raise RingError("hermitian reciprocity needs a square field order")
    return [d for d in all_divisors(ring) if is_self_reciprocal(d, kind)]


def cyclic_dual_generator(g, ring, kind="euclidean"):
    """Generator polynomial of the dual of the cyclic code <g>.

    Euclidean: tilde(h) with h = (x^n - 1)/g; Hermitian: conj(tilde(h)).
    The dual of the full space (g = 1) is the zero code, whose generator is
    x^n - 1 by convention.
    """
    mod = ring.modulus
    q_, r_ = divmod(mod, g)
    if not r_.is_zero:
        raise RingError("g does not divide x^n - 1")
    h = q_.monic()
    if h.degree == 0:
        return mod.monic()
    d = poly_tilde(h)
    if kind == "hermitian":
        d = poly_conj(d)
    elif kind not in ("euclidean", "symplectic"):
        raise RingError(f"unknown duality kind {kind!r}")
    return d
