"""Arithmetic in small finite fields GF(p^r).

Elements are plain ints: the integer packing (base p) of the coefficient
vector of a residue polynomial of degree < r.  All operations live on a
FieldCtx, which precomputes log/antilog tables at construction so that
multiplication and inversion in inner loops are table lookups.  With this
encoding, addition in characteristic 2 is XOR of encodings.

The default GF(4) modulus is x^2 + x + 1, so the element 2 is a root w
with w^2 = w + 1 (encoding 3).
"""

from __future__ import annotations

from functools import lru_cache


class FieldError(ValueError):
    """Invalid field construction or element outside the field."""


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n):
    return n >= 2 and _prime_factors(n) == [n]


class FieldCtx:
    """The field GF(p^r) with a fixed irreducible modulus over GF(p).

    ``modulus`` is the coefficient list (low-to-high, length r+1, monic) of
    the defining polynomial.  ``order`` is q = p^r.  Instances are immutable
    after construction and safe to share across workers.
    """

    def __init__(self, p, r=1, modulus=None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if r < 1:
            raise FieldError(f"extension degree {r} must be >= 1")
        self.p = p
        self.r = r
        self.q = p ** r
        if self.q > 1 << 16:
            raise FieldError(f"field order {self.q} exceeds 2^16")
        if modulus is None:
            modulus = _default_modulus(p, r)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree r")
        if r > 1 and not _irreducible_mod_p(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = modulus
        self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _mul_nota(self, a, b):
        """Table-free product of packed residues, used to bootstrap tables."""
        p, r = self.p, self.r
        da = _digits(a, p, r)
        db = _digits(b, p, r)
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce by the monic modulus
        mod = self.modulus
        for i in range(len(prod) - 1, r - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(r):
                    prod[i - r + j] = (prod[i - r + j] - c * mod[j]) % p
        return _pack(prod[:r], p)

    def _build_tables(self):
        q = self.q
        # find a primitive element by order testing
        qm1 = q - 1
        cofactors = [qm1 // f for f in _prime_factors(qm1)] if qm1 > 1 else []
        gen = None
        for cand in range(2, q):
            if all(self._pow_slow(cand, c) != 1 for c in cofactors):
                gen = cand
                break
        if gen is None:
            gen = 1  # GF(2)
        exp = [0] * (2 * qm1 if qm1 else 1)
        log = [0] * q
        acc = 1
        for i in range(qm1):
            exp[i] = acc
            exp[i + qm1] = acc
            log[acc] = i
            acc = self._mul_nota(acc, gen)
        if qm1 == 0:
            exp = [1]
        self._exp = exp
        self._log = log
        self.generator = gen

    def _pow_slow(self, a, e):
        res = 1
        while e:
            if e & 1:
                res = self._mul_nota(res, a)
            a = self._mul_nota(a, a)
            e >>= 1
        return res

    # -- element ops ----------------------------------------------------------

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of GF({self.q})")
        return a

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        return _pack(
            [(x + y) % self.p for x, y in zip(_digits(a, self.p, self.r),
                                              _digits(b, self.p, self.r))],
            self.p)

    def neg(self, a):
        if self.p == 2:
            return a
        if self.r == 1:
            return (-a) % self.p
        return _pack([(-x) % self.p for x in _digits(a, self.p, self.r)], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        if a == 1:
            return 1
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)] if self.q > 2 else a

    def frobenius(self, a, q0):
        """a^{q0} for q0 = p^s, s <= r (the Hermitian conjugation is q0=p^{r/2})."""
        if not _is_p_power_upto(q0, self.p, self.r):
            raise FieldError(f"{q0} is not a valid Frobenius base power for GF({self.q})")
        return self.pow(a, q0)

    @property
    def sqrt_order(self):
        """q0 with q0^2 = q, for Hermitian settings.  None if q is not a square."""
        if self.r % 2:
            return None
        return self.p ** (self.r // 2)

    def conj(self, a):
        """Hermitian conjugate x -> x^{sqrt(q)}; requires square field order."""
        q0 = self.sqrt_order
        if q0 is None:
            raise FieldError(f"GF({self.q}) has no square root of its order")
        return self.pow(a, q0)

    # -- misc -----------------------------------------------------------------

    def elements(self):
        return range(self.q)

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus))

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.q};mod={list(self.modulus)})"


def _is_p_power_upto(q0, p, r):
    """q0 = p^s with 0 <= s <= r."""
    for _ in range(r + 1):
        if q0 == 1:
            return True
        if q0 % p:
            return False
        q0 //= p
    return q0 == 1


def _digits(a, p, r):
    out = []
    for _ in range(r):
        out.append(a % p)
        a //= p
    return out


def _pack(digs, p):
    out = 0
    for d in reversed(digs):
        out = out * p + d
    return out


def _poly_mod_p_divmod(num, den, p):
    """Division of coefficient lists over GF(p); den need not be monic."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = c * inv_lead % p
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    rem = num[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _irreducible_mod_p(coeffs, p):
    """Trial division by all monic polynomials of degree <= deg/2 over GF(p)."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for packed in range(p ** d):
            den = _digits(packed, p, d) + [1]
            if not _poly_mod_p_divmod(coeffs, den, p):
                return False
    return True


def _default_modulus(p, r):
    """Smallest (by packed integer value) monic irreducible of degree r.

    For GF(4) this is x^2+x+1, matching the w used in worked examples.
    """
    if r == 1:
        return (0, 1)
    for packed in range(p ** r):
        cand = tuple(_digits(packed, p, r)) + (1,)
        if _irreducible_mod_p(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {r} over GF({p})")  # pragma: no cover


@lru_cache(maxsize=None)
def field(q, modulus=None):
    """FieldCtx for the field of order q (q = p^r <= 2^16), cached."""
    facs = _prime_factors(q)
    if len(facs) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = facs[0]
    r = 0
    m = q
    while m > 1:
        m //= p
        r += 1
    return FieldCtx(p, r, modulus)
