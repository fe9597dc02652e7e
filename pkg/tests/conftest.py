"""Shared test helpers: brute-force oracles and descriptor samplers.

The oracles here deliberately avoid the library's own fast paths: codeword
enumeration walks the raw message space with plain tuples, hulls are found by
membership testing, and divisors/reciprocals are recomputed from first
principles.  Unit tests freeze expected values against these.
"""

from __future__ import annotations

import itertools
import random

from qclcd import Poly, RingCtx, field, inner_product
from qclcd.code import QcDescriptor, QcGenerator
from qclcd.polyring import all_divisors, poly_gcd


def enumerate_codewords(code):
    """All codewords as tuples, by brute force over the message space."""
    basis = code.basis()
    fld = code.field
    k = basis.nrows
    out = []
    for msg in itertools.product(range(fld.q), repeat=k):
        vec = [0] * code.length
        for m, row in zip(msg, basis.rows):
            if m:
                for j, c in enumerate(row):
                    vec[j] = fld.add(vec[j], fld.mul(m, c))
        out.append(tuple(vec))
    return out


def brute_hull_dim(code, kind):
    """log_q of the number of codewords orthogonal to every generator row."""
    fld = code.field
    rows = code.gen.rows
    members = [c for c in enumerate_codewords(code)
               if all(inner_product(list(c), r, kind, fld) == 0 for r in rows)]
    size = len(members)
    dim = 0
    while fld.q ** dim < size:
        dim += 1
    assert fld.q ** dim == size, "hull membership count is not a power of q"
    return dim


def span_vectors(matrix):
    """The row span as a set of tuples (small matrices only)."""
    fld = matrix.field
    out = {tuple([0] * matrix.ncols)}
    for row in matrix.rows:
        new = set()
        for v in out:
            for s in range(1, fld.q):
                new.add(tuple(fld.add(a, fld.mul(s, b)) for a, b in zip(v, row)))
        out |= new
    # close under addition
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in list(out):
                c = tuple(fld.add(x, y) for x, y in zip(a, b))
                if c not in out:
                    out.add(c)
                    changed = True
    return out


def random_full_rank_matrix(fld, k, n, rng):
    from qclcd import Matrix
    while True:
        m = Matrix(fld, [[rng.randrange(fld.q) for _ in range(n)] for _ in range(k)])
        if m.rank == k:
            return m


def effective_f_tuple(ring, g, ell, rng):
    """Random f-tuple with gcd(f_0, ..., f_{ell-1}, (x^n - 1)/g) = 1.

    Keeps sampled descriptors inside the polynomial construction's effective
    hypotheses: if every f shares an irreducible factor with (x^n - 1)/g the
    gcd condition fails even for codes whose hull is trivial.
    """
    fld = ring.field
    h = (ring.modulus // g).monic()
    while True:
        fs = [Poly(fld, [rng.randrange(fld.q) for _ in range(ring.n)])
              for _ in range(ell)]
        acc = None
        for f in fs:
            if not f.is_zero:
                acc = f if acc is None else poly_gcd(acc, f)
        if acc is None:
            continue
        if h.degree == 0 or poly_gcd(acc, h).degree == 0:
            return tuple(fs)


def sample_descriptor(rng, kind, h=1):
    """Random QC descriptor within the construction's effective hypotheses.

    Fields GF(2)/GF(3)/GF(4), n in {3,5,7,9,13,15} with gcd(n, p) = 1,
    ell in {2,3,4} (even for symplectic), g a random proper divisor of
    x^n - 1 shared by all h generators.
    """
    q = rng.choice([4] if kind == "hermitian" else [2, 3, 4])
    fld = field(q)
    n = rng.choice([m for m in (3, 5, 7, 9, 13, 15) if m % fld.p])
    ell = rng.choice([2, 4] if kind == "symplectic" else [2, 3, 4])
    ring = RingCtx(fld, n)
    divs = [d for d in all_divisors(ring) if d.degree < n]
    g = divs[rng.randrange(len(divs))]
    gens = tuple(QcGenerator(g, effective_f_tuple(ring, g, ell, rng))
                 for _ in range(h))
    return QcDescriptor(ring, ell, kind, gens)


def seeded(seed):
    return random.Random(seed)
