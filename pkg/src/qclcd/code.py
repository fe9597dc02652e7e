"""Cyclic and quasi-cyclic codes as explicit generator matrices.

Generator matrices are kept unreduced (h*n rows for an h-generator QC code);
the dimension is the rank, computed on demand.  Row order is deterministic:
generator i's rows precede generator i+1's, and within a block the shift
order is t = 0..n-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gf import FieldCtx, field as make_field
from .linalg import Matrix, inner_product
from .polyring import Poly, RingCtx, poly_conj, poly_mul_mod


class DescriptorError(ValueError):
    pass


def circulant(poly, ring):
    """n x n matrix whose row t is the coefficient vector of x^t * poly mod x^n - 1."""
    row = ring.coeff_vector(poly)
    n = ring.n
    rows = []
    for t in range(n):
        rows.append(row[n - t:] + row[:n - t])
    return Matrix(ring.field, rows, ncols=n)


class LinearCode:
    """A linear code presented by a (possibly redundant) generator matrix."""

    def __init__(self, gen):
        self.gen = gen
        self.field = gen.field
        self.length = gen.ncols

    @property
    def dim(self):
        return self.gen.rank

    def basis(self):
        return self.gen.row_basis()

    def __repr__(self):
        return f"[{self.length},{self.dim}]_{self.field.q} code"


def cyclic_code(g, ring):
    """Cyclic code of length n with generator polynomial g | x^n - 1."""
    if not (ring.modulus % g).is_zero:
        raise DescriptorError("g does not divide x^n - 1")
    return LinearCode(circulant(g, ring))


@dataclass(frozen=True)
class QcGenerator:
    g: Poly
    f: tuple


@dataclass(frozen=True)
class QcDescriptor:
    """Serializable identity of a quasi-cyclic code.

    ``generators`` holds h entries, each a QcGenerator with a divisor g of
    x^n - 1 and exactly ell polynomials f_0..f_{ell-1} (reduced mod x^n - 1).
    """

    ring: RingCtx
    ell: int
    kind: str
    generators: tuple

    def __post_init__(self):
        if self.kind not in ("euclidean", "hermitian", "symplectic"):
            raise DescriptorError(f"unknown inner product kind {self.kind!r}")
        if self.ell < 1:
            raise DescriptorError("index ell must be >= 1")
        if self.kind == "symplectic" and self.ell % 2:
            raise DescriptorError("symplectic codes need an even index ell")
        if self.kind == "hermitian" and self.ring.field.sqrt_order is None:
            raise DescriptorError(
                f"hermitian codes need a square field order, got {self.ring.field.q}")
        if not self.generators:
            raise DescriptorError("at least one generator required")
        mod = self.ring.modulus
        for gen in self.generators:
            if gen.g.is_zero or not (mod % gen.g).is_zero:
                raise DescriptorError("g does not divide x^n - 1")
            if len(gen.f) != self.ell:
                raise DescriptorError(
                    f"generator has {len(gen.f)} f-polynomials, expected ell={self.ell}")
            for fp in gen.f:
                if fp.degree >= self.ring.n:
                    raise DescriptorError("f polynomial not reduced mod x^n - 1")

    @property
    def h(self):
        return len(self.generators)

    @property
    def length(self):
        return self.ell * self.ring.n

    # -- JSON wire format -----------------------------------------------------

    def to_json_dict(self):
        return {
            "q": self.ring.field.q,
            "modulus": list(self.ring.field.modulus),
            "n": self.ring.n,
            "ell": self.ell,
            "kind": self.kind,
            "generators": [
                {"g": g.g.to_list(), "f": [fp.to_list() for fp in g.f]}
                for g in self.generators
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(doc):
        try:
            q = doc["q"]
            n = doc["n"]
            ell = doc["ell"]
            kind = doc["kind"]
            gens = doc["generators"]
        except (KeyError, TypeError) as exc:
            raise DescriptorError(f"descriptor missing field: {exc}") from exc
        fld = make_field(q, tuple(doc["modulus"]) if "modulus" in doc else None)
        ring = RingCtx(fld, n)
        out = []
        for entry in gens:
            g = Poly(fld, entry["g"])
            fs = tuple(Poly(fld, c) for c in entry["f"])
            out.append(QcGenerator(g, fs))
        return QcDescriptor(ring, ell, kind, tuple(out))

    @staticmethod
    def from_json(text):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"malformed descriptor JSON: {exc}") from exc
        return QcDescriptor.from_json_dict(doc)


def make_descriptor(q, n, ell, kind, generators, modulus=None):
    """Convenience constructor from integer coefficient lists."""
    fld = make_field(q, tuple(modulus) if modulus is not None else None)
    ring = RingCtx(fld, n)
    gens = []
    for g, fs in generators:
        gens.append(QcGenerator(Poly(fld, g), tuple(Poly(fld, f) for f in fs)))
    return QcDescriptor(ring, ell, kind, tuple(gens))


def assemble_qc(desc):
    """Generator matrix: block (i, j) = circulant of g_i * f_{i,j} mod x^n - 1."""
    ring = desc.ring
    rows = []
    for gen in desc.generators:
        blocks = [circulant(poly_mul_mod(gen.g, fp, ring), ring) for fp in gen.f]
        for t in range(ring.n):
            row = []
            for b in blocks:
                row.extend(b.rows[t])
            rows.append(row)
    return LinearCode(Matrix(ring.field, rows, ncols=desc.length))


def dual_code(code, kind):
    """The dual row space under the chosen inner product; dim = length - k."""
    fld = code.field
    g = code.basis()
    if kind == "euclidean":
        m = g
    elif kind == "hermitian":
        if fld.sqrt_order is None:
            raise DescriptorError(f"hermitian dual needs a square field order, got {fld.q}")
        # <u, v>_h = 0  <=>  sum u_i^{q0} v_i = 0
        m = g.map_entries(fld.conj)
    elif kind == "symplectic":
        if code.length % 2:
            raise DescriptorError("symplectic dual needs even length")
        N = code.length // 2
        # <u, v>_s = (u . Omega) . v with Omega = [[0, I], [-I, 0]]
        rows = [[fld.neg(c) for c in r[N:]] + r[:N] for r in g.rows]
        m = Matrix(fld, rows, ncols=code.length)
    else:
        raise DescriptorError(f"unknown inner product kind {kind!r}")
    return LinearCode(m.kernel_basis())


def shift_blockwise(vec, ell, n):
    """The QC shift: each of the ell length-n blocks cyclically shifted right."""
    out = []
    for b in range(ell):
        blk = vec[b * n:(b + 1) * n]
        out.extend([blk[-1]] + blk[:-1])
    return out
