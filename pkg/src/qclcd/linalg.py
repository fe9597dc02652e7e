"""Dense linear algebra over GF(q).

Row reduction is deterministic: columns are processed left to right and the
first row with a nonzero entry becomes the pivot, so pivot columns (and hence
every derived quantity) are reproducible.
"""

from __future__ import annotations

KINDS = ("euclidean", "hermitian", "symplectic")


class LinalgError(ValueError):
    pass


def _check_kind(kind):
    if kind not in KINDS:
        raise LinalgError(f"unknown inner product kind {kind!r}")


def inner_product(x, y, kind, fld):
    """<x, y> under the chosen inner product; x, y are lists of field ints.

    euclidean: sum x_i y_i
    hermitian: sum x_i y_i^{q0} with q0 = sqrt(q)
    symplectic: sum_{i<N} (x_i y_{N+i} - x_{N+i} y_i), length 2N
    """
    _check_kind(kind)
    if len(x) != len(y):
        raise LinalgError(f"length mismatch {len(x)} != {len(y)}")
    acc = 0
    if kind == "euclidean":
        for a, b in zip(x, y):
            acc = fld.add(acc, fld.mul(a, b))
    elif kind == "hermitian":
        if fld.sqrt_order is None:
            raise LinalgError(f"hermitian inner product needs a square field order, got {fld.q}")
        for a, b in zip(x, y):
            acc = fld.add(acc, fld.mul(a, fld.conj(b)))
    else:
        if len(x) % 2:
            raise LinalgError("symplectic inner product needs even length")
        N = len(x) // 2
        for i in range(N):
            acc = fld.add(acc, fld.sub(fld.mul(x[i], y[N + i]), fld.mul(x[N + i], y[i])))
    return acc


class Matrix:
    """Row-major matrix over GF(q); rows are lists of field ints."""

    def __init__(self, fld, rows, ncols=None):
        self.field = fld
        self.rows = [list(r) for r in rows]
        if self.rows:
            ncols = len(self.rows[0])
            for r in self.rows:
                if len(r) != ncols:
                    raise LinalgError("ragged rows")
        elif ncols is None:
            raise LinalgError("ncols required for an empty matrix")
        self.ncols = ncols
        self.nrows = len(self.rows)
        self._rref = None

    @staticmethod
    def identity(fld, n):
        return Matrix(fld, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(fld, nrows, ncols):
        return Matrix(fld, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    def copy_rows(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over GF({self.field.q}))"

    # -- elimination ----------------------------------------------------------

    def rref(self, column_order=None):
        """(rref matrix, rank, pivot columns).

        ``column_order`` optionally reorders which columns are *eliminated
        first*; the returned matrix keeps the original column layout.
        """
        if column_order is None and self._rref is not None:
            return self._rref
        f = self.field
        rows = self.copy_rows()
        order = list(range(self.ncols)) if column_order is None else list(column_order)
        pivots = []
        r = 0
        for c in order:
            if r >= len(rows):
                break
            sel = None
            for i in range(r, len(rows)):
                if rows[i][c]:
                    sel = i
                    break
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = f.inv(rows[r][c])
            if inv != 1:
                rows[r] = [f.mul(inv, v) for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    m = rows[i][c]
                    ri, rr = rows[i], rows[r]
                    for j in range(self.ncols):
                        if rr[j]:
                            ri[j] = f.sub(ri[j], f.mul(m, rr[j]))
            pivots.append(c)
            r += 1
        result = (Matrix(f, rows, ncols=self.ncols), r, pivots)
        if column_order is None:
            self._rref = result
        return result

    @property
    def rank(self):
        return self.rref()[1]

    def row_basis(self):
        """Nonzero rows of the rref: a canonical basis of the row space."""
        red, rank, _ = self.rref()
        return Matrix(self.field, red.rows[:rank], ncols=self.ncols)

    def kernel_basis(self):
        """Rows form a basis of the right null space: self . result^T = 0."""
        f = self.field
        red, rank, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivset]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(red.rows[r][fc])
            basis.append(v)
        return Matrix(f, basis, ncols=self.ncols)

    def transpose(self):
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)]
                                   for j in range(self.ncols)], ncols=self.nrows)

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise LinalgError("shape mismatch")
        f = self.field
        out = []
        for row in self.rows:
            orow = [0] * other.ncols
            for k, a in enumerate(row):
                if a:
                    br = other.rows[k]
                    for j in range(other.ncols):
                        if br[j]:
                            orow[j] = f.add(orow[j], f.mul(a, br[j]))
            out.append(orow)
        return Matrix(f, out, ncols=other.ncols)

    def map_entries(self, fn):
        return Matrix(self.field, [[fn(v) for v in r] for r in self.rows], ncols=self.ncols)


def stack(a, b):
    if a.ncols != b.ncols:
        raise LinalgError("width mismatch")
    if a.field != b.field:
        raise LinalgError("field mismatch")
    return Matrix(a.field, a.rows + b.rows, ncols=a.ncols)


def rowspace_intersection_dim(a, b):
    """dim(rowspace(a) ∩ rowspace(b)) = rank a + rank b - rank stacked."""
    return a.rank + b.rank - stack(a, b).rank


def gram_matrix(g, kind):
    """Matrix of pairwise inner products of the rows of g."""
    _check_kind(kind)
    entries = [[inner_product(ri, rj, kind, g.field) for rj in g.rows] for ri in g.rows]
    return Matrix(g.field, entries, ncols=g.nrows)
