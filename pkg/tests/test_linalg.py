import itertools
import random

import pytest

from qclcd import field
from qclcd.linalg import (LinalgError, Matrix, gram_matrix, inner_product,
                          rowspace_intersection_dim, stack)

from conftest import random_full_rank_matrix, span_vectors

GF2 = field(2)
GF3 = field(3)
GF4 = field(4)


def test_inner_product_examples():
    assert inner_product([1, 0], [0, 1], "euclidean", GF2) == 0
    assert inner_product([1, 0], [0, 1], "symplectic", GF2) == 1
    assert inner_product([2], [2], "hermitian", GF4) == 1   # w * w^2 = w^3


def test_inner_product_errors():
    with pytest.raises(LinalgError):
        inner_product([1], [1, 0], "euclidean", GF2)
    with pytest.raises(LinalgError):
        inner_product([1, 0, 1], [1, 0, 1], "symplectic", GF2)
    with pytest.raises(LinalgError):
        inner_product([1], [1], "hermitian", GF3)
    with pytest.raises(LinalgError):
        inner_product([1], [1], "nope", GF2)


def test_inner_product_structure():
    rng = random.Random(7)
    for fld in (GF2, GF3, GF4):
        for _ in range(40):
            L = 6
            x, y, z = ([rng.randrange(fld.q) for _ in range(L)] for _ in range(3))
            # additivity in each argument
            xy = [fld.add(a, b) for a, b in zip(x, y)]
            for kind in ("euclidean", "symplectic") + (("hermitian",) if fld is GF4 else ()):
                assert inner_product(xy, z, kind, fld) == fld.add(
                    inner_product(x, z, kind, fld), inner_product(y, z, kind, fld))
            assert inner_product(x, y, "euclidean", fld) == \
                inner_product(y, x, "euclidean", fld)
            assert inner_product(x, x, "symplectic", fld) == 0  # alternating
            if fld is GF4:
                assert inner_product(x, y, "hermitian", fld) == \
                    fld.conj(inner_product(y, x, "hermitian", fld))


def test_symplectic_alternating_exhaustive_short():
    for fld in (GF2, GF3):
        for x in itertools.product(range(fld.q), repeat=4):
            assert inner_product(list(x), list(x), "symplectic", fld) == 0


def test_rref_examples():
    ident = Matrix.identity(GF2, 3)
    red, rank, pivots = ident.rref()
    assert red == ident and rank == 3 and pivots == [0, 1, 2]
    z = Matrix.zeros(GF3, 2, 4)
    red, rank, pivots = z.rref()
    assert rank == 0 and pivots == [] and red == z
    m = Matrix(GF2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert m.rank == 2
    # oracle: the span of the three rows has 4 elements, so rank 2
    assert len(span_vectors(m)) == 4


def test_rref_column_order():
    m = Matrix(GF2, [[1, 1, 0], [0, 1, 1]])
    _, rank, pivots = m.rref(column_order=[2, 1, 0])
    assert rank == 2 and pivots[0] == 2


def test_rref_is_reduced():
    rng = random.Random(5)
    for fld in (GF2, GF3, GF4):
        for _ in range(20):
            m = Matrix(fld, [[rng.randrange(fld.q) for _ in range(7)]
                             for _ in range(4)])
            red, rank, pivots = m.rref()
            for r, pc in enumerate(pivots):
                col = [red.rows[i][pc] for i in range(m.nrows)]
                assert col == [1 if i == r else 0 for i in range(m.nrows)]
            assert span_vectors(red) == span_vectors(m)


def test_kernel_basis_examples():
    assert Matrix.identity(GF2, 3).kernel_basis().nrows == 0
    kb = Matrix(GF2, [[1, 1]]).kernel_basis()
    assert kb.rows == [[1, 1]]


def test_kernel_basis_properties():
    rng = random.Random(11)
    for fld in (GF2, GF3, GF4):
        for _ in range(20):
            nr, nc = rng.randrange(1, 5), rng.randrange(1, 8)
            m = Matrix(fld, [[rng.randrange(fld.q) for _ in range(nc)]
                             for _ in range(nr)])
            kb = m.kernel_basis()
            assert kb.nrows == nc - m.rank
            assert kb.rank == kb.nrows
            for row in m.rows:
                for krow in kb.rows:
                    assert inner_product(row, krow, "euclidean", fld) == 0


def test_rowspace_intersection_examples():
    i2 = Matrix.identity(GF2, 2)
    assert rowspace_intersection_dim(i2, i2) == 2
    assert rowspace_intersection_dim(Matrix(GF2, [[1, 0]]),
                                     Matrix(GF2, [[0, 1]])) == 0


@pytest.mark.parametrize("fld", [GF2, GF3, GF4])
def test_rowspace_intersection_vs_exhaustive(fld):
    rng = random.Random(fld.q)
    for _ in range(15):
        nc = rng.randrange(3, 7)
        a = Matrix(fld, [[rng.randrange(fld.q) for _ in range(nc)]
                         for _ in range(rng.randrange(1, 4))])
        b = Matrix(fld, [[rng.randrange(fld.q) for _ in range(nc)]
                         for _ in range(rng.randrange(1, 4))])
        inter = span_vectors(a) & span_vectors(b)
        dim = 0
        while fld.q ** dim < len(inter):
            dim += 1
        assert fld.q ** dim == len(inter)
        assert rowspace_intersection_dim(a, b) == dim
        assert stack(a, b).rank <= a.rank + b.rank


def test_rowspace_intersection_with_own_kernel():
    rng = random.Random(17)
    for _ in range(10):
        m = random_full_rank_matrix(GF2, 3, 6, rng)
        hull = rowspace_intersection_dim(m, m.kernel_basis())
        inter = span_vectors(m) & span_vectors(m.kernel_basis())
        assert 2 ** hull == len(inter)


def test_gram_matrix_examples():
    i2 = Matrix.identity(GF2, 2)
    assert gram_matrix(i2, "euclidean") == i2
    g = gram_matrix(Matrix(GF2, [[1, 1]]), "euclidean")
    assert g.rows == [[0]]


def test_matmul_transpose():
    a = Matrix(GF3, [[1, 2], [0, 1]])
    b = Matrix(GF3, [[2, 0], [1, 1]])
    assert a.matmul(b).rows == [[1, 2], [1, 1]]
    assert a.transpose().rows == [[1, 0], [2, 1]]
    with pytest.raises(LinalgError):
        a.matmul(Matrix(GF3, [[1, 1, 1]]))


def test_matrix_validation():
    with pytest.raises(LinalgError):
        Matrix(GF2, [[1, 0], [1]])
    with pytest.raises(LinalgError):
        Matrix(GF2, [])
    assert Matrix(GF2, [], ncols=4).rank == 0
