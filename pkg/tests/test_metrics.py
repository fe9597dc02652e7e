import random
from collections import Counter

import pytest

from qclcd import field
from qclcd.cli import preset_descriptor
from qclcd.code import LinearCode, assemble_qc, dual_code
from qclcd.linalg import Matrix
from qclcd.metrics import (BudgetExceededError, MetricsError, distribution_prefix,
                           information_sets, min_distance_bz,
                           min_distance_exhaustive, weight, weight_distribution)

from conftest import enumerate_codewords, random_full_rank_matrix

GF2 = field(2)
GF3 = field(3)
GF4 = field(4)


def test_weight_examples():
    assert weight([1, 0, 1, 1]) == 3
    assert weight([1, 0, 0, 1], "symplectic") == 2
    assert weight([1, 0, 1, 0], "symplectic") == 1
    with pytest.raises(MetricsError):
        weight([1, 0, 1], "symplectic")
    with pytest.raises(MetricsError):
        weight([1], "manhattan")


def test_weight_inequalities():
    rng = random.Random(3)
    for _ in range(100):
        v = [rng.randrange(4) for _ in range(10)]
        ws = weight(v, "symplectic")
        wh = weight(v)
        assert ws <= wh <= 2 * ws


def brute_distribution(code, kind):
    return Counter(weight(list(c), kind) for c in enumerate_codewords(code))


def test_exhaustive_example1():
    code = assemble_qc(preset_descriptor("example1"))
    d, dist = min_distance_exhaustive(code)
    assert d == 12
    assert dist.prefix(16) == {0: 1, 12: 39, 13: 208, 14: 286, 15: 325, 16: 546}
    assert sum(dist.counts.values()) == 2 ** 13


def test_exhaustive_example3_symplectic():
    code = assemble_qc(preset_descriptor("example3"))
    d, dist = min_distance_exhaustive(code, "symplectic")
    assert d == 9
    assert dist.prefix(13) == {0: 1, 9: 448, 10: 1344, 11: 3906, 12: 9051, 13: 18753}


def test_exhaustive_repetition_code():
    for n in (5, 9):
        code = LinearCode(Matrix(GF2, [[1] * n]))
        d, _ = min_distance_exhaustive(code)
        assert d == n


def test_exhaustive_matches_brute_force():
    rng = random.Random(5)
    for fld in (GF2, GF3, GF4):
        for kind in ("hamming", "symplectic"):
            for _ in range(6):
                k = rng.randrange(1, 4)
                n = rng.choice([4, 6, 8])
                code = LinearCode(random_full_rank_matrix(fld, k, n, rng))
                dist = weight_distribution(code, kind)
                assert dist.counts == dict(brute_distribution(code, kind))
                assert dist.complete


def test_distribution_invariant_under_row_ops():
    rng = random.Random(7)
    code = LinearCode(random_full_rank_matrix(GF4, 4, 9, rng))
    # a different generator matrix for the same row space
    alt_rows = [list(code.gen.rows[0])] + [
        [GF4.add(a, b) for a, b in zip(code.gen.rows[i], code.gen.rows[i - 1])]
        for i in range(1, 4)]
    alt = LinearCode(Matrix(GF4, alt_rows))
    assert weight_distribution(code).counts == weight_distribution(alt).counts


def test_scalar_multiple_count_divisibility():
    rng = random.Random(9)
    for fld in (GF3, GF4):
        code = LinearCode(random_full_rank_matrix(fld, 3, 8, rng))
        for w, c in weight_distribution(code).counts.items():
            if w > 0:
                assert c % (fld.q - 1) == 0


def test_budget_exceeded_suggests_bz():
    code = assemble_qc(preset_descriptor("example1"))
    with pytest.raises(BudgetExceededError, match="Brouwer-Zimmermann"):
        weight_distribution(code, budget=100)


def test_zero_code_has_no_distance():
    code = LinearCode(Matrix.zeros(GF2, 1, 4))
    assert weight_distribution(code).counts == {0: 1}
    with pytest.raises(MetricsError):
        min_distance_exhaustive(code)
    with pytest.raises(MetricsError):
        min_distance_bz(code)


def test_information_sets_structure():
    code = assemble_qc(preset_descriptor("example1"))
    sets = information_sets(code)
    assert len(sets) >= 2
    seen = set()
    for s in sets:
        assert len(s.columns) == 13
        assert not (set(s.fresh) & seen)
        seen |= set(s.fresh)
        assert s.gap == 13 - len(s.fresh)
        # systematic: identity on the pivot columns
        for r, c in enumerate(s.columns):
            col = [s.rows[i][c] for i in range(13)]
            assert col == [1 if i == r else 0 for i in range(13)]


def test_bz_matches_exhaustive_random():
    rng = random.Random(11)
    for _ in range(40):
        fld = field(rng.choice([2, 4]))
        k = rng.randrange(1, 7)
        n = rng.randrange(max(4, k + 1), 16)
        code = LinearCode(random_full_rank_matrix(fld, k, n, rng))
        d_ex, _ = min_distance_exhaustive(code)
        assert min_distance_bz(code) == d_ex


def test_bz_example2():
    code = assemble_qc(preset_descriptor("example2"))
    assert min_distance_bz(code) == 12


def test_bz_symplectic_unsupported():
    code = assemble_qc(preset_descriptor("example3"))
    with pytest.raises(MetricsError):
        min_distance_bz(code, "symplectic")


def test_distribution_prefix_example1():
    code = assemble_qc(preset_descriptor("example1"))
    dist = distribution_prefix(code, wstar=16)
    assert dist.counts == {0: 1, 12: 39, 13: 208, 14: 286, 15: 325, 16: 546}
    assert not dist.complete


def test_distribution_prefix_zero_code():
    code = LinearCode(Matrix.zeros(GF2, 1, 4))
    assert distribution_prefix(code, wstar=2).counts == {0: 1}


def test_distribution_prefix_low_weight_path_matches_exhaustive():
    # force the multi-information-set counting path with a tiny budget and
    # compare against plain enumeration
    rng = random.Random(13)
    for fld in (GF2, GF4):
        for _ in range(6):
            k = 5 if fld is GF2 else 3
            n = rng.randrange(2 * k + 2, 2 * k + 6)
            code = LinearCode(random_full_rank_matrix(fld, k, n, rng))
            full = weight_distribution(code)
            for wstar in (3, 5):
                part = distribution_prefix(code, wstar=wstar, budget=1)
                assert part.counts == full.prefix(wstar), (fld.q, n, k, wstar)


def test_distribution_prefix_budget_error():
    rng = random.Random(17)
    code = LinearCode(random_full_rank_matrix(GF2, 6, 9, rng))
    # 9 columns cannot host two disjoint 6-column information sets
    with pytest.raises(BudgetExceededError):
        distribution_prefix(code, wstar=8, budget=1)
