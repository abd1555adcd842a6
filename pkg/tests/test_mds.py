from itertools import combinations

import numpy as np
import pytest

from sncindex import mds, snc


def side_of(graph, x, k):
    return {j: int(x[j]) for j in graph.known[k]}


def test_build_examples():
    spec = mds.build_mds(snc.SncInstance(20, 9, 2))
    assert spec.pf.p == 23 and spec.n == 9
    clique = mds.build_mds(snc.SncInstance(5, 3, 1))
    assert clique.pf.p == 5 and clique.n == 1
    small = mds.build_mds(snc.SncInstance(4, 1, 0))
    assert small.pf.p == 5 and small.n == 3


def test_generator_entries_power_convention():
    spec = mds.build_mds(snc.SncInstance(4, 1, 0))
    # row i holds successive powers of i, with 0**0 == 1
    assert spec.generator.tolist() == [
        [1, 0, 0],
        [1, 1, 1],
        [1, 2, 4],
        [1, 3, 4],
    ]


def test_encode_zero_and_known_value():
    spec = mds.build_mds(snc.SncInstance(3, 1, 0))
    assert spec.pf.p == 3 and spec.n == 2
    assert mds.mds_encode(spec, [0, 0, 0]).tolist() == [0, 0]
    assert mds.mds_encode(spec, [1, 0, 0]).tolist() == [1, 0]


def test_encode_linearity():
    spec = mds.build_mds(snc.SncInstance(7, 2, 1))
    p = spec.pf.p
    rng = np.random.default_rng(31)
    for _ in range(10):
        x1 = rng.integers(0, p, size=7)
        x2 = rng.integers(0, p, size=7)
        lhs = mds.mds_encode(spec, (x1 + x2) % p)
        rhs = (mds.mds_encode(spec, x1) + mds.mds_encode(spec, x2)) % p
        assert (lhs == rhs).all()


def test_encode_rejects_out_of_field():
    spec = mds.build_mds(snc.SncInstance(3, 1, 0))
    with pytest.raises(ValueError):
        mds.mds_encode(spec, [0, 3, 0])


def test_decode_round_trip_small():
    rng = np.random.default_rng(37)
    for k, d, u in [(4, 1, 0), (6, 2, 1), (9, 4, 2), (5, 3, 1)]:
        inst = snc.SncInstance(k, d, u)
        spec = mds.build_mds(inst)
        for _ in range(10):
            x = rng.integers(0, spec.pf.p, size=k)
            c = mds.mds_encode(spec, x)
            for rec in range(k):
                assert mds.mds_decode(spec, rec, c, side_of(spec.graph, x, rec)) == x[rec]


def test_decode_clique_case_is_subtraction():
    inst = snc.SncInstance(5, 3, 1)
    spec = mds.build_mds(inst)
    x = np.array([3, 1, 4, 0, 2], dtype=np.int64)
    c = mds.mds_encode(spec, x)
    assert spec.n == 1
    assert c[0] == x.sum() % 5
    assert mds.mds_decode(spec, 2, c, side_of(spec.graph, x, 2)) == 4


def test_every_row_subset_invertible():
    inst = snc.SncInstance(12, 5, 3)
    spec = mds.build_mds(inst)
    assert spec.n == 4
    for rows in combinations(range(12), spec.n):
        assert spec.pf.rank(spec.generator[list(rows)]) == spec.n


def test_decodable_over_prime_field():
    # e_k within the span of generator columns plus side-info indicators
    inst = snc.SncInstance(6, 2, 1)
    spec = mds.build_mds(inst)
    p = spec.pf
    for k in range(6):
        cols = [spec.generator[:, t] for t in range(spec.n)]
        cols += [np.eye(6, dtype=np.int64)[j] for j in spec.graph.known[k]]
        stacked = np.array(cols).T % p.p
        with_target = np.concatenate(
            [stacked, np.eye(6, dtype=np.int64)[k][:, None]], axis=1
        )
        assert p.rank(stacked) == p.rank(with_target)


def test_compare_lengths_examples():
    assert mds.compare_lengths(snc.SncInstance(20, 9, 2)) == mds.LengthComparison(5, 9, "air", 5)
    assert mds.compare_lengths(snc.SncInstance(10, 2, 1)) == mds.LengthComparison(5, 7, "air", 5)
    assert mds.compare_lengths(snc.SncInstance(6, 2, 2)) == mds.LengthComparison(2, 2, "air", 2)


def test_compare_lengths_rejects_full_side_info():
    with pytest.raises(snc.FullSideInfo):
        mds.compare_lengths(snc.SncInstance(5, 3, 1))
