import random
from itertools import product

import pytest

from _oracles import box_oracle
from k3lattices.lattices import (
    Lattice,
    direct_sum,
    e8,
    hyperbolic_u,
    rank_one,
    reflection,
)
from k3lattices.linalg import IntMatrix
from k3lattices.roots import (
    in_cn,
    min_polarization_degree,
    minus_two_walls_through,
    short_vectors,
    verify_certificate,
)


def random_posdef(rng, rank):
    b = IntMatrix([[rng.randint(-2, 2) for _ in range(rank)] for _ in range(rank)])
    g = b @ b.transpose() + IntMatrix.diagonal([rng.randint(1, 3) for _ in range(rank)])
    return Lattice(rank, g)


def test_short_vectors_i2_norm1():
    lat = direct_sum(rank_one(1), rank_one(1))
    report = short_vectors(lat, 1)
    assert set(report.vectors) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert report.complete


def test_short_vectors_e8_240_roots():
    report = short_vectors(e8(), 2)
    assert report.count() == 240
    assert set(report.vectors) == box_oracle(e8(), 2)


def test_short_vectors_parity_empty():
    assert short_vectors(rank_one(2), 3).count() == 0


def test_short_vectors_negation_closed():
    rng = random.Random(7)
    for _ in range(10):
        lat = random_posdef(rng, rng.randint(1, 3))
        for norm in (1, 2, 4):
            vs = set(short_vectors(lat, norm).vectors)
            assert {tuple(-x for x in v) for v in vs} == vs
            assert len(vs) % 2 == 0


def test_short_vectors_vs_oracle_random():
    rng = random.Random(9)
    for _ in range(25):
        lat = random_posdef(rng, rng.randint(1, 4))
        norm = rng.randint(1, 12)
        assert set(short_vectors(lat, norm).vectors) == box_oracle(lat, norm)


def test_short_vectors_rejects_indefinite():
    with pytest.raises(ValueError):
        short_vectors(hyperbolic_u(), 2)


# ---------------------------------------------------------------------------
# walls


def test_walls_u_e_plus_f():
    u = hyperbolic_u()
    walls = minus_two_walls_through(u, (1, 1))
    assert set(walls) == {(1, -1), (-1, 1)}


def test_walls_rank_one_empty():
    assert minus_two_walls_through(rank_one(2), (1,)) == []


def test_walls_u_e_plus_2f_empty():
    assert minus_two_walls_through(hyperbolic_u(), (1, 2)) == []


def test_in_cn_u_examples():
    u = hyperbolic_u()
    assert in_cn(u, (1, 2))
    assert not in_cn(u, (1, 1))
    assert not in_cn(u, (1, -1))  # negative square
    assert in_cn(rank_one(2), (1,))


def test_in_cn_sign_and_isometry_invariance():
    lat = direct_sum(rank_one(2), rank_one(-2))
    s = reflection((0, 1), lat)
    rng = random.Random(13)
    for _ in range(40):
        v = (rng.randint(-5, 5), rng.randint(-5, 5))
        if v == (0, 0):
            continue
        flag = in_cn(lat, v)
        assert in_cn(lat, tuple(-x for x in v)) == flag
        assert in_cn(lat, s.apply(v)) == flag


# ---------------------------------------------------------------------------
# minimal polarization degree


def brute_min_degree(lat, norm_limit, box):
    best = None
    for vec in product(range(-box, box + 1), repeat=lat.rank):
        q = lat.norm(vec)
        if 0 < q <= norm_limit and in_cn(lat, vec):
            if best is None or q < best:
                best = q
    return best


def test_mindeg_rank_one_exhaustive():
    for d in (1, 4, 20):
        lat = rank_one(2 * d)
        res = min_polarization_degree(lat, norm_limit=2 * d, coeff_box=3)
        assert res.upper_bound == 2 * d
        assert res.exhaustive
        assert res.certificate in ((1,), (-1,))
        assert verify_certificate(lat, res.certificate, 2 * d)


def test_mindeg_u():
    res = min_polarization_degree(hyperbolic_u(), norm_limit=20, coeff_box=10)
    assert res.upper_bound == 4
    assert res.certificate == (1, 2)
    assert not res.exhaustive
    assert verify_certificate(hyperbolic_u(), res.certificate, 4)
    assert res.upper_bound == brute_min_degree(hyperbolic_u(), 20, 10)


def test_mindeg_2_minus_2():
    lat = direct_sum(rank_one(2), rank_one(-2))
    res = min_polarization_degree(lat, norm_limit=20, coeff_box=10)
    assert res.upper_bound == 6
    assert res.certificate == (2, 1)
    assert verify_certificate(lat, res.certificate, 6)
    assert res.upper_bound == brute_min_degree(lat, 20, 10)


def test_mindeg_monotone_in_limits():
    lat = direct_sum(rank_one(2), rank_one(-2))
    small = min_polarization_degree(lat, norm_limit=6, coeff_box=3)
    large = min_polarization_degree(lat, norm_limit=30, coeff_box=8)
    assert small.upper_bound is not None
    assert large.upper_bound <= small.upper_bound


def test_mindeg_parallel_matches_sequential():
    lat = direct_sum(rank_one(2), rank_one(-2))
    seq = min_polarization_degree(lat, norm_limit=20, coeff_box=6)
    par = min_polarization_degree(lat, norm_limit=20, coeff_box=6, jobs=2)
    assert (seq.upper_bound, seq.certificate) == (par.upper_bound, par.certificate)


def test_verify_certificate_rejections():
    u = hyperbolic_u()
    assert not verify_certificate(u, (1, 1), 2)  # wall exists
    assert not verify_certificate(u, (1, 2), 2)  # wrong degree
    assert not verify_certificate(u, (1, 2, 0), 4)  # wrong length
