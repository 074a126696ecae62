import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3lattices.linalg import (
    IntMatrix,
    bezout_combination,
    content,
    det_exact,
    isqrt_floor_frac,
    ldlt,
    rational_kernel,
    signature,
    smith_normal_form,
    unimodular_inverse,
)


# ---------------------------------------------------------------------------
# independent oracles


def det_oracle(m: IntMatrix) -> int:
    """Cofactor expansion; exponential but independent of Bareiss."""
    n = m.rows
    if n == 0:
        return 1
    if n == 1:
        return m[0, 0]
    total = 0
    rest = [list(m.row(i)) for i in range(1, n)]
    for j in range(n):
        if m[0, j] == 0:
            continue
        minor = IntMatrix([row[:j] + row[j + 1:] for row in rest])
        total += (-1) ** j * m[0, j] * det_oracle(minor)
    return total


def char_poly(m: IntMatrix) -> list[int]:
    """Coefficients of det(xI - m), ascending, via Faddeev-LeVerrier."""
    n = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    prev = IntMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ prev
        trace = sum(mk[i, i] for i in range(n))
        c = -trace // k
        coeffs[n - k] = c
        prev = mk + IntMatrix([[c if i == j else 0 for j in range(n)] for i in range(n)])
    return coeffs


def signature_oracle(gram: IntMatrix) -> tuple[int, int, int]:
    """Descartes count on the exact characteristic polynomial.

    A symmetric matrix has all-real eigenvalues, so sign variations of p(x)
    count positive roots exactly and variations of p(-x) count negatives.
    """
    coeffs = char_poly(gram)
    zero = 0
    while coeffs[zero] == 0:
        zero += 1
    trimmed = coeffs[zero:]

    def variations(cs):
        signs = [c for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))

    pos = variations(trimmed)
    neg = variations([c * (-1) ** i for i, c in enumerate(trimmed)])
    return pos, neg, zero


def random_matrix(rng, rows, cols, bound=5):
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


def random_unimodular(rng, n, steps=12):
    m = IntMatrix.identity(n).tolists()
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        q = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += q * m[j][k]
    return IntMatrix(m)


GRAM_U = IntMatrix([[0, 1], [1, 0]])

GRAM_E8 = IntMatrix(
    [
        [2, 0, -1, 0, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, 0, -1, 2],
    ]
)


# ---------------------------------------------------------------------------
# smith normal form


def assert_snf_valid(m: IntMatrix):
    snf = smith_normal_form(m)
    assert snf.u @ m @ snf.v == snf.d
    assert det_exact(snf.u) in (1, -1)
    assert det_exact(snf.v) in (1, -1)
    diag = [snf.d[i, i] for i in range(min(m.rows, m.cols))]
    for i in range(m.rows):
        for j in range(m.cols):
            if i != j:
                assert snf.d[i, j] == 0
    nonzero = [x for x in diag if x != 0]
    assert all(x > 0 for x in nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # zeros come after the nonzero chain
    assert diag == nonzero + [0] * (len(diag) - len(nonzero))
    return snf


def test_snf_identity():
    snf = smith_normal_form(IntMatrix.identity(3))
    assert snf.d == IntMatrix.identity(3)


def test_snf_already_diagonal():
    snf = assert_snf_valid(IntMatrix([[2, 0], [0, 4]]))
    assert snf.d == IntMatrix.diagonal([2, 4])


def test_snf_offdiagonal():
    snf = assert_snf_valid(IntMatrix([[0, 1], [1, 0]]))
    assert snf.d == IntMatrix.identity(2)


def test_snf_rectangular_and_random():
    rng = random.Random(7)
    for _ in range(60):
        rows, cols = rng.randint(0, 5), rng.randint(0, 5)
        assert_snf_valid(random_matrix(rng, rows, cols))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-30, 30), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_property(entries):
    assert_snf_valid(IntMatrix(entries))


# ---------------------------------------------------------------------------
# determinants


def test_det_identity():
    assert det_exact(IntMatrix.identity(4)) == 1


def test_det_u():
    assert det_exact(GRAM_U) == det_oracle(GRAM_U) == -1


def test_det_e8():
    assert det_exact(GRAM_E8) == det_oracle(GRAM_E8) == 1


def test_det_random_vs_oracle():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n, n)
        assert det_exact(m) == det_oracle(m)


def test_det_congruence_invariant():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(1, 5)
        g = random_matrix(rng, n, n)
        g = IntMatrix([[g[i, j] + g[j, i] for j in range(n)] for i in range(n)])
        w = random_unimodular(rng, n)
        assert det_exact(w @ g @ w.transpose()) == det_exact(g)


def test_det_non_square_rejected():
    with pytest.raises(ValueError):
        det_exact(IntMatrix([[1, 2]]))


# ---------------------------------------------------------------------------
# signature


def test_signature_u():
    assert signature(GRAM_U) == (1, 1, 0)


def test_signature_zero_block():
    assert signature(IntMatrix.zero(2, 2)) == (0, 0, 2)


def test_signature_e8():
    assert signature(GRAM_E8) == (8, 0, 0)


def test_signature_requires_symmetric():
    with pytest.raises(ValueError):
        signature(IntMatrix([[0, 1], [2, 0]]))


def test_signature_vs_charpoly_oracle():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n, n, bound=4)
        g = IntMatrix([[m[i, j] + m[j, i] for j in range(n)] for i in range(n)])
        assert signature(g) == signature_oracle(g)


def test_signature_congruence_invariant():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n, n, bound=4)
        g = IntMatrix([[m[i, j] + m[j, i] for j in range(n)] for i in range(n)])
        w = random_unimodular(rng, n)
        p, q, z = signature(g)
        assert p + q + z == n
        assert signature(w @ g @ w.transpose()) == (p, q, z)


# ---------------------------------------------------------------------------
# kernels


def test_kernel_identity_empty():
    assert rational_kernel(IntMatrix.identity(3)) == []


def test_kernel_row():
    basis = rational_kernel(IntMatrix([[1, 1]]))
    assert len(basis) == 1
    assert basis[0] in ((1, -1), (-1, 1))


def test_kernel_saturated():
    basis = rational_kernel(IntMatrix([[2, 4]]))
    assert len(basis) == 1
    v = basis[0]
    assert 2 * v[0] + 4 * v[1] == 0
    assert content(v) == 1
    snf = smith_normal_form(IntMatrix([[v[0]], [v[1]]]))
    assert snf.invariant_factors() == [1]


def test_kernel_random_annihilation_and_primitivity():
    rng = random.Random(23)
    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 5)
        m = random_matrix(rng, rows, cols)
        basis = rational_kernel(m)
        snf = smith_normal_form(m)
        rank = len(snf.invariant_factors())
        assert len(basis) == cols - rank
        for v in basis:
            assert all(x == 0 for x in m.apply(v))
            assert content(v) == 1


# ---------------------------------------------------------------------------
# helpers


def test_unimodular_inverse_roundtrip():
    rng = random.Random(29)
    for _ in range(20):
        n = rng.randint(1, 5)
        w = random_unimodular(rng, n)
        assert w @ unimodular_inverse(w) == IntMatrix.identity(n)


def test_bezout_combination():
    rng = random.Random(31)
    for _ in range(50):
        vec = [rng.randint(-40, 40) for _ in range(rng.randint(1, 5))]
        g, coeffs = bezout_combination(vec)
        assert g == content(vec)
        assert sum(c * x for c, x in zip(coeffs, vec)) == g


def test_ldlt_reconstructs():
    rng = random.Random(37)
    for _ in range(20):
        n = rng.randint(1, 4)
        b = random_matrix(rng, n, n, bound=3)
        g = b @ b.transpose() + IntMatrix.diagonal([1] * n)  # positive definite
        lower, diag = ldlt(g)
        for i in range(n):
            for j in range(n):
                val = sum(diag[k] * lower[i][k] * lower[j][k] for k in range(n))
                assert val == g[i, j]


def test_isqrt_floor_frac():
    assert isqrt_floor_frac(Fraction(9, 2)) == 2
    assert isqrt_floor_frac(Fraction(1, 2)) == 0
    assert isqrt_floor_frac(Fraction(4)) == 2
    assert isqrt_floor_frac(Fraction(0)) == 0
