"""Bit-packed GF(2) words, polynomials, and matrices."""

import numpy as np
import pytest

from pwe.gf2 import (
    BitWord,
    GF2Matrix,
    GF2Poly,
    invert_permutation,
    parity_check_from_generator,
    permute_columns,
    permute_word,
    poly_divmod,
    poly_gcd,
    poly_mod,
    poly_mul,
    rref,
    systematic_form,
    x_n_plus_1,
)


def school_mul(a: int, b: int) -> int:
    """Carry-less schoolbook product used as an independent oracle."""
    acc = 0
    for i in range(b.bit_length()):
        if (b >> i) & 1:
            acc ^= a << i
    return acc


def test_bitword_roundtrips():
    w = BitWord.from_bits([1, 0, 1, 1, 0])
    assert w.length == 5
    assert w.bits() == [1, 0, 1, 1, 0]
    assert w.weight() == 3
    assert BitWord.from_support(5, [0, 2, 3]) == w
    assert BitWord.from_hex(5, w.to_hex()) == w


def test_bitword_index_bounds():
    w = BitWord(4, 0b1010)
    assert [w.bit(i) for i in range(4)] == [0, 1, 0, 1]
    with pytest.raises(IndexError):
        w.bit(4)
    with pytest.raises(IndexError):
        w.bit(-1)


def test_bitword_xor_requires_equal_length():
    with pytest.raises(ValueError):
        BitWord(4, 0b1010) ^ BitWord(5, 0b1)


def test_weight_xor_identity():
    rng = np.random.default_rng(11)
    for _ in range(300):
        a = BitWord(32, int(rng.integers(0, 1 << 32)))
        b = BitWord(32, int(rng.integers(0, 1 << 32)))
        assert (a ^ b).weight() == a.weight() + b.weight() - 2 * (a & b).weight()


def test_poly_squaring_in_characteristic_two():
    one_plus_x = GF2Poly.from_exponents([0, 1])
    assert poly_mul(one_plus_x, one_plus_x) == GF2Poly.from_exponents([0, 2])


def test_poly_mul_identity():
    g = GF2Poly.from_exponents([0, 3, 5, 9])
    assert poly_mul(g, GF2Poly.one()) == g


def test_hamming_generator_divides_x7_plus_1():
    g = GF2Poly.from_exponents([0, 1, 3])
    h = GF2Poly.from_exponents([0, 1, 2, 4])
    assert poly_mul(g, h) == GF2Poly.from_exponents([0, 7])
    assert poly_mod(x_n_plus_1(7), g).is_zero()


def test_poly_mul_against_schoolbook_oracle():
    rng = np.random.default_rng(12)
    for _ in range(200):
        a = int(rng.integers(0, 1 << 24))
        b = int(rng.integers(0, 1 << 24))
        assert poly_mul(GF2Poly(a), GF2Poly(b)).value == school_mul(a, b)


def test_divmod_recomposition_and_degree():
    rng = np.random.default_rng(13)
    for _ in range(200):
        a = GF2Poly(int(rng.integers(0, 1 << 30)))
        b = GF2Poly(int(rng.integers(1, 1 << 15)))
        q, r = poly_divmod(a, b)
        assert (poly_mul(q, b) + r) == a
        assert r.is_zero() or r.degree < b.degree
    g = GF2Poly.from_exponents([0, 2, 5])
    assert poly_divmod(g, g)[1].is_zero()


def test_divmod_rejects_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(GF2Poly.one(), GF2Poly.zero())


def test_gcd_divides_both_arguments():
    rng = np.random.default_rng(14)
    for _ in range(200):
        a = GF2Poly(int(rng.integers(1, 1 << 20)))
        b = GF2Poly(int(rng.integers(1, 1 << 20)))
        g = poly_gcd(a, b)
        assert poly_mod(a, g).is_zero()
        assert poly_mod(b, g).is_zero()


def test_zero_polynomial_degree_is_none():
    assert GF2Poly.zero().degree is None
    assert GF2Poly.one().degree == 0


def test_rref_idempotence_and_rank():
    rng = np.random.default_rng(15)
    for _ in range(50):
        M = GF2Matrix.from_rows(
            [int(rng.integers(0, 1 << 10)) for _ in range(6)], 10)
        R, rank, pivots = rref(M)
        R2, rank2, pivots2 = rref(R)
        assert R2 == R and rank2 == rank and pivots2 == pivots
        assert rank <= min(6, 10)
        assert len(pivots) == rank


def test_permutation_roundtrip():
    rng = np.random.default_rng(16)
    perm = list(rng.permutation(12))
    inv = invert_permutation(perm)
    value = int(rng.integers(0, 1 << 12))
    assert permute_word(permute_word(value, perm), inv) == value
    M = GF2Matrix.from_rows([int(rng.integers(0, 1 << 12)) for _ in range(4)], 12)
    assert permute_columns(permute_columns(M, perm), inv) == M


def test_systematic_form_and_parity_check():
    rng = np.random.default_rng(17)
    M = GF2Matrix.from_bit_lists([
        [1, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 1, 1, 0, 0],
        [0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 0, 1, 1],
    ])
    G_sys, perm = systematic_form(M)
    # Identity block on the first k columns.
    for i in range(4):
        for j in range(4):
            assert G_sys.entry(i, j) == (1 if i == j else 0)
    H = parity_check_from_generator(G_sys)
    for i in range(4):
        assert H.syndrome(G_sys.rows[i]) == 0
    # Random combinations of rows stay in the kernel of H.
    for _ in range(100):
        mask = int(rng.integers(0, 16))
        word = 0
        for i in range(4):
            if (mask >> i) & 1:
                word ^= G_sys.rows[i]
        assert H.syndrome(word) == 0
