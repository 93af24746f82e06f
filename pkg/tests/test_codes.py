"""Code constructions, the catalog, and exhaustive enumeration."""

import numpy as np
import pytest

from pwe.codes import (
    catalog,
    codewords_of_weight,
    contains,
    cyclic_code,
    encode,
    exact_weight_distribution,
    exhaustive_limit,
    extend_with_parity,
    extract_info,
    get_code,
    info_positions,
    iter_codewords,
    minimum_distance_exhaustive,
    qr_generator_polynomial,
    quadratic_residues,
    shorten,
)
from pwe.gf2 import BitWord, GF2Matrix, GF2Poly, poly_mod, rref, x_n_plus_1

HAMMING_WE = {0: 1, 3: 7, 4: 7, 7: 1}


def test_hamming_weight_distribution():
    wd = exact_weight_distribution(get_code("hamming-7-4"))
    assert wd.as_dict() == HAMMING_WE
    assert wd.total() == 2**4


def test_minimum_distances():
    assert minimum_distance_exhaustive(get_code("hamming-7-4")) == 3
    assert minimum_distance_exhaustive(get_code("golay-24-12")) == 8
    assert minimum_distance_exhaustive(get_code("qr-23-12")) == 7


def test_catalog_rank_and_membership():
    for name, code in catalog().items():
        G = GF2Matrix.from_rows(code.generator_matrix.rows, code.n)
        _, rank, _ = rref(G)
        assert rank == code.k, name
        for row in code.generator_matrix.rows:
            assert contains(code, BitWord(code.n, row)), name


def test_encode_extract_roundtrip():
    rng = np.random.default_rng(21)
    for name in ("hamming-7-4", "golay-24-12", "bch-127-50"):
        code = get_code(name)
        for _ in range(50):
            bits = rng.integers(0, 2, size=code.k, dtype=np.uint8)
            info = BitWord.from_bits(bits.tolist())
            word = encode(code, info)
            assert contains(code, word)
            assert extract_info(code, word) == info


def test_membership_rejects_non_codewords():
    code = get_code("hamming-7-4")
    members = set(iter_codewords(code))
    for value in range(2**7):
        assert contains(code, BitWord(7, value)) == (value in members)


def test_gray_enumeration_matches_naive():
    for name in ("hamming-7-4", "golay-24-12", "qr-23-12"):
        code = get_code(name)
        naive = {encode(code, BitWord(code.k, m)).value for m in range(2**code.k)}
        assert set(iter_codewords(code)) == naive


def test_weight_distribution_sums_to_2k():
    for name in ("hamming-7-4", "qr-23-12", "golay-24-12", "qr-47-24"):
        code = get_code(name)
        assert exact_weight_distribution(code).total() == 2**code.k


def test_no_weights_below_known_distance():
    for name in ("golay-24-12", "qr-23-12", "qr-47-24"):
        code = get_code(name)
        wd = exact_weight_distribution(code).as_dict()
        low = [w for w in wd if 0 < w < code.d_known]
        assert low == [], name


def test_codewords_of_weight_agrees_with_distribution():
    code = get_code("golay-24-12")
    wd = exact_weight_distribution(code)
    words = codewords_of_weight(code, 8)
    assert len(words) == wd[8] == 759
    assert all(BitWord(24, v).weight() == 8 for v in words)


def test_cyclic_code_requires_divisor():
    with pytest.raises(ValueError):
        cyclic_code(GF2Poly.from_exponents([0, 2]), 7)  # (1+x)^2 ∤ x^7+1


def test_cyclic_closure_under_rotation():
    code = get_code("qr-23-12")
    rng = np.random.default_rng(22)
    for _ in range(100):
        word = encode(code, BitWord(code.k, int(rng.integers(0, 2**code.k))))
        v = word.value
        rotated = ((v << 1) | (v >> (code.n - 1))) & ((1 << code.n) - 1)
        assert contains(code, BitWord(code.n, rotated))


def test_shortened_words_lift_into_parent():
    code = get_code("bch-130-66")
    parent, removed = code.parent
    assert parent.n - len(removed) == code.n
    rng = np.random.default_rng(23)
    removed_set = set(removed)
    kept = [p for p in range(parent.n) if p not in removed_set]
    for _ in range(200):
        bits = rng.integers(0, 2, size=code.k, dtype=np.uint8)
        word = encode(code, BitWord.from_bits(bits.tolist()))
        lifted = 0
        for src, dst in enumerate(kept):
            lifted |= word.bit(src) << dst
        assert contains(parent, BitWord(parent.n, lifted))


def test_shorten_dimensions():
    parent = get_code("qr-23-12")
    short = shorten(parent, 3)
    assert (short.n, short.k) == (20, 9)
    with pytest.raises(ValueError):
        shorten(parent, 12)


def test_extended_golay_from_qr23():
    qr = get_code("qr-23-12")
    ext = extend_with_parity(qr)
    assert (ext.n, ext.k) == (24, 12)
    wd = exact_weight_distribution(ext).as_dict()
    assert all(w % 2 == 0 for w in wd)
    assert wd == exact_weight_distribution(get_code("golay-24-12")).as_dict()


def test_quadratic_residues_mod_23():
    assert quadratic_residues(23) == {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18}


def test_qr_generator_polynomial_properties():
    for p, half in ((23, 11), (47, 23)):
        g = qr_generator_polynomial(p)
        assert g.degree == half
        assert poly_mod(x_n_plus_1(p), g).is_zero()


def test_bch_63_39_generator_constant():
    code = get_code("bch-63-39")
    g = code.generator_poly
    assert g.degree == 24
    assert poly_mod(x_n_plus_1(63), g).is_zero()


def test_info_positions_are_systematic():
    code = get_code("golay-24-12")
    pos = info_positions(code)
    assert len(pos) == code.k
    rng = np.random.default_rng(24)
    for _ in range(20):
        info = BitWord(code.k, int(rng.integers(0, 2**code.k)))
        word = encode(code, info)
        assert [word.bit(p) for p in pos] == info.bits()


def test_exhaustive_limit_env_override(monkeypatch):
    monkeypatch.setenv("PWE_EXHAUSTIVE_LIMIT", "12")
    assert exhaustive_limit() == 12
    with pytest.raises(ValueError):
        exact_weight_distribution(get_code("qr-47-24"))
    monkeypatch.delenv("PWE_EXHAUSTIVE_LIMIT")
    assert exhaustive_limit() == 26
