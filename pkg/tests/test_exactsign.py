import math

import mpmath as mp
import numpy as np
import pytest

from uhspath.exactsign import (
    NEG,
    POS,
    ZERO,
    cyclotomic_coeffs,
    im_is_zero,
    im_sign,
    re_is_zero,
    re_sign,
    sum_is_zero,
)


def float_im(symbols):
    w = len(symbols)
    return sum(x * math.sin(2 * math.pi * (i + 1) / w) for i, x in enumerate(symbols))


def float_re(symbols):
    w = len(symbols)
    return sum(x * math.cos(2 * math.pi * (i + 1) / w) for i, x in enumerate(symbols))


def mp_im(symbols, dps=200):
    with mp.workdps(dps):
        w = len(symbols)
        return mp.fsum(x * mp.sin(2 * mp.pi * (i + 1) / w) for i, x in enumerate(symbols))


class TestCyclotomic:
    def test_small_polynomials(self):
        assert cyclotomic_coeffs(1) == (-1, 1)
        assert cyclotomic_coeffs(2) == (1, 1)
        assert cyclotomic_coeffs(4) == (1, 0, 1)
        assert cyclotomic_coeffs(6) == (1, -1, 1)
        assert cyclotomic_coeffs(12) == (1, 0, -1, 0, 1)

    def test_degree_is_totient(self):
        from uhspath.core import _totient

        for w in range(1, 40):
            assert len(cyclotomic_coeffs(w)) - 1 == _totient(w)


class TestZeroDecisions:
    def test_examples(self):
        # "01": zeta^2 = 1 at w=2, real -> Im == 0
        assert im_is_zero([0, 1])
        # "1000" at w=4: value is zeta = i, purely imaginary
        assert not im_is_zero([1, 0, 0, 0])
        assert re_is_zero([1, 0, 0, 0])
        # "0001" at w=4: value is zeta^4 = 1
        assert im_is_zero([0, 0, 0, 1])
        assert not re_is_zero([0, 0, 0, 1])
        assert not sum_is_zero([0, 0, 0, 1])

    def test_constant_words_sum_to_zero(self):
        for w in (2, 3, 5, 8, 12):
            assert sum_is_zero([1] * w)
            assert im_is_zero([1] * w)
            assert re_is_zero([1] * w)

    def test_period_two_words(self):
        # "1010...": sum of even powers of zeta over w/2 values -> 0 when w even
        for w in (4, 6, 10):
            word = [1, 0] * (w // 2)
            assert sum_is_zero(word)

    @pytest.mark.parametrize("w", [3, 4, 5, 6, 7, 8, 9, 12, 15, 16])
    def test_agrees_with_high_precision(self, w):
        rng = np.random.default_rng(w)
        for _ in range(60):
            word = rng.integers(0, 4, size=w).tolist()
            im = mp_im(word)
            if im_is_zero(word):
                assert abs(im) < mp.mpf(10) ** -150
            else:
                assert abs(im) > mp.mpf(10) ** -150


class TestCertifiedSigns:
    @pytest.mark.parametrize("w", [4, 7, 12, 20])
    def test_matches_float_away_from_zero(self, w):
        rng = np.random.default_rng(w + 100)
        for _ in range(50):
            word = rng.integers(0, 4, size=w).tolist()
            fi, fr = float_im(word), float_re(word)
            si = im_sign(word, fi, 4)
            sr = re_sign(word, fr, 4)
            hi, hr = mp_im(word), mp_im([0] + word[:-1])  # placeholder for re
            assert si == (0 if im_is_zero(word) else (1 if hi > 0 else -1))
            if abs(fr) > 1e-9:
                assert sr == (1 if fr > 0 else -1)

    def test_borderline_zero(self):
        word = [0, 1]  # exactly real
        assert im_sign(word, 0.0, 2) == ZERO
        assert re_sign(word, 1.0, 2) == POS

    def test_borderline_nonzero_near_float_zero(self):
        # w=12: zeta + zeta^5 + zeta^7 + zeta^11 = 0 exactly; perturb one term
        w = 12
        base = [0] * w
        for e in (1, 5, 7, 11):
            base[e - 1] = 1
        assert sum_is_zero(base)
        assert im_is_zero(base)
        # doubling one imaginary contribution breaks the cancellation
        tweak = list(base)
        tweak[0] = 2
        fi = float_im(tweak)
        assert im_sign(tweak, fi, 2) == (POS if mp_im(tweak) > 0 else NEG)

    def test_tiny_float_handed_in_gets_corrected(self):
        # pass a dishonest approx of 0.0; certification must still resolve it
        word = [1, 0, 0, 0]  # Im = 1 at w=4
        assert im_sign(word, 0.0, 2) == POS
        word = [0, 0, 1, 0]  # zeta^3 = -i
        assert im_sign(word, 0.0, 2) == NEG
