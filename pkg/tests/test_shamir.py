"""Dealer, reconstruction, and brute-force secrecy oracle tests."""

import itertools
import random

import pytest

from groupauth.errors import (
    DuplicateAbscissaError,
    InsufficientSharesError,
    OracleScaleError,
)
from groupauth.field import FieldParams
from groupauth.poly import Polynomial, SharePoint, check_strong_t_consistency
from groupauth.shamir import (
    DealerConfig,
    brute_force_secret_candidates,
    brute_force_secret_histogram,
    generate_shares,
    reconstruct_secret,
    shares_from_polynomial,
)

F13 = FieldParams(13)


class ScriptedBits:
    """Stands in for random.Random; getrandbits pops scripted values."""

    def __init__(self, values):
        self.values = list(values)

    def getrandbits(self, _bits):
        return self.values.pop(0)


class TestDealerConfig:
    def test_default_abscissas_are_sequential(self):
        cfg = DealerConfig(2, 4, F13)
        assert [x.value for x in cfg.abscissas] == [1, 2, 3, 4]

    def test_validation(self):
        with pytest.raises(ValueError):
            DealerConfig(1, 3, F13)
        with pytest.raises(ValueError):
            DealerConfig(3, 3, F13)
        with pytest.raises(ValueError):
            DealerConfig(2, 13, F13)  # n > p - 1

    def test_custom_abscissas_checked(self):
        xs = tuple(F13.element(v) for v in (1, 5, 5))
        with pytest.raises(DuplicateAbscissaError):
            DealerConfig(2, 3, F13, xs)
        with pytest.raises(ValueError):
            DealerConfig(2, 3, F13, (F13.element(0), F13.element(1), F13.element(2)))


class TestGenerateShares:
    def test_forced_polynomial_worked_example(self):
        cfg = DealerConfig(2, 3, F13)
        dealt = shares_from_polynomial(cfg, Polynomial.from_ints(F13, [5, 3]))
        assert [(s.x.value, s.y.value) for s in dealt.shares] == [(1, 8), (2, 11), (3, 1)]
        assert dealt.secret.value == 5

    def test_scripted_rng_reproduces_worked_example(self):
        # t=2 samples only the leading coefficient; script it to 3.
        cfg = DealerConfig(2, 3, F13)
        dealt = generate_shares(cfg, F13.element(5), ScriptedBits([3]))
        assert [(s.x.value, s.y.value) for s in dealt.shares] == [(1, 8), (2, 11), (3, 1)]

    def test_zero_secret_reconstructs_to_zero(self):
        cfg = DealerConfig(3, 5, F13)
        dealt = generate_shares(cfg, F13.element(0), random.Random(4))
        for subset in itertools.combinations(dealt.shares, 3):
            assert reconstruct_secret(list(subset), 3).value == 0

    def test_dealt_polynomial_has_exact_degree(self):
        rng = random.Random(8)
        for t in (2, 3, 4):
            cfg = DealerConfig(t, t + 2, F13)
            for _ in range(30):
                dealt = generate_shares(cfg, F13.element(rng.randrange(13)), rng)
                assert dealt.secret_poly.degree == t - 1

    def test_full_share_set_is_strong_t_consistent(self):
        rng = random.Random(2)
        cfg = DealerConfig(2, 5, F13)
        for _ in range(30):
            dealt = generate_shares(cfg, F13.element(rng.randrange(13)), rng)
            assert check_strong_t_consistency(list(dealt.shares), 2).consistent


class TestReconstruct:
    def test_every_t_subset_agrees(self):
        cfg = DealerConfig(2, 3, F13)
        dealt = shares_from_polynomial(cfg, Polynomial.from_ints(F13, [5, 3]))
        for subset in itertools.combinations(dealt.shares, 2):
            assert reconstruct_secret(list(subset), 2).value == 5
        assert reconstruct_secret(list(dealt.shares), 2).value == 5

    def test_random_configs_reconstruct(self):
        params = FieldParams(97)
        rng = random.Random(6)
        for _ in range(50):
            t = rng.randint(2, 5)
            cfg = DealerConfig(t, t + rng.randint(1, 3), params)
            secret = params.element(rng.randrange(97))
            dealt = generate_shares(cfg, secret, rng)
            picked = rng.sample(dealt.shares, t)
            assert reconstruct_secret(picked, t) == secret

    def test_too_few_shares(self):
        cfg = DealerConfig(3, 5, F13)
        dealt = generate_shares(cfg, F13.element(7), random.Random(0))
        with pytest.raises(InsufficientSharesError):
            reconstruct_secret(list(dealt.shares[:2]), 3)

    def test_duplicate_shares_rejected(self):
        s = SharePoint(F13.element(1), F13.element(8))
        with pytest.raises(DuplicateAbscissaError):
            reconstruct_secret([s, s], 2)


class TestBruteForceOracle:
    def test_one_share_below_t2_leaves_everything_open(self):
        share = SharePoint(F13.element(1), F13.element(8))
        candidates = brute_force_secret_candidates([share], 2, F13)
        assert {c.value for c in candidates} == set(range(13))

    def test_no_shares_no_information(self):
        candidates = brute_force_secret_candidates([], 2, F13)
        assert {c.value for c in candidates} == set(range(13))

    def test_two_shares_of_a_quadratic_leave_everything_open(self):
        f = Polynomial.from_ints(F13, [7, 2, 5])
        shares = [SharePoint(F13.element(x), f.eval_at(F13.element(x))) for x in (1, 2)]
        candidates = brute_force_secret_candidates(shares, 3, F13)
        assert {c.value for c in candidates} == set(range(13))

    def test_multiplicities_uniform(self):
        share = SharePoint(F13.element(4), F13.element(2))
        hist = brute_force_secret_histogram([share], 2, F13)
        assert set(hist.values()) == {1}
        hist_empty = brute_force_secret_histogram([], 2, F13)
        assert set(hist_empty.values()) == {13}

    def test_threshold_sets_rejected(self):
        f = Polynomial.from_ints(F13, [5, 3])
        shares = [SharePoint(F13.element(x), f.eval_at(F13.element(x))) for x in (1, 2)]
        with pytest.raises(ValueError):
            brute_force_secret_candidates(shares, 2, F13)

    def test_large_prime_rejected(self):
        big = FieldParams(2**61 - 1)
        with pytest.raises(OracleScaleError):
            brute_force_secret_candidates([], 2, big)
