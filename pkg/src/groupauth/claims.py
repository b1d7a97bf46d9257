"""Security-claim verification suite.

Each claim pins one quantitative property of the scheme to its analytical
value: exact equality where exhaustive enumeration is feasible (p = 13),
4-sigma binomial bounds for seeded Monte Carlo at larger moduli, plus the
determinism and runtime regression guards. The CLI's verify-claims
command and the acceptance test module both run this list.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt

from .adversary import AdversaryKind, AdversarySpec, ForgeStrategy, colluders_forge_token
from .field import DEFAULT_PRIME, FieldParams, random_element
from .manager import GroupParams, GroupPublic, Token, setup_group
from .poly import (
    ConsistencyRule,
    Polynomial,
    SharePoint,
    check_strong_t_consistency,
    interpolate,
)
from .protocol import Participant
from .shamir import (
    DealerConfig,
    brute_force_secret_histogram,
    generate_shares,
    reconstruct_secret,
    shares_from_polynomial,
)
from .sim import (
    AdversarySeat,
    HonestSeat,
    ProtocolKind,
    Scenario,
    run_exhaustive,
    run_monte_carlo,
    run_scenario,
    spawn_rng,
)


@dataclass(frozen=True)
class ClaimResult:
    ident: str
    name: str
    passed: bool
    detail: str
    elapsed: float

    def format_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.ident}  {self.name}  [{self.elapsed:.2f}s]  {self.detail}"


def _mc_within(observed: float, target: float, trials: int) -> tuple[bool, float]:
    """4-sigma binomial bound around the analytical target rate."""
    bound = 4.0 * sqrt(target * (1.0 - target) / trials)
    return abs(observed - target) <= bound, bound


def claim_shamir_correctness() -> ClaimResult:
    """Every t-subset of dealt shares reconstructs the secret, 1000 configs at p=97."""
    start = time.perf_counter()
    params = FieldParams(97)
    rng = random.Random(0x5EED01)
    failures = 0
    checked = 0
    for _ in range(1000):
        t = rng.randint(2, 5)
        n = t + rng.randint(1, 3)
        cfg = DealerConfig(t, n, params)
        secret = random_element(rng, params)
        dealt = generate_shares(cfg, secret, rng)
        for subset in itertools.combinations(dealt.shares, t):
            checked += 1
            if reconstruct_secret(list(subset), t) != secret:
                failures += 1
    elapsed = time.perf_counter() - start
    passed = failures == 0 and elapsed < 5.0
    return ClaimResult(
        "criterion-1",
        "shamir correctness (every t-subset reconstructs)",
        passed,
        f"subsets checked={checked}, failures={failures}",
        elapsed,
    )


def claim_perfect_secrecy() -> ClaimResult:
    """Any t-1 shares leave all 13 secrets possible with equal multiplicity."""
    start = time.perf_counter()
    params = FieldParams(13)
    rng = random.Random(0x5EED02)
    all_secrets = {params.element(v) for v in range(13)}
    bad = []
    for t in (2, 3):
        n = t + 2
        cfg = DealerConfig(t, n, params)
        dealt = generate_shares(cfg, random_element(rng, params), rng)
        for subset in itertools.combinations(dealt.shares, t - 1):
            hist = brute_force_secret_histogram(list(subset), t, params)
            if set(hist) != all_secrets or len(set(hist.values())) != 1:
                bad.append((t, [s.x.value for s in subset]))
    elapsed = time.perf_counter() - start
    passed = not bad and elapsed < 10.0
    return ClaimResult(
        "criterion-2",
        "perfect secrecy below threshold (uniform brute-force candidates)",
        passed,
        f"violations={bad!r}" if bad else "all below-threshold subsets uniform over 13 secrets",
        elapsed,
    )


def claim_strong_t_consistency() -> ClaimResult:
    """Honest sets always consistent; a corrupted ordinate flips exactly 12/13 of values."""
    start = time.perf_counter()
    params = FieldParams(13)
    honest_failures = 0
    flip_counts_ok = True
    # t=2: every polynomial of degree exactly 1, sampled at x=1..4.
    xs = [params.element(x) for x in (1, 2, 3, 4)]
    for a1 in range(1, 13):
        for a0 in range(13):
            f = Polynomial.from_ints(params, [a0, a1])
            points = [SharePoint(x, f.eval_at(x)) for x in xs]
            if not check_strong_t_consistency(points, 2).consistent:
                honest_failures += 1
            for pos in range(len(points)):
                flips = 0
                for v in range(13):
                    mutated = list(points)
                    mutated[pos] = SharePoint(points[pos].x, params.element(v))
                    if not check_strong_t_consistency(mutated, 2).consistent:
                        flips += 1
                if flips != 12:
                    flip_counts_ok = False
    # t=3: all degree-exactly-2 polynomials, honest verdict only.
    xs3 = [params.element(x) for x in (1, 2, 3, 4, 5)]
    for a2 in range(1, 13):
        for a1 in range(13):
            for a0 in range(13):
                f = Polynomial.from_ints(params, [a0, a1, a2])
                points = [SharePoint(x, f.eval_at(x)) for x in xs3]
                if not check_strong_t_consistency(points, 3).consistent:
                    honest_failures += 1
    elapsed = time.perf_counter() - start
    passed = honest_failures == 0 and flip_counts_ok
    return ClaimResult(
        "criterion-3",
        "strong t-consistency (honest always; corruption flips at exactly 12/13)",
        passed,
        f"honest_failures={honest_failures}, corruption_rate_exact={flip_counts_ok}",
        elapsed,
    )


def _p1_forger_scenario(p: int, t: int, n: int, honest: int, forger_xs, seed: int, trials: int = 1) -> Scenario:
    roster = [HonestSeat(i) for i in range(1, honest + 1)]
    roster += [
        AdversarySeat(AdversarySpec(AdversaryKind.OUTSIDER_RANDOM, seat_x=x))
        for x in forger_xs
    ]
    return Scenario(
        group=GroupParams(t, n, FieldParams(p)),
        seed=seed,
        protocol=ProtocolKind.P1,
        roster=tuple(roster),
        trials=trials,
    )


def claim_theorem1_forgery_detection() -> ClaimResult:
    """P1 forgers accepted at exactly 1/p (exhaustive), 4-sigma at p=97."""
    start = time.perf_counter()
    details = []
    ok = True
    for k, forger_xs in ((1, (9,)), (2, (9, 11))):
        sc = _p1_forger_scenario(13, 2, 4, honest=2 + (2 - k) * 0, forger_xs=forger_xs, seed=101)
        report = run_exhaustive(sc)
        expected = Fraction(1, 13)
        if report.exact_rate != expected:
            ok = False
        details.append(f"k={k}: {report.exact_rate}")
    mc = run_monte_carlo(
        _p1_forger_scenario(97, 3, 6, honest=4, forger_xs=(20,), seed=202, trials=10_000)
    )
    within, bound = _mc_within(mc.accept_rate, 1 / 97, mc.cases)
    ok = ok and within
    details.append(f"p=97 mc rate={mc.accept_rate:.6f} target={1 / 97:.6f} bound={bound:.6f}")
    elapsed = time.perf_counter() - start
    passed = ok and elapsed < 30.0
    return ClaimResult(
        "criterion-4",
        "theorem 1: P1 forgery acceptance exactly 1/p",
        passed,
        "; ".join(details),
        elapsed,
    )


def claim_theorem2_consistency_detection() -> ClaimResult:
    """P2 honest rate exactly (p-1)/p; invalid token detected at exactly (p-1)/p."""
    start = time.perf_counter()
    params13 = FieldParams(13)
    details = []
    ok = True

    honest_sc = Scenario(
        group=GroupParams(2, 3, params13),
        seed=301,
        protocol=ProtocolKind.P2,
        roster=(HonestSeat(1), HonestSeat(2), HonestSeat(3)),
    )
    honest = run_exhaustive(honest_sc)
    ok = ok and honest.exact_rate == Fraction(12, 13)
    details.append(f"honest exhaustive={honest.exact_rate}")

    invalid_sc = Scenario(
        group=GroupParams(2, 4, params13),
        seed=302,
        protocol=ProtocolKind.P2,
        roster=(
            HonestSeat(1),
            HonestSeat(2),
            AdversarySeat(AdversarySpec(AdversaryKind.OUTSIDER_RANDOM, seat_x=9)),
        ),
    )
    invalid = run_exhaustive(invalid_sc)
    detection = 1 - invalid.exact_rate
    ok = ok and detection == Fraction(12, 13)
    details.append(f"invalid-token detection={detection}")

    mc = run_monte_carlo(
        Scenario(
            group=GroupParams(3, 6, FieldParams(97)),
            seed=303,
            protocol=ProtocolKind.P2,
            roster=tuple(HonestSeat(i) for i in range(1, 6)),
            trials=10_000,
        )
    )
    within, bound = _mc_within(mc.accept_rate, 96 / 97, mc.cases)
    ok = ok and within
    details.append(f"p=97 mc rate={mc.accept_rate:.6f} target={96 / 97:.6f} bound={bound:.6f}")
    elapsed = time.perf_counter() - start
    return ClaimResult(
        "criterion-5",
        "theorem 2: P2 honest rate and invalid-token detection exactly (p-1)/p",
        ok,
        "; ".join(details),
        elapsed,
    )


def claim_token_hiding() -> ClaimResult:
    """Masked broadcasts are exactly uniform and independent of the token value."""
    start = time.perf_counter()
    params = FieldParams(13)
    gp = GroupParams(2, 3, params)
    rng = random.Random(0x5EED06)
    state, commitment, tokens = setup_group(gp, rng)
    public = GroupPublic(gp, commitment)
    roster = [params.element(x) for x in (1, 2, 3)]
    fixed_mask_1 = Polynomial.from_ints(params, [rng.randrange(13), rng.randrange(13)])
    fixed_mask_3 = Polynomial.from_ints(params, [rng.randrange(13), rng.randrange(13)])
    histograms = {}
    for y in range(13):
        counts = [0] * 13
        for a0 in range(13):
            for a1 in range(13):
                seats = [
                    Token("u1", params.element(1), params.element(y)),
                    tokens[1],
                    tokens[2],
                ]
                masks = [fixed_mask_1, Polynomial.from_ints(params, [a0, a1]), fixed_mask_3]
                participants = [Participant(tok, public, roster) for tok in seats]
                subshares = []
                for pt, mask in zip(participants, masks):
                    subshares.extend(pt.p2_make_mask(None, mask))
                for pt in participants:
                    inbox = [m for m in subshares if m.to_x.value == pt.token.x.value]
                    reveal = pt.p2_masked_reveal(inbox)
                    if pt.token.x.value == 1:
                        counts[reveal.payload.value] += 1
        histograms[y] = tuple(counts)
    uniform = all(set(h) == {13} for h in histograms.values())
    identical = len(set(histograms.values())) == 1
    elapsed = time.perf_counter() - start
    return ClaimResult(
        "criterion-6",
        "token hiding: masked broadcast exactly uniform, identical for every token",
        uniform and identical,
        f"uniform={uniform}, identical_across_tokens={identical}",
        elapsed,
    )


def claim_collusion_bound() -> ClaimResult:
    """Forgery succeeds at exactly 1/13 below threshold and always at threshold."""
    start = time.perf_counter()
    params = FieldParams(13)
    t, n = 3, 6
    cfg = DealerConfig(t, n, params)
    rng = random.Random(0x5EED07)
    dealt = generate_shares(cfg, random_element(rng, params), rng)
    tokens = [Token(f"user-{i}", s.x, s.y) for i, s in enumerate(dealt.shares, start=1)]
    target_x = params.element(5)
    true_y = dealt.secret_poly.eval_at(target_x)
    ok = True
    details = []
    for k in (0, 1, 2):
        pool = [tok for tok in tokens if tok.x.value != 5][:k]
        for strategy in (ForgeStrategy.UNIFORM_GUESS, ForgeStrategy.INTERPOLATE_AVAILABLE):
            hits = 0
            for g in range(13):
                forged = colluders_forge_token(
                    pool, target_x, strategy, t, guess=params.element(g)
                )
                hits += forged.y == true_y
            if hits != 1:
                ok = False
            details.append(f"k={k},{strategy.value}: {hits}/13")
    pool = [tok for tok in tokens if tok.x.value != 5][:t]
    forged = colluders_forge_token(pool, target_x, ForgeStrategy.INTERPOLATE_AVAILABLE, t)
    exact = forged.y == true_y
    ok = ok and exact
    details.append(f"k={t} interpolate exact={exact}")
    elapsed = time.perf_counter() - start
    return ClaimResult(
        "criterion-7",
        "collusion bound: 1/13 below threshold, certain at threshold",
        ok,
        "; ".join(details),
        elapsed,
    )


def claim_homomorphism() -> ClaimResult:
    """Sum of interpolants equals interpolant of pointwise-summed shares."""
    start = time.perf_counter()
    params = FieldParams(97)
    rng = random.Random(0x5EED08)
    failures = 0
    for _ in range(1000):
        d1 = rng.randint(0, 5)
        d2 = rng.randint(0, 5)
        f = Polynomial.from_ints(params, [rng.randrange(97) for _ in range(d1 + 1)])
        g = Polynomial.from_ints(params, [rng.randrange(97) for _ in range(d2 + 1)])
        m = max(d1, d2) + 1
        xs = [params.element(x) for x in range(1, m + 1)]
        pf = [SharePoint(x, f.eval_at(x)) for x in xs]
        pg = [SharePoint(x, g.eval_at(x)) for x in xs]
        psum = [SharePoint(x, f.eval_at(x) + g.eval_at(x)) for x in xs]
        if interpolate(pf) + interpolate(pg) != interpolate(psum):
            failures += 1
    elapsed = time.perf_counter() - start
    return ClaimResult(
        "criterion-8",
        "secret sharing homomorphism over 1000 random pairs",
        failures == 0,
        f"failures={failures}/1000",
        elapsed,
    )


def claim_determinism() -> ClaimResult:
    """Identical (scenario, seed) pairs produce byte-identical transcripts."""
    start = time.perf_counter()
    params = FieldParams(13)
    scenarios = [
        Scenario(
            group=GroupParams(2, 3, params),
            seed=909,
            protocol=ProtocolKind.P2,
            roster=(HonestSeat(1), HonestSeat(2), HonestSeat(3)),
            trials=25,
        ),
        Scenario(
            group=GroupParams(2, 4, params),
            seed=909,
            protocol=ProtocolKind.P1,
            roster=(
                HonestSeat(1),
                HonestSeat(2),
                AdversarySeat(AdversarySpec(AdversaryKind.OUTSIDER_RANDOM, seat_x=7)),
            ),
            trials=25,
        ),
    ]
    ok = True
    for sc in scenarios:
        first = run_scenario(sc).to_bytes()
        second = run_scenario(sc).to_bytes()
        if first != second:
            ok = False
    elapsed = time.perf_counter() - start
    return ClaimResult(
        "criterion-9",
        "determinism: byte-identical transcripts under identical seeds",
        ok,
        "P1 and P2 transcripts reproduced byte-for-byte" if ok else "transcript mismatch",
        elapsed,
    )


def claim_round_performance() -> ClaimResult:
    """A full P2 round at j=50, t=10, p=2^61-1 completes in under 100 ms."""
    sc = Scenario(
        group=GroupParams(10, 60, FieldParams(DEFAULT_PRIME)),
        seed=111,
        protocol=ProtocolKind.P2,
        roster=tuple(HonestSeat(i) for i in range(1, 51)),
        trials=1,
    )
    start = time.perf_counter()
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        run_scenario(sc, record=False)
        best = min(best, time.perf_counter() - t0)
    elapsed = time.perf_counter() - start
    return ClaimResult(
        "criterion-10",
        "performance: full P2 round (j=50, t=10, 61-bit p) under 100 ms",
        best < 0.1,
        f"best of 3: {best * 1000:.1f} ms",
        elapsed,
    )


ALL_CLAIMS = (
    claim_shamir_correctness,
    claim_perfect_secrecy,
    claim_strong_t_consistency,
    claim_theorem1_forgery_detection,
    claim_theorem2_consistency_detection,
    claim_token_hiding,
    claim_collusion_bound,
    claim_homomorphism,
    claim_determinism,
    claim_round_performance,
)


def run_all_claims() -> list[ClaimResult]:
    return [claim() for claim in ALL_CLAIMS]
