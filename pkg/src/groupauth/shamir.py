"""Threshold secret sharing: dealer-side share generation and reconstruction.

A dealer embeds the secret as the constant term of a random polynomial of
degree exactly t-1 and hands out one evaluation per shareholder. Any t or
more shares reconstruct the secret; t-1 or fewer leave every candidate
secret equally possible, which `brute_force_secret_candidates` verifies by
exhaustive enumeration at small moduli.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DuplicateAbscissaError,
    InsufficientSharesError,
    ModulusMismatchError,
    OracleScaleError,
)
from .field import FieldElement, FieldParams, random_element, random_nonzero
from .poly import Polynomial, SharePoint, interpolate_at_zero

_ORACLE_MAX_PRIME = 257
_ORACLE_MAX_CASES = 20_000_000


@dataclass(frozen=True, slots=True)
class DealerConfig:
    """Threshold t, shareholder count n, and the n public abscissas."""

    t: int
    n: int
    params: FieldParams
    abscissas: tuple[FieldElement, ...] = ()

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ValueError(f"threshold must be >= 2, got {self.t}")
        if not self.t < self.n:
            raise ValueError(f"need n > t, got t={self.t}, n={self.n}")
        if self.n > self.params.p - 1:
            raise ValueError(f"n={self.n} exceeds p-1={self.params.p - 1}")
        if not self.abscissas:
            object.__setattr__(
                self,
                "abscissas",
                tuple(self.params.element(i) for i in range(1, self.n + 1)),
            )
        if len(self.abscissas) != self.n:
            raise ValueError("need exactly n abscissas")
        seen = set()
        for x in self.abscissas:
            if x.params != self.params:
                raise ModulusMismatchError("abscissa from a different field")
            if x.value == 0:
                raise ValueError("abscissas must be nonzero")
            if x.value in seen:
                raise DuplicateAbscissaError(f"duplicate abscissa {x.value}")
            seen.add(x.value)


@dataclass(frozen=True, slots=True)
class ShareSet:
    """Dealt shares plus the dealer-private polynomial and secret.

    The polynomial is retained for test oracles only; user-facing code
    paths never read it.
    """

    shares: tuple[SharePoint, ...]
    secret_poly: Polynomial
    secret: FieldElement


def shares_from_polynomial(cfg: DealerConfig, poly: Polynomial) -> ShareSet:
    """Evaluate an explicit polynomial at the configured abscissas."""
    if poly.params != cfg.params:
        raise ModulusMismatchError("polynomial over a different field")
    shares = tuple(SharePoint(x, poly.eval_at(x)) for x in cfg.abscissas)
    return ShareSet(shares, poly, poly.eval_at(cfg.params.zero()))


def generate_shares(
    cfg: DealerConfig, secret: FieldElement, rng: random.Random
) -> ShareSet:
    """Deal `secret` under cfg with a fresh random polynomial.

    Middle coefficients are uniform; the leading coefficient is sampled
    from the nonzero residues so the dealt polynomial has degree t-1
    exactly and honest share sets always pass the consistency check.
    """
    if secret.params != cfg.params:
        raise ModulusMismatchError("secret from a different field")
    coeffs = [secret]
    coeffs += [random_element(rng, cfg.params) for _ in range(cfg.t - 2)]
    coeffs.append(random_nonzero(rng, cfg.params))
    return shares_from_polynomial(cfg, Polynomial(cfg.params, tuple(coeffs)))


def reconstruct_secret(shares: Sequence[SharePoint], t: int) -> FieldElement:
    """Secret from any t or more shares, via the Lagrange sum at zero."""
    if len(shares) < t:
        raise InsufficientSharesError(f"need at least t={t} shares, got {len(shares)}")
    return interpolate_at_zero(shares)


def brute_force_secret_histogram(
    shares: Sequence[SharePoint], t: int, params: FieldParams
) -> Counter:
    """Candidate secrets and their multiplicities, by exhaustive enumeration.

    Walks every coefficient vector (a_0, ..., a_{t-1}) in Z_p^t, keeps the
    polynomials consistent with the given below-threshold shares, and
    counts their constant terms. This is the secrecy oracle: it must stay
    a dumb enumeration, independent of the reconstruction code path.
    """
    if len(shares) > t - 1:
        raise ValueError(
            f"oracle applies to below-threshold sets: got {len(shares)} >= t={t}"
        )
    if params.p > _ORACLE_MAX_PRIME:
        raise OracleScaleError(f"oracle limited to p <= {_ORACLE_MAX_PRIME}")
    if params.p**t > _ORACLE_MAX_CASES:
        raise OracleScaleError(f"enumeration of p^t = {params.p**t} polynomials is too large")
    for s in shares:
        if s.params != params:
            raise ModulusMismatchError("share from a different field")
    p = params.p
    fixed = [(s.x.value, s.y.value) for s in shares]
    counts: Counter = Counter()
    for coeffs in itertools.product(range(p), repeat=t):
        ok = True
        for xv, yv in fixed:
            acc = 0
            for c in reversed(coeffs):
                acc = (acc * xv + c) % p
            if acc != yv:
                ok = False
                break
        if ok:
            counts[params.element(coeffs[0])] += 1
    return counts


def brute_force_secret_candidates(
    shares: Sequence[SharePoint], t: int, params: FieldParams
) -> set[FieldElement]:
    """Set of secrets still possible given at most t-1 shares."""
    return set(brute_force_secret_histogram(shares, t, params))
