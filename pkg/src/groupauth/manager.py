"""Group manager: registration, token issuance, and the published commitment.

The manager plays the trusted dealer. At setup it draws a group secret,
deals one token (a share of the secret polynomial) per user, and publishes
a one-way commitment to the secret. The manager's private state never
flows into user-role code; `verify_token` exists as a test oracle only.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .field import FieldElement, FieldParams, random_element
from .poly import Polynomial
from .shamir import DealerConfig, generate_shares

# Domain separation prefix for the commitment preimage. The preimage is
# this ASCII tag, then p and the secret as 8-byte big-endian integers.
_HASH_TAG = b"GAS-v1:"

_SUPPORTED_HASHES = ("sha256",)


@dataclass(frozen=True, slots=True)
class GroupParams:
    """Public group configuration: threshold, size, field, and hash choice."""

    t: int
    n: int
    params: FieldParams
    hash_id: str = "sha256"

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ValueError(f"threshold must be >= 2, got {self.t}")
        if not self.t < self.n:
            raise ValueError(f"need n > t, got t={self.t}, n={self.n}")
        if self.n > self.params.p - 1:
            raise ValueError(f"n={self.n} exceeds p-1={self.params.p - 1}")
        if self.hash_id not in _SUPPORTED_HASHES:
            raise ValueError(f"unsupported hash {self.hash_id!r}")


@dataclass(frozen=True, slots=True)
class Token:
    """A user's credential: public abscissa x, secret ordinate y."""

    user_id: str
    x: FieldElement
    y: FieldElement

    def __post_init__(self) -> None:
        if self.x.value == 0:
            raise ValueError("token abscissa must be nonzero")


@dataclass(frozen=True, slots=True)
class Commitment:
    """Published 32-byte digest of the group secret."""

    digest: bytes

    def __post_init__(self) -> None:
        if len(self.digest) != 32:
            raise ValueError(f"digest must be 32 bytes, got {len(self.digest)}")

    def hex(self) -> str:
        return self.digest.hex()


@dataclass(frozen=True, slots=True)
class GroupPublic:
    """Everything a participant may legitimately see: params + commitment."""

    group: GroupParams
    commitment: Commitment


@dataclass(frozen=True, slots=True)
class GroupState:
    """Manager-private state: the secret polynomial and issued tokens."""

    group: GroupParams
    secret: FieldElement
    secret_poly: Polynomial
    tokens: tuple[Token, ...]


def hash_secret(s: FieldElement) -> Commitment:
    """Commitment digest over the canonical fixed-width encoding of s."""
    p = s.params.p
    preimage = _HASH_TAG + p.to_bytes(8, "big") + s.value.to_bytes(8, "big")
    return Commitment(hashlib.sha256(preimage).digest())


def setup_group(
    gp: GroupParams, rng: random.Random
) -> tuple[GroupState, Commitment, tuple[Token, ...]]:
    """Register n users: deal tokens, publish the commitment.

    Token abscissas default to 1..n. The returned GroupState is private to
    the manager; callers hand participants only their own Token plus the
    GroupPublic view.
    """
    cfg = DealerConfig(gp.t, gp.n, gp.params)
    secret = random_element(rng, gp.params)
    dealt = generate_shares(cfg, secret, rng)
    tokens = tuple(
        Token(f"user-{i}", share.x, share.y)
        for i, share in enumerate(dealt.shares, start=1)
    )
    state = GroupState(gp, secret, dealt.secret_poly, tokens)
    return state, hash_secret(secret), tokens


def verify_token(state: GroupState, tok: Token) -> bool:
    """Manager-side oracle: does the token lie on the secret polynomial?"""
    return state.secret_poly.eval_at(tok.x) == tok.y
