"""Round-based participant state machines for the two authentication protocols.

P1 (one-time): every participant broadcasts its token; everyone rebuilds
the group secret from the broadcast points and compares its hash against
the published commitment. Tokens and secret are burned afterwards.

P2 (token-hiding): every participant deals shares of a private random
masking polynomial to the others, then broadcasts its token plus the sum
of all mask shares at its own abscissa. The broadcast sums are shares of
the summed polynomial, so honest rosters stay consistent while the
individual tokens remain hidden and reusable.

Participants are single-owner state machines. Steps must be called in
protocol order; the simulator provides the gather-then-deliver barrier
that models simultaneous broadcast.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    IncompleteRoundError,
    ModulusMismatchError,
    RosterError,
    WrongPhaseError,
)
from .field import FieldElement, random_element
from .manager import GroupPublic, Token, hash_secret
from .poly import (
    ConsistencyRule,
    Polynomial,
    SharePoint,
    check_strong_t_consistency,
    interpolate_at_zero,
)


class MessageKind(enum.Enum):
    TOKEN_REVEAL = "token-reveal"
    SUB_SHARE = "sub-share"
    MASKED_REVEAL = "masked-reveal"


@dataclass(frozen=True, slots=True)
class ProtocolMessage:
    """One wire message. Only SUB_SHARE is point-to-point (to_x set).

    Messages carry abscissas and field elements, never user identities.
    """

    kind: MessageKind
    from_x: FieldElement
    payload: FieldElement
    to_x: FieldElement | None = None

    def __post_init__(self) -> None:
        if (self.kind is MessageKind.SUB_SHARE) != (self.to_x is not None):
            raise ValueError("sub-shares are point-to-point; reveals are broadcast")


class VerdictDetail(enum.Enum):
    HASH_MATCH = "hash-match"
    HASH_MISMATCH = "hash-mismatch"
    DEGREE_EXACT = "degree-exact"
    DEGREE_WRONG = "degree-wrong"


_ACCEPTING = (VerdictDetail.HASH_MATCH, VerdictDetail.DEGREE_EXACT)


@dataclass(frozen=True, slots=True)
class Verdict:
    """Yes/no authentication outcome with its reason.

    measured_degree is set for P2 verdicts (None marks the zero
    polynomial in serialized form; here it is the raw degree).
    """

    accepted: bool
    detail: VerdictDetail
    measured_degree: int | float | None = None

    def __post_init__(self) -> None:
        if self.accepted != (self.detail in _ACCEPTING):
            raise ValueError("verdict acceptance inconsistent with its detail")


class Phase(enum.Enum):
    START = "start"
    P1_REVEALED = "p1-revealed"
    P2_MASKED = "p2-masked"
    P2_REVEALED = "p2-revealed"
    DONE = "done"


class Participant:
    """One seat in a protocol run, driven by its own token and roster view."""

    def __init__(
        self,
        token: Token,
        public: GroupPublic,
        roster: Sequence[FieldElement],
        rule: ConsistencyRule = ConsistencyRule.EXACT_DEGREE,
    ) -> None:
        params = public.group.params
        if token.x.params != params:
            raise ModulusMismatchError("token from a different field")
        xs = tuple(roster)
        if len({x.value for x in xs}) != len(xs):
            raise RosterError("roster abscissas must be distinct")
        if token.x not in xs:
            raise RosterError("own abscissa missing from roster")
        j = len(xs)
        if not public.group.t < j <= public.group.n:
            raise RosterError(
                f"roster size {j} outside (t, n] = ({public.group.t}, {public.group.n}]"
            )
        for x in xs:
            if x.params != params or x.value == 0:
                raise RosterError("roster abscissas must be nonzero field elements")
        self.token = token
        self.public = public
        self.roster = xs
        self.rule = rule
        self.phase = Phase.START
        self.mask_poly: Polynomial | None = None
        self._own_mask_share: FieldElement | None = None
        self.received_subshares: dict[int, FieldElement] = {}

    def _require_phase(self, expected: Phase) -> None:
        if self.phase is not expected:
            raise WrongPhaseError(
                f"step requires phase {expected.value}, participant is in {self.phase.value}"
            )

    def _collect_broadcasts(
        self, messages: Sequence[ProtocolMessage], kind: MessageKind
    ) -> list[SharePoint]:
        """One broadcast of `kind` per roster member, as share points."""
        by_x: dict[int, FieldElement] = {}
        for msg in messages:
            if msg.kind is not kind:
                raise IncompleteRoundError(f"unexpected {msg.kind.value} message")
            if msg.from_x.value in by_x:
                raise IncompleteRoundError(f"duplicate broadcast from x={msg.from_x.value}")
            by_x[msg.from_x.value] = msg.payload
        roster_values = {x.value for x in self.roster}
        if set(by_x) != roster_values:
            missing = sorted(roster_values - set(by_x))
            extra = sorted(set(by_x) - roster_values)
            raise IncompleteRoundError(
                f"round incomplete: missing from x={missing}, unexpected x={extra}"
            )
        return [SharePoint(x, by_x[x.value]) for x in self.roster]

    # Protocol 1

    def p1_reveal(self) -> ProtocolMessage:
        """Broadcast the raw token. One-time: the token is burned by this."""
        self._require_phase(Phase.START)
        self.phase = Phase.P1_REVEALED
        return ProtocolMessage(MessageKind.TOKEN_REVEAL, self.token.x, self.token.y)

    def p1_verify(self, reveals: Sequence[ProtocolMessage]) -> Verdict:
        """Rebuild the secret from all reveals and compare commitments."""
        self._require_phase(Phase.P1_REVEALED)
        points = self._collect_broadcasts(reveals, MessageKind.TOKEN_REVEAL)
        rebuilt = interpolate_at_zero(points)
        self.phase = Phase.DONE
        if hash_secret(rebuilt) == self.public.commitment:
            return Verdict(True, VerdictDetail.HASH_MATCH)
        return Verdict(False, VerdictDetail.HASH_MISMATCH)

    # Protocol 2

    def p2_make_mask(
        self, rng: random.Random, mask_poly: Polynomial | None = None
    ) -> list[ProtocolMessage]:
        """Pick a private masking polynomial and deal its shares.

        All mask coefficients are sampled uniformly from Z_p, so the sum
        of token and mask polynomials has a uniform leading coefficient
        and the honest accept rate is exactly (p-1)/p under the
        exact-degree rule. An explicit mask_poly overrides sampling (used
        by tests and exhaustive enumeration).
        """
        self._require_phase(Phase.START)
        params = self.public.group.params
        t = self.public.group.t
        if mask_poly is None:
            coeffs = tuple(random_element(rng, params) for _ in range(t))
            mask_poly = Polynomial(params, coeffs)
        elif mask_poly.params != params:
            raise ModulusMismatchError("mask polynomial over a different field")
        self.mask_poly = mask_poly
        self._own_mask_share = mask_poly.eval_at(self.token.x)
        messages = [
            ProtocolMessage(MessageKind.SUB_SHARE, self.token.x, mask_poly.eval_at(x), x)
            for x in self.roster
            if x.value != self.token.x.value
        ]
        self.phase = Phase.P2_MASKED
        return messages

    def p2_masked_reveal(self, subshares: Sequence[ProtocolMessage]) -> ProtocolMessage:
        """Broadcast token + all mask shares at the own abscissa."""
        self._require_phase(Phase.P2_MASKED)
        received: dict[int, FieldElement] = {}
        for msg in subshares:
            if msg.kind is not MessageKind.SUB_SHARE:
                raise IncompleteRoundError(f"unexpected {msg.kind.value} message")
            if msg.to_x is None or msg.to_x.value != self.token.x.value:
                raise IncompleteRoundError("sub-share addressed to someone else")
            if msg.from_x.value in received:
                raise IncompleteRoundError(f"duplicate sub-share from x={msg.from_x.value}")
            received[msg.from_x.value] = msg.payload
        expected = {x.value for x in self.roster} - {self.token.x.value}
        if set(received) != expected:
            raise IncompleteRoundError(
                f"missing sub-shares from x={sorted(expected - set(received))}"
            )
        self.received_subshares = received
        assert self._own_mask_share is not None
        total = self.token.y + self._own_mask_share
        for value in received.values():
            total = total + value
        self.phase = Phase.P2_REVEALED
        return ProtocolMessage(MessageKind.MASKED_REVEAL, self.token.x, total)

    def p2_verify(self, reveals: Sequence[ProtocolMessage]) -> Verdict:
        """Check the broadcast sums for strong t-consistency."""
        self._require_phase(Phase.P2_REVEALED)
        points = self._collect_broadcasts(reveals, MessageKind.MASKED_REVEAL)
        verdict = check_strong_t_consistency(points, self.public.group.t, self.rule)
        self.phase = Phase.DONE
        if verdict.consistent:
            return Verdict(True, VerdictDetail.DEGREE_EXACT, verdict.measured_degree)
        return Verdict(False, VerdictDetail.DEGREE_WRONG, verdict.measured_degree)
