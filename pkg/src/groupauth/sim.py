"""Deterministic multi-party simulator with transcripts and statistics.

Scenarios describe a group, a roster of honest and adversarial seats, a
protocol, and a trial count. Execution is fully determined by the
scenario seed: every random draw flows from an rng derived by hashing
(seed, purpose, indices), so identical scenarios produce byte-identical
transcripts and trials are independently seeded.

Rounds follow a gather-then-deliver barrier: all messages of a round are
collected before any participant sees one, which models simultaneous
broadcast and shuts out rushing behavior.

Two measurement modes exist. Monte Carlo runs the scenario's trials and
reports rates with 4-sigma binomial intervals. Exhaustive mode replaces
every free adversarial value (a fabricated payload, a colluder's guess, a
replayed masked value) by full enumeration over Z_p with everything else
seed-fixed, and reports exact rational rates; for an all-honest token-
hiding scenario the enumerated value is the first seat's mask leading
coefficient, which is the coefficient whose cancellation causes the 1/p
honest false-reject.
"""

from __future__ import annotations

import enum
import hashlib
import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .adversary import (
    AdversaryKind,
    AdversarySpec,
    ForgeStrategy,
    SourceProtocol,
    colluders_forge_token,
)
from .errors import OracleScaleError, ScenarioError
from .field import FieldElement, FieldParams, random_element
from .manager import GroupParams, GroupPublic, Token, setup_group
from .poly import ConsistencyRule, Polynomial
from .protocol import MessageKind, Participant, ProtocolMessage, Verdict

TRANSCRIPT_SCHEMA = "gas-transcript/1"
SCENARIO_SCHEMA = "gas-scenario/1"

_EXHAUSTIVE_MAX_PRIME = 257
_EXHAUSTIVE_MAX_CASES = 1_000_000


def spawn_rng(seed: int, *path: object) -> random.Random:
    """Child rng keyed by (seed, path) through a hash; order-independent trials."""
    label = ":".join(str(part) for part in (seed, *path))
    digest = hashlib.sha256(b"gas-rng:" + label.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def chi_square_uniform_pvalue(counts: Sequence[int]) -> float:
    """Upper-tail p-value of the uniformity chi-square statistic.

    Uses the closed-form tail for even degrees of freedom, which covers
    residue histograms (p - 1 is even for every odd prime).
    """
    k = len(counts)
    total = sum(counts)
    if k < 2 or total == 0:
        raise ValueError("need at least two cells with observations")
    df = k - 1
    if df % 2 != 0:
        raise ValueError("closed-form tail requires even degrees of freedom")
    expected = total / k
    stat = sum((c - expected) ** 2 for c in counts) / expected
    x = stat / 2.0
    term = math.exp(-x)
    tail = 0.0
    for i in range(df // 2):
        tail += term
        term *= x / (i + 1)
    return min(tail, 1.0)


class ProtocolKind(enum.Enum):
    """P1 reveals tokens and is one-time; P2 hides them behind masks."""

    P1 = "P1"
    P2 = "P2"


@dataclass(frozen=True, slots=True)
class HonestSeat:
    """A registered user participating with its issued token."""

    token_index: int

    def __post_init__(self) -> None:
        if self.token_index < 1:
            raise ScenarioError("token_index is 1-based")


@dataclass(frozen=True, slots=True)
class AdversarySeat:
    spec: AdversarySpec


@dataclass(frozen=True, slots=True)
class Scenario:
    """One reproducible experiment: group, roster, protocol, trial count."""

    group: GroupParams
    seed: int
    protocol: ProtocolKind
    roster: tuple
    trials: int = 1
    consistency_rule: ConsistencyRule = ConsistencyRule.EXACT_DEGREE

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ScenarioError("seed must fit in 64 bits")
        if self.trials < 1:
            raise ScenarioError("trials must be >= 1")
        j = len(self.roster)
        if not self.group.t < j <= self.group.n:
            raise ScenarioError(
                f"roster size {j} outside (t, n] = ({self.group.t}, {self.group.n}]"
            )
        seen_x = set()
        honest = 0
        for seat in self.roster:
            if isinstance(seat, HonestSeat):
                honest += 1
                if seat.token_index > self.group.n:
                    raise ScenarioError(f"token_index {seat.token_index} exceeds n")
                x = seat.token_index
            elif isinstance(seat, AdversarySeat):
                spec = seat.spec
                x = spec.seat_x
                if not 1 <= x <= self.group.params.p - 1:
                    raise ScenarioError(f"seat_x {x} outside [1, p-1]")
                if spec.kind is AdversaryKind.INSIDER_COLLUDERS:
                    bad = [
                        i
                        for i in spec.colluder_token_indices
                        if not 1 <= i <= self.group.n
                    ]
                    if bad:
                        raise ScenarioError(f"colluder indices {bad} outside [1, n]")
                    if (
                        len(spec.colluder_token_indices) > self.group.t - 1
                        and not spec.expect_break
                    ):
                        raise ScenarioError(
                            "more than t-1 colluders requires expect_break"
                        )
                if spec.kind is AdversaryKind.REPLAY_OBSERVED and x > self.group.n:
                    raise ScenarioError("replay seat must impersonate a registered user")
                if spec.payload is not None and not 0 <= spec.payload < self.group.params.p:
                    raise ScenarioError("chosen payload outside [0, p)")
            else:
                raise ScenarioError(f"unknown seat type {type(seat).__name__}")
            if x in seen_x:
                raise ScenarioError(f"duplicate roster abscissa x={x}")
            seen_x.add(x)
        if honest == 0:
            raise ScenarioError("roster needs at least one honest seat")


def _seat_x_value(seat) -> int:
    if isinstance(seat, HonestSeat):
        return seat.token_index
    return seat.spec.seat_x


def _has_replay(sc: Scenario) -> bool:
    return any(
        isinstance(s, AdversarySeat) and s.spec.kind is AdversaryKind.REPLAY_OBSERVED
        for s in sc.roster
    )


def _is_free_slot(seat, t: int) -> bool:
    """Seats whose effective value is a uniform draw over Z_p."""
    if not isinstance(seat, AdversarySeat):
        return False
    spec = seat.spec
    if spec.kind is AdversaryKind.OUTSIDER_RANDOM:
        return True
    if spec.kind is AdversaryKind.INSIDER_COLLUDERS:
        return (
            spec.strategy is ForgeStrategy.UNIFORM_GUESS
            or len(spec.colluder_token_indices) < t
        )
    if spec.kind is AdversaryKind.REPLAY_OBSERVED:
        return spec.source_protocol is SourceProtocol.P2
    return False


# Transcript


@dataclass
class Transcript:
    """Line-delimited event log; replaying (scenario, seed) reproduces it."""

    records: list

    def to_bytes(self) -> bytes:
        lines = [json.dumps(r, separators=(",", ":")) for r in self.records]
        return ("\n".join(lines) + "\n").encode("utf-8")

    def write(self, path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @staticmethod
    def read_records(path) -> list:
        with open(path, "r", encoding="utf-8") as fh:
            return [json.loads(line) for line in fh if line.strip()]

    def stats_record(self) -> dict:
        return next(r for r in self.records if r["type"] == "stats")

    def public_records(self) -> list:
        return [r for r in self.records if r.get("section") == "public"]


def _degree_field(verdict: Verdict):
    d = verdict.measured_degree
    if d is None or isinstance(d, float):
        return None
    return d


class _Log:
    """Record sink; drops everything when recording is off."""

    def __init__(self, record: bool) -> None:
        self.records: list = []
        self._on = record

    def add(self, rec: dict) -> None:
        if self._on:
            self.records.append(rec)

    def message(self, session: str, trial, round_no: int, msg: ProtocolMessage) -> None:
        if not self._on:
            return
        section = "private" if msg.kind is MessageKind.SUB_SHARE else "public"
        self.records.append(
            {
                "type": "message",
                "section": section,
                "session": session,
                "trial": trial,
                "round": round_no,
                "kind": msg.kind.value,
                "from_x": msg.from_x.value,
                "to_x": None if msg.to_x is None else msg.to_x.value,
                "payload": msg.payload.value,
            }
        )

    def verdict(self, session: str, trial, x: int, verdict: Verdict) -> None:
        if not self._on:
            return
        self.records.append(
            {
                "type": "verdict",
                "section": "public",
                "session": session,
                "trial": trial,
                "x": x,
                "accepted": verdict.accepted,
                "detail": verdict.detail.value,
                "measured_degree": _degree_field(verdict),
            }
        )


# Round execution


def _run_p1_round(
    tokens_by_seat: Sequence[Token],
    public: GroupPublic,
    roster_x: Sequence[FieldElement],
    log: _Log,
    session: str,
    trial,
) -> Verdict:
    participants = [Participant(tok, public, roster_x) for tok in tokens_by_seat]
    reveals = [pt.p1_reveal() for pt in participants]
    for msg in reveals:
        log.message(session, trial, 1, msg)
    # Under the barrier every seat verifies the identical broadcast set, so
    # the verdict is computed once and recorded for each seat.
    verdict = participants[0].p1_verify(reveals)
    for pt in participants:
        log.verdict(session, trial, pt.token.x.value, verdict)
    return verdict


def _run_p2_round(
    tokens_by_seat: Sequence[Token],
    public: GroupPublic,
    roster_x: Sequence[FieldElement],
    rule: ConsistencyRule,
    mask_rngs: Sequence[random.Random] | None,
    forced_masks: Sequence[Polynomial] | None,
    log: _Log,
    session: str,
    trial,
) -> Verdict:
    participants = [
        Participant(tok, public, roster_x, rule) for tok in tokens_by_seat
    ]
    inboxes: dict[int, list[ProtocolMessage]] = {x.value: [] for x in roster_x}
    for i, pt in enumerate(participants):
        rng = mask_rngs[i] if mask_rngs is not None else None
        forced = forced_masks[i] if forced_masks is not None else None
        msgs = pt.p2_make_mask(rng, forced)
        for m in msgs:
            log.message(session, trial, 1, m)
            inboxes[m.to_x.value].append(m)
    # Barrier: sub-shares are delivered only after the whole round is gathered.
    reveals = [pt.p2_masked_reveal(inboxes[pt.token.x.value]) for pt in participants]
    for msg in reveals:
        log.message(session, trial, 2, msg)
    # Same broadcast set for every seat, so one verification stands for all.
    verdict = participants[0].p2_verify(reveals)
    for pt in participants:
        log.verdict(session, trial, pt.token.x.value, verdict)
    return verdict


def _observation_indices(sc: Scenario) -> list[int]:
    """Roster (token indices) for the prior session a replayer observed."""
    base = list(range(1, sc.group.t + 2))
    for seat in sc.roster:
        if isinstance(seat, AdversarySeat) and seat.spec.kind is AdversaryKind.REPLAY_OBSERVED:
            if seat.spec.seat_x not in base:
                base.append(seat.spec.seat_x)
    return base


def _run_observation(
    sc: Scenario,
    public: GroupPublic,
    tokens: Sequence[Token],
    trial: int,
    log: _Log,
) -> dict[int, FieldElement]:
    """Run the honest session a replay adversary eavesdropped on.

    Returns the observed broadcast value per victim abscissa: the raw
    token for a P1 source, the masked sum for a P2 source.
    """
    indices = _observation_indices(sc)
    roster_x = [tokens[i - 1].x for i in indices]
    seat_tokens = [tokens[i - 1] for i in indices]
    sources = {
        seat.spec.seat_x: seat.spec.source_protocol
        for seat in sc.roster
        if isinstance(seat, AdversarySeat)
        and seat.spec.kind is AdversaryKind.REPLAY_OBSERVED
    }
    observed: dict[int, FieldElement] = {}
    needs_p1 = any(s is SourceProtocol.P1 for s in sources.values())
    needs_p2 = any(s is SourceProtocol.P2 for s in sources.values())
    if needs_p1:
        participants = [Participant(tok, public, roster_x) for tok in seat_tokens]
        reveals = [pt.p1_reveal() for pt in participants]
        for m in reveals:
            log.message("observation", trial, 1, m)
        for m in reveals:
            if m.from_x.value in sources and sources[m.from_x.value] is SourceProtocol.P1:
                observed[m.from_x.value] = m.payload
    if needs_p2:
        rngs = [
            spawn_rng(sc.seed, "trial", trial, "observe-mask", i)
            for i in range(len(seat_tokens))
        ]
        participants = [
            Participant(tok, public, roster_x, sc.consistency_rule)
            for tok in seat_tokens
        ]
        subshares: list[ProtocolMessage] = []
        for pt, rng in zip(participants, rngs):
            msgs = pt.p2_make_mask(rng)
            for m in msgs:
                log.message("observation", trial, 1, m)
            subshares.extend(msgs)
        for pt in participants:
            inbox = [m for m in subshares if m.to_x.value == pt.token.x.value]
            msg = pt.p2_masked_reveal(inbox)
            log.message("observation", trial, 2, msg)
            if (
                msg.from_x.value in sources
                and sources[msg.from_x.value] is SourceProtocol.P2
            ):
                observed[msg.from_x.value] = msg.payload
    return observed


def _effective_token(
    seat,
    seat_index: int,
    sc: Scenario,
    tokens: Sequence[Token],
    trial,
    observed: dict[int, FieldElement],
    override: int | None,
) -> Token:
    """The token value a seat brings to the table this trial.

    `override` replaces the seat's free value during exhaustive
    enumeration; otherwise the value is drawn from the seat's trial rng.
    """
    params = sc.group.params
    if isinstance(seat, HonestSeat):
        return tokens[seat.token_index - 1]
    spec = seat.spec
    x = params.element(spec.seat_x)
    if spec.kind is AdversaryKind.OUTSIDER_RANDOM:
        if override is not None:
            return Token("outsider", x, params.element(override))
        rng = spawn_rng(sc.seed, "trial", trial, "adv", seat_index)
        return Token("outsider", x, random_element(rng, params))
    if spec.kind is AdversaryKind.OUTSIDER_CHOSEN:
        return Token("outsider", x, params.element(spec.payload))
    if spec.kind is AdversaryKind.INSIDER_COLLUDERS:
        pooled = [tokens[i - 1] for i in spec.colluder_token_indices]
        guess = None if override is None else params.element(override)
        rng = (
            None
            if override is not None
            else spawn_rng(sc.seed, "trial", trial, "adv", seat_index)
        )
        forged = colluders_forge_token(
            pooled, x, spec.strategy, sc.group.t, rng=rng, guess=guess
        )
        return Token("forged", x, forged.y)
    if spec.kind is AdversaryKind.REPLAY_OBSERVED:
        if override is not None:
            return Token("replayed", x, params.element(override))
        if spec.source_protocol is SourceProtocol.P1 and spec.seat_x not in observed:
            # A P1 token is static; observing it is reading the victim's share.
            return Token("replayed", x, tokens[spec.seat_x - 1].y)
        return Token("replayed", x, observed[spec.seat_x])
    raise ScenarioError(f"unhandled adversary kind {spec.kind}")


def _execute(sc: Scenario, record: bool) -> tuple[list, int]:
    """Run all trials; returns (records, accept_count)."""
    log = _Log(record)
    log.add(_header_record(sc))
    params = sc.group.params
    roster_x = [params.element(_seat_x_value(s)) for s in sc.roster]
    accepts = 0

    shared_setup = None
    if sc.protocol is ProtocolKind.P2:
        # Tokens are never exposed by the masked protocol, so one
        # registration serves every trial.
        shared_setup = setup_group(sc.group, spawn_rng(sc.seed, "setup"))
        _log_setup(log, None, shared_setup)

    for trial in range(sc.trials):
        if sc.protocol is ProtocolKind.P1:
            setup = setup_group(sc.group, spawn_rng(sc.seed, "trial", trial, "setup"))
            _log_setup(log, trial, setup)
        else:
            setup = shared_setup
        state, commitment, tokens = setup
        public = GroupPublic(sc.group, commitment)

        observed: dict[int, FieldElement] = {}
        if _has_replay(sc):
            observed = _run_observation(sc, public, tokens, trial, log)

        seat_tokens = [
            _effective_token(seat, i, sc, tokens, trial, observed, None)
            for i, seat in enumerate(sc.roster)
        ]
        if sc.protocol is ProtocolKind.P1:
            verdict = _run_p1_round(seat_tokens, public, roster_x, log, "main", trial)
        else:
            mask_rngs = [
                spawn_rng(sc.seed, "trial", trial, "mask", i)
                for i in range(len(sc.roster))
            ]
            verdict = _run_p2_round(
                seat_tokens,
                public,
                roster_x,
                sc.consistency_rule,
                mask_rngs,
                None,
                log,
                "main",
                trial,
            )
        accepted = verdict.accepted
        accepts += accepted
        log.add(
            {
                "type": "trial-result",
                "section": "public",
                "session": "main",
                "trial": trial,
                "accepted": accepted,
            }
        )
    return log.records, accepts


def _log_setup(log: _Log, trial, setup) -> None:
    state, commitment, tokens = setup
    log.add(
        {
            "type": "setup",
            "section": "public",
            "session": "main",
            "trial": trial,
            "commitment": commitment.hex(),
        }
    )
    for tok in tokens:
        log.add(
            {
                "type": "roster-assignment",
                "section": "private",
                "session": "main",
                "trial": trial,
                "user_id": tok.user_id,
                "x": tok.x.value,
            }
        )


def _header_record(sc: Scenario) -> dict:
    return {
        "schema": TRANSCRIPT_SCHEMA,
        "type": "header",
        "section": "public",
        "scenario": scenario_to_dict(sc),
    }


def _stats_record(cases: int, accepts: int, mode: str) -> dict:
    rate = accepts / cases
    if mode == "monte-carlo":
        half = 4.0 * math.sqrt(rate * (1.0 - rate) / cases)
        ci_low, ci_high = max(0.0, rate - half), min(1.0, rate + half)
    else:
        ci_low = ci_high = None
    return {
        "type": "stats",
        "section": "public",
        "mode": mode,
        "cases": cases,
        "accepts": accepts,
        "rejects": cases - accepts,
        "accept_rate": rate,
        "ci_low": ci_low,
        "ci_high": ci_high,
    }


def run_scenario(sc: Scenario, record: bool = True) -> Transcript:
    """Execute every trial; the transcript ends with the aggregate stats."""
    records, accepts = _execute(sc, record)
    records.append(_stats_record(sc.trials, accepts, "monte-carlo"))
    return Transcript(records)


@dataclass(frozen=True, slots=True)
class StatsReport:
    """Acceptance statistics from one measurement run."""

    mode: str
    protocol: str
    cases: int
    accepts: int
    seed: int
    exact_rate: Fraction | None = None

    @property
    def accept_rate(self) -> float:
        return self.accepts / self.cases

    @property
    def reject_rate(self) -> float:
        return 1.0 - self.accept_rate

    @property
    def ci(self) -> tuple[float, float] | None:
        """4-sigma binomial interval around the observed rate (Monte Carlo)."""
        if self.mode != "monte-carlo":
            return None
        r = self.accept_rate
        half = 4.0 * math.sqrt(r * (1.0 - r) / self.cases)
        return max(0.0, r - half), min(1.0, r + half)

    def format_table(self) -> str:
        rows = [
            ("mode", self.mode),
            ("protocol", self.protocol),
            ("seed", str(self.seed)),
            ("cases", str(self.cases)),
            ("accepts", str(self.accepts)),
            ("rejects", str(self.cases - self.accepts)),
        ]
        if self.exact_rate is not None:
            rows.append(("accept rate", f"{self.exact_rate} ({float(self.exact_rate):.6f})"))
            reject = 1 - self.exact_rate
            rows.append(("reject rate", f"{reject} ({float(reject):.6f})"))
        else:
            rows.append(("accept rate", f"{self.accept_rate:.6f}"))
            rows.append(("reject rate", f"{self.reject_rate:.6f}"))
            lo, hi = self.ci
            rows.append(("4-sigma ci", f"[{lo:.6f}, {hi:.6f}]"))
        width = max(len(name) for name, _ in rows)
        return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)

    def to_record(self) -> dict:
        rec = {
            "mode": self.mode,
            "protocol": self.protocol,
            "seed": self.seed,
            "cases": self.cases,
            "accepts": self.accepts,
            "rejects": self.cases - self.accepts,
            "accept_rate": self.accept_rate,
        }
        if self.exact_rate is not None:
            rec["accept_rate_exact"] = str(self.exact_rate)
        ci = self.ci
        if ci is not None:
            rec["ci_low"], rec["ci_high"] = ci
        return rec


def run_monte_carlo(sc: Scenario) -> StatsReport:
    """Trial-sampled acceptance rate with a 4-sigma confidence interval."""
    _, accepts = _execute(sc, record=False)
    return StatsReport("monte-carlo", sc.protocol.value, sc.trials, accepts, sc.seed)


def run_exhaustive(sc: Scenario) -> StatsReport:
    """Exact acceptance rate by enumerating every free value over Z_p.

    Free values are the roster's uniform adversarial draws (fabricated
    payloads, colluder guesses, replayed masked values). All-honest P2
    scenarios enumerate the first seat's mask leading coefficient instead,
    isolating the honest false-reject event. Everything else, including
    the other mask coefficients, is fixed by the scenario seed. Trial
    count is ignored; each enumerated case runs once.
    """
    params = sc.group.params
    p = params.p
    if p > _EXHAUSTIVE_MAX_PRIME:
        raise OracleScaleError(f"exhaustive mode limited to p <= {_EXHAUSTIVE_MAX_PRIME}")
    slots = [i for i, seat in enumerate(sc.roster) if _is_free_slot(seat, sc.group.t)]
    mask_mode = sc.protocol is ProtocolKind.P2 and not slots
    k = 1 if mask_mode else len(slots)
    cases = p**k
    if cases > _EXHAUSTIVE_MAX_CASES:
        raise OracleScaleError(f"enumeration of {cases} cases is too large")

    setup = setup_group(sc.group, spawn_rng(sc.seed, "exhaustive", "setup"))
    state, commitment, tokens = setup
    public = GroupPublic(sc.group, commitment)
    roster_x = [params.element(_seat_x_value(s)) for s in sc.roster]
    log = _Log(False)

    base_masks: list[Polynomial] | None = None
    if sc.protocol is ProtocolKind.P2:
        base_masks = []
        for i in range(len(sc.roster)):
            rng = spawn_rng(sc.seed, "exhaustive", "mask", i)
            coeffs = tuple(random_element(rng, params) for _ in range(sc.group.t))
            base_masks.append(Polynomial(params, coeffs))

    accepts = 0
    for combo in itertools.product(range(p), repeat=k):
        overrides = {} if mask_mode else dict(zip(slots, combo))
        seat_tokens = [
            _effective_token(seat, i, sc, tokens, "exhaustive", {}, overrides.get(i))
            for i, seat in enumerate(sc.roster)
        ]
        if sc.protocol is ProtocolKind.P1:
            verdict = _run_p1_round(seat_tokens, public, roster_x, log, "main", None)
        else:
            masks = list(base_masks)
            if mask_mode:
                lead = combo[0]
                coeffs = list(masks[0].coeffs[: sc.group.t - 1])
                while len(coeffs) < sc.group.t - 1:
                    coeffs.append(params.zero())
                coeffs.append(params.element(lead))
                masks[0] = Polynomial(params, tuple(coeffs))
            verdict = _run_p2_round(
                seat_tokens,
                public,
                roster_x,
                sc.consistency_rule,
                None,
                masks,
                log,
                "main",
                None,
            )
        accepts += verdict.accepted
    return StatsReport(
        "exhaustive",
        sc.protocol.value,
        cases,
        accepts,
        sc.seed,
        exact_rate=Fraction(accepts, cases),
    )


# Scenario (de)serialization


def scenario_to_dict(sc: Scenario) -> dict:
    roster = []
    for seat in sc.roster:
        if isinstance(seat, HonestSeat):
            roster.append({"role": "honest", "token_index": seat.token_index})
        else:
            spec = seat.spec
            entry: dict = {
                "role": "adversary",
                "kind": spec.kind.value,
                "seat_x": spec.seat_x,
            }
            if spec.payload is not None:
                entry["payload"] = spec.payload
            if spec.colluder_token_indices:
                entry["colluders"] = list(spec.colluder_token_indices)
                entry["strategy"] = spec.strategy.value
            if spec.expect_break:
                entry["expect_break"] = True
            if spec.kind is AdversaryKind.REPLAY_OBSERVED:
                entry["source_protocol"] = spec.source_protocol.value
            roster.append(entry)
    return {
        "schema": SCENARIO_SCHEMA,
        "protocol": sc.protocol.value,
        "seed": sc.seed,
        "group": {
            "p": sc.group.params.p,
            "t": sc.group.t,
            "n": sc.group.n,
            "hash": sc.group.hash_id,
        },
        "trials": sc.trials,
        "consistency_rule": sc.consistency_rule.value,
        "roster": roster,
    }


def scenario_from_dict(data: dict) -> Scenario:
    """Build a Scenario from its JSON form; raises ScenarioError with context."""

    def need(mapping: dict, key: str, where: str):
        if key not in mapping:
            raise ScenarioError(f"missing key {key!r} in {where}")
        return mapping[key]

    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    schema = data.get("schema", SCENARIO_SCHEMA)
    if schema != SCENARIO_SCHEMA:
        raise ScenarioError(f"unsupported scenario schema {schema!r}")
    group_data = need(data, "group", "scenario")
    try:
        group = GroupParams(
            t=int(need(group_data, "t", "group")),
            n=int(need(group_data, "n", "group")),
            params=FieldParams(int(need(group_data, "p", "group"))),
            hash_id=group_data.get("hash", "sha256"),
        )
    except (ValueError, TypeError) as exc:
        raise ScenarioError(f"invalid group: {exc}") from exc
    try:
        protocol = ProtocolKind(need(data, "protocol", "scenario"))
    except ValueError as exc:
        raise ScenarioError(f"invalid protocol: {exc}") from exc
    try:
        rule = ConsistencyRule(data.get("consistency_rule", "exact-degree"))
    except ValueError as exc:
        raise ScenarioError(f"invalid consistency_rule: {exc}") from exc
    roster: list = []
    for idx, entry in enumerate(need(data, "roster", "scenario")):
        where = f"roster[{idx}]"
        role = need(entry, "role", where)
        if role == "honest":
            roster.append(HonestSeat(int(need(entry, "token_index", where))))
        elif role == "adversary":
            try:
                kind = AdversaryKind(need(entry, "kind", where))
                spec = AdversarySpec(
                    kind=kind,
                    seat_x=int(need(entry, "seat_x", where)),
                    payload=entry.get("payload"),
                    colluder_token_indices=tuple(entry.get("colluders", ())),
                    strategy=ForgeStrategy(entry.get("strategy", "uniform-guess")),
                    expect_break=bool(entry.get("expect_break", False)),
                    source_protocol=SourceProtocol(entry.get("source_protocol", "P1")),
                )
            except ValueError as exc:
                raise ScenarioError(f"invalid {where}: {exc}") from exc
            roster.append(AdversarySeat(spec))
        else:
            raise ScenarioError(f"unknown role {role!r} in {where}")
    try:
        return Scenario(
            group=group,
            seed=int(need(data, "seed", "scenario")),
            protocol=protocol,
            roster=tuple(roster),
            trials=int(data.get("trials", 1)),
            consistency_rule=rule,
        )
    except ScenarioError:
        raise
    except (ValueError, TypeError) as exc:
        raise ScenarioError(f"invalid scenario: {exc}") from exc


def load_scenario(path) -> Scenario:
    """Parse a scenario file; JSON syntax errors keep their line numbers."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(data)
