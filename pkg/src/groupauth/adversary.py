"""Attacker behaviors: outsiders, colluding insiders, and replay.

Every adversary is modeled as a seat that runs the honest protocol
mechanics with a chosen effective token value. Outsiders fabricate the
value, colluders derive it from their pooled legitimate tokens, and
replayers lift it from an observed earlier session. Deviation is limited
to token validity; aborts and equivocation are out of scope.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Sequence

from .field import FieldElement, random_element
from .manager import Token


class AdversaryKind(enum.Enum):
    OUTSIDER_RANDOM = "outsider-random"
    OUTSIDER_CHOSEN = "outsider-chosen"
    INSIDER_COLLUDERS = "insider-colluders"
    REPLAY_OBSERVED = "replay-observed"


class ForgeStrategy(enum.Enum):
    UNIFORM_GUESS = "uniform-guess"
    INTERPOLATE_AVAILABLE = "interpolate-available"


class SourceProtocol(enum.Enum):
    """Which earlier session a replay adversary observed."""

    P1 = "P1"
    P2 = "P2"


@dataclass(frozen=True, slots=True)
class AdversarySpec:
    """Configuration of one adversarial seat.

    seat_x: the abscissa the adversary occupies in the roster.
    payload: fixed value for OUTSIDER_CHOSEN.
    colluder_token_indices: 1-based indices of the colluding insiders.
    strategy: forging strategy for colluders.
    expect_break: allow t or more colluders (the deliberate break case).
    source_protocol: observed session type for REPLAY_OBSERVED.
    """

    kind: AdversaryKind
    seat_x: int
    payload: int | None = None
    colluder_token_indices: tuple[int, ...] = ()
    strategy: ForgeStrategy = ForgeStrategy.UNIFORM_GUESS
    expect_break: bool = False
    source_protocol: SourceProtocol = SourceProtocol.P1

    def __post_init__(self) -> None:
        if self.seat_x < 1:
            raise ValueError("seat_x must be a nonzero abscissa")
        if self.kind is AdversaryKind.OUTSIDER_CHOSEN and self.payload is None:
            raise ValueError("outsider-chosen needs a payload")
        if self.kind is AdversaryKind.INSIDER_COLLUDERS:
            if len(set(self.colluder_token_indices)) != len(self.colluder_token_indices):
                raise ValueError("duplicate colluder indices")
            if self.seat_x in self.colluder_token_indices:
                raise ValueError("forgery target collides with a colluder abscissa")


def _lagrange_eval(xs: list[int], ys: list[int], at: int, p: int) -> int:
    """Evaluate the interpolant through (xs, ys) at `at`; xs may include 0."""
    total = 0
    for i, xi in enumerate(xs):
        num = 1
        den = 1
        for r, xr in enumerate(xs):
            if r == i:
                continue
            num = num * (at - xr) % p
            den = den * (xi - xr) % p
        total = (total + ys[i] * num % p * pow(den, p - 2, p)) % p
    return total


def colluders_forge_token(
    colluder_tokens: Sequence[Token],
    target_x: FieldElement,
    strategy: ForgeStrategy,
    t: int,
    rng: random.Random | None = None,
    guess: FieldElement | None = None,
) -> Token:
    """Best-effort forged token for target_x from pooled insider tokens.

    UNIFORM_GUESS ignores the pooled tokens and guesses the ordinate.
    INTERPOLATE_AVAILABLE fits a polynomial through the known shares plus
    a guessed secret at x=0 and evaluates it at the target; with t or more
    colluders no guess is needed and the forgery is exact. `guess` pins
    the guessed value for exhaustive enumeration; otherwise it is drawn
    from rng.
    """
    params = target_x.params
    p = params.p
    if target_x.value == 0:
        raise ValueError("target abscissa must be nonzero")
    for tok in colluder_tokens:
        if tok.x.value == target_x.value:
            raise ValueError("forgery target collides with a colluder abscissa")

    def _guess() -> FieldElement:
        if guess is not None:
            return guess
        if rng is None:
            raise ValueError("need an rng when no explicit guess is given")
        return random_element(rng, params)

    if strategy is ForgeStrategy.UNIFORM_GUESS or not colluder_tokens:
        return Token("forged", target_x, _guess())

    xs = [tok.x.value for tok in colluder_tokens]
    ys = [tok.y.value for tok in colluder_tokens]
    if len(xs) < t:
        # Below threshold: pin the one missing degree of freedom by
        # guessing the secret at x=0 and fitting through it.
        xs = [0] + xs
        ys = [_guess().value] + ys
    else:
        xs, ys = xs[:t], ys[:t]
    forged = _lagrange_eval(xs, ys, target_x.value, p)
    return Token("forged", target_x, params.element(forged))
