"""Threshold group authentication over prime fields.

A group manager deals Shamir-style tokens to n users and publishes a
commitment to the group secret. Any t+1..n token holders can then
authenticate each other at once: protocol P1 by revealing tokens and
re-deriving the secret (one-time), protocol P2 by broadcasting additively
masked tokens and checking strong t-consistency of the sums (tokens stay
hidden and reusable). The sim module runs both protocols against
configurable adversaries, deterministically, with exact exhaustive and
Monte Carlo measurements.
"""

from .errors import (
    DuplicateAbscissaError,
    GroupAuthError,
    IncompleteRoundError,
    InsufficientPointsError,
    InsufficientSharesError,
    ModulusMismatchError,
    NoPointsError,
    OracleScaleError,
    RosterError,
    ScenarioError,
    WrongPhaseError,
    ZeroInverseError,
)
from .field import (
    DEFAULT_PRIME,
    FieldElement,
    FieldParams,
    is_prime,
    random_element,
    random_nonzero,
)
from .poly import (
    ConsistencyRule,
    ConsistencyVerdict,
    Polynomial,
    SharePoint,
    ZERO_POLY_DEGREE,
    check_strong_t_consistency,
    exact_degree,
    interpolate,
    interpolate_at_zero,
)
from .shamir import (
    DealerConfig,
    ShareSet,
    brute_force_secret_candidates,
    brute_force_secret_histogram,
    generate_shares,
    reconstruct_secret,
    shares_from_polynomial,
)
from .manager import (
    Commitment,
    GroupParams,
    GroupPublic,
    GroupState,
    Token,
    hash_secret,
    setup_group,
    verify_token,
)
from .protocol import (
    MessageKind,
    Participant,
    Phase,
    ProtocolMessage,
    Verdict,
    VerdictDetail,
)
from .adversary import (
    AdversaryKind,
    AdversarySpec,
    ForgeStrategy,
    SourceProtocol,
    colluders_forge_token,
)
from .sim import (
    AdversarySeat,
    HonestSeat,
    ProtocolKind,
    Scenario,
    StatsReport,
    Transcript,
    chi_square_uniform_pvalue,
    load_scenario,
    run_exhaustive,
    run_monte_carlo,
    run_scenario,
    scenario_from_dict,
    scenario_to_dict,
    spawn_rng,
)

__version__ = "0.1.0"
