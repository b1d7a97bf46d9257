"""Group manager setup, token issuance, and commitment tests."""

import hashlib
import itertools
import random

import pytest

from groupauth.field import FieldParams
from groupauth.manager import (
    Commitment,
    GroupParams,
    Token,
    hash_secret,
    setup_group,
    verify_token,
)
from groupauth.poly import SharePoint
from groupauth.shamir import brute_force_secret_candidates

F13 = FieldParams(13)


class ScriptedBits:
    def __init__(self, values):
        self.values = list(values)

    def getrandbits(self, _bits):
        return self.values.pop(0)


def test_group_params_validation():
    with pytest.raises(ValueError):
        GroupParams(1, 3, F13)
    with pytest.raises(ValueError):
        GroupParams(3, 3, F13)
    with pytest.raises(ValueError):
        GroupParams(2, 13, F13)
    with pytest.raises(ValueError):
        GroupParams(2, 3, F13, hash_id="md5")


def test_hash_secret_is_tagged_sha256():
    s = F13.element(5)
    preimage = b"GAS-v1:" + (13).to_bytes(8, "big") + (5).to_bytes(8, "big")
    assert hash_secret(s).digest == hashlib.sha256(preimage).digest()


def test_hash_secret_deterministic_and_injective_at_test_scale():
    digests = {hash_secret(F13.element(v)).digest for v in range(13)}
    assert len(digests) == 13
    assert hash_secret(F13.element(7)) == hash_secret(F13.element(7))


def test_commitment_length_enforced():
    with pytest.raises(ValueError):
        Commitment(b"\x00" * 31)


def test_token_rejects_zero_abscissa():
    with pytest.raises(ValueError):
        Token("u", F13.element(0), F13.element(1))


def test_setup_scripted_worked_example():
    # Secret 5 then leading coefficient 3 gives f = 3x + 5.
    gp = GroupParams(2, 3, F13)
    state, commitment, tokens = setup_group(gp, ScriptedBits([5, 3]))
    assert [(tok.x.value, tok.y.value) for tok in tokens] == [(1, 8), (2, 11), (3, 1)]
    assert commitment == hash_secret(F13.element(5))
    assert state.secret.value == 5


def test_setup_abscissas_distinct_and_tokens_verify():
    gp = GroupParams(3, 6, F13)
    state, _, tokens = setup_group(gp, random.Random(12))
    assert len({tok.x.value for tok in tokens}) == 6
    for tok in tokens:
        assert verify_token(state, tok)


def test_perturbed_token_fails_verification():
    gp = GroupParams(2, 3, F13)
    state, _, tokens = setup_group(gp, random.Random(9))
    tok = tokens[0]
    bad = Token(tok.user_id, tok.x, tok.y + F13.element(1))
    assert not verify_token(state, bad)


def test_unissued_but_valid_token_verifies():
    """A fresh evaluation beyond the issued abscissas still lies on f."""
    gp = GroupParams(2, 3, F13)
    state, _, _ = setup_group(gp, random.Random(9))
    x = F13.element(gp.n + 1)
    tok = Token("ghost", x, state.secret_poly.eval_at(x))
    assert verify_token(state, tok)


def test_setup_determinism_and_seed_sensitivity():
    gp = GroupParams(2, 3, F13)
    a = setup_group(gp, random.Random(1))
    b = setup_group(gp, random.Random(1))
    assert a == b
    c = setup_group(gp, random.Random(2))
    assert a[1] != c[1]  # different commitments for these seeds


def test_no_collusion_below_threshold():
    """Any t-1 tokens leave all p secrets possible (insider bound)."""
    gp = GroupParams(3, 5, F13)
    _, _, tokens = setup_group(gp, random.Random(77))
    all_secrets = set(range(13))
    for pair in itertools.combinations(tokens, gp.t - 1):
        shares = [SharePoint(tok.x, tok.y) for tok in pair]
        candidates = brute_force_secret_candidates(shares, gp.t, F13)
        assert {c.value for c in candidates} == all_secrets
