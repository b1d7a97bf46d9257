"""Prime-field arithmetic tests, exhaustive at small moduli."""

import random

import pytest

from groupauth.errors import ModulusMismatchError, ZeroInverseError
from groupauth.field import (
    DEFAULT_PRIME,
    FieldElement,
    FieldParams,
    is_prime,
    random_element,
    random_nonzero,
)

F13 = FieldParams(13)
F97 = FieldParams(97)


def test_default_prime_is_61_bit_mersenne():
    assert DEFAULT_PRIME == 2**61 - 1
    assert FieldParams().p == DEFAULT_PRIME


@pytest.mark.parametrize("n,expected", [
    (1, False), (2, True), (3, True), (4, False), (13, True), (97, True),
    (257, True), (561, False), (2**61 - 1, True), (2**61 + 1, False),
    (3215031751, False),  # strong pseudoprime to bases 2,3,5,7
])
def test_is_prime(n, expected):
    assert is_prime(n) == expected


def test_params_validation():
    with pytest.raises(ValueError):
        FieldParams(12)
    with pytest.raises(ValueError):
        FieldParams(2)
    with pytest.raises(ValueError):
        FieldParams(2**64 + 13)


def test_add():
    assert (F13.element(5) + F13.element(11)).value == 3
    assert (F97.element(96) + F97.element(96)).value == 95
    for x in range(13):
        assert (F13.element(0) + F13.element(x)).value == x


def test_mul():
    assert (F13.element(3) * F13.element(9)).value == 1
    for x in range(13):
        assert (F13.element(1) * F13.element(x)).value == x
        assert (F13.element(0) * F13.element(x)).value == 0


def test_inv():
    assert F13.element(3).inv().value == 9
    assert F13.element(1).inv().value == 1
    assert F97.element(96).inv().value == 96
    with pytest.raises(ZeroInverseError):
        F13.element(0).inv()


def test_neg_and_sub():
    assert (-F13.element(5)).value == 8
    assert (-F13.element(0)).value == 0
    assert (F13.element(3) - F13.element(11)).value == 5


def test_division():
    assert (F13.element(1) / F13.element(3)).value == 9
    with pytest.raises(ZeroInverseError):
        F13.element(4) / F13.element(0)


def test_mismatched_moduli_rejected():
    a, b = F13.element(1), F97.element(1)
    for op in (lambda: a + b, lambda: a - b, lambda: a * b, lambda: a / b):
        with pytest.raises(ModulusMismatchError):
            op()


def test_equality_across_fields_is_false_not_error():
    assert F13.element(1) != F97.element(1)


def test_canonical_range_rejected_at_construction():
    with pytest.raises(ValueError):
        FieldElement(13, F13)
    with pytest.raises(ValueError):
        FieldElement(-1, F13)


def test_field_axioms_exhaustive_p13():
    """Associativity, distributivity, additive inverse over all of Z_13."""
    els = [F13.element(v) for v in range(13)]
    for a in els:
        assert (a + (-a)).value == 0
        for b in els:
            for c in els:
                assert ((a + b) + c) == (a + (b + c))
                assert (a * (b + c)) == (a * b + a * c)


@pytest.mark.parametrize("params", [F13, F97])
def test_inverse_exhaustive(params):
    for v in range(1, params.p):
        a = params.element(v)
        assert (a * a.inv()).value == 1


def test_random_element_reproducible():
    draws1 = [random_element(random.Random(42), F13).value for _ in range(10)]
    rng = random.Random(42)
    draws2 = [random_element(rng, F13).value for _ in range(1)]
    assert draws1[0] == draws2[0]
    rng_a, rng_b = random.Random(7), random.Random(7)
    assert [random_element(rng_a, F97).value for _ in range(50)] == [
        random_element(rng_b, F97).value for _ in range(50)
    ]


def test_random_element_uniform_4sigma():
    """10^5 draws at p=13: every residue frequency within 4 sigma of 1/13."""
    rng = random.Random(20260810)
    n = 100_000
    counts = [0] * 13
    for _ in range(n):
        counts[random_element(rng, F13).value] += 1
    q = 1 / 13
    sigma = (n * q * (1 - q)) ** 0.5
    for c in counts:
        assert abs(c - n * q) <= 4 * sigma


def test_random_element_range_small_prime():
    params = FieldParams(3)
    for seed in range(50):
        rng = random.Random(seed)
        values = {random_element(rng, params).value for _ in range(30)}
        assert values <= {0, 1, 2}


def test_random_nonzero_never_zero():
    rng = random.Random(1)
    params = FieldParams(3)
    assert all(random_nonzero(rng, params).value != 0 for _ in range(200))
