"""Exact arithmetic in a prime field Z_p.

Values are canonical residues in [0, p). The modulus is a run-time
parameter; the default is the Mersenne prime 2^61 - 1 so that products of
two residues fit comfortably in native integers on every platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ModulusMismatchError, ZeroInverseError

DEFAULT_PRIME = 2**61 - 1  # 2305843009213693951

# Witnesses making Miller-Rabin deterministic for every n < 3.3 * 10^24,
# which covers the whole supported range of 64-bit moduli.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2^64."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % q == 0 for q in small):
        return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class FieldParams:
    """The public prime modulus p shared by a group."""

    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.p < 3:
            raise ValueError(f"modulus must be >= 3, got {self.p}")
        if self.p >= 2**64:
            raise ValueError("moduli beyond 64 bits are not supported")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def element(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    def one(self) -> FieldElement:
        return FieldElement(1, self)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """A canonical residue mod p. Immutable; arithmetic returns new values."""

    value: int
    params: FieldParams

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.params.p:
            raise ValueError(f"residue {self.value} out of range [0, {self.params.p})")

    def _same_field(self, other: FieldElement) -> int:
        if self.params != other.params:
            raise ModulusMismatchError(
                f"mixed moduli {self.params.p} and {other.params.p}"
            )
        return self.params.p

    def __add__(self, other: FieldElement) -> FieldElement:
        p = self._same_field(other)
        return FieldElement((self.value + other.value) % p, self.params)

    def __sub__(self, other: FieldElement) -> FieldElement:
        p = self._same_field(other)
        return FieldElement((self.value - other.value) % p, self.params)

    def __mul__(self, other: FieldElement) -> FieldElement:
        p = self._same_field(other)
        return FieldElement(self.value * other.value % p, self.params)

    def __neg__(self) -> FieldElement:
        p = self.params.p
        return FieldElement((p - self.value) % p, self.params)

    def inv(self) -> FieldElement:
        """Multiplicative inverse; p prime makes a^(p-2) the inverse."""
        if self.value == 0:
            raise ZeroInverseError("zero has no multiplicative inverse")
        p = self.params.p
        return FieldElement(pow(self.value, p - 2, p), self.params)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._same_field(other)
        return self * other.inv()

    def __repr__(self) -> str:
        return f"FieldElement({self.value} mod {self.params.p})"


def random_element(rng: random.Random, params: FieldParams) -> FieldElement:
    """Uniform residue, by rejection sampling on the smallest power of two >= p."""
    bits = params.p.bit_length()
    while True:
        v = rng.getrandbits(bits)
        if v < params.p:
            return FieldElement(v, params)


def random_nonzero(rng: random.Random, params: FieldParams) -> FieldElement:
    """Uniform over the p-1 nonzero residues."""
    while True:
        e = random_element(rng, params)
        if e.value != 0:
            return e
