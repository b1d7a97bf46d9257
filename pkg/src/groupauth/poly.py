"""Polynomials over Z_p: evaluation, Lagrange interpolation, degree checks.

The strong t-consistency check lives here: a set of more than t points is
consistent when the interpolant through all of them has degree exactly t-1.
Interpolation uses Lagrange basis expansion with O(j^2) coefficient
arithmetic. Inner loops run on plain integers for speed; the typed wrappers
validate moduli and abscissas at the boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DuplicateAbscissaError,
    InsufficientPointsError,
    ModulusMismatchError,
    NoPointsError,
)
from .field import FieldElement, FieldParams

# Degree of the zero polynomial. A float sentinel compares below every int
# and never equals a real degree, so degenerate thresholds cannot collide.
ZERO_POLY_DEGREE = float("-inf")


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Coefficient vector over Z_p, constant term first, trailing zeros trimmed."""

    params: FieldParams
    coeffs: tuple[FieldElement, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if c.params != self.params:
                raise ModulusMismatchError("coefficient from a different field")
        while coeffs and coeffs[-1].value == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_ints(cls, params: FieldParams, values: Sequence[int]) -> Polynomial:
        return cls(params, tuple(params.element(v) for v in values))

    @property
    def degree(self) -> int | float:
        """Index of the highest nonzero coefficient; -inf for the zero polynomial."""
        if not self.coeffs:
            return ZERO_POLY_DEGREE
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval_at(self, x: FieldElement) -> FieldElement:
        """Horner evaluation of the polynomial at x."""
        if x.params != self.params:
            raise ModulusMismatchError("evaluation point from a different field")
        p = self.params.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x.value + c.value) % p
        return FieldElement(acc, self.params)

    def __add__(self, other: Polynomial) -> Polynomial:
        if self.params != other.params:
            raise ModulusMismatchError("cannot add polynomials over different fields")
        p = self.params.p
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        summed = [
            ((a[i].value if i < len(a) else 0) + (b[i].value if i < len(b) else 0)) % p
            for i in range(n)
        ]
        return Polynomial.from_ints(self.params, summed)

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"Polynomial(0 mod {self.params.p})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.value == 0:
                continue
            if i == 0:
                terms.append(str(c.value))
            elif i == 1:
                terms.append(f"{c.value}*x")
            else:
                terms.append(f"{c.value}*x^{i}")
        return f"Polynomial({' + '.join(terms)} mod {self.params.p})"


@dataclass(frozen=True, slots=True)
class SharePoint:
    """A point (x, y) with x != 0; x = 0 is reserved for the secret."""

    x: FieldElement
    y: FieldElement

    def __post_init__(self) -> None:
        if self.x.params != self.y.params:
            raise ModulusMismatchError("share coordinates from different fields")
        if self.x.value == 0:
            raise ValueError("share abscissa must be nonzero")

    @property
    def params(self) -> FieldParams:
        return self.x.params


def exact_degree(f: Polynomial) -> int | float:
    return f.degree


def _check_points(points: Sequence[SharePoint]) -> FieldParams:
    if not points:
        raise NoPointsError("at least one point is required")
    params = points[0].params
    seen = set()
    for pt in points:
        if pt.params != params:
            raise ModulusMismatchError("points from different fields")
        if pt.x.value in seen:
            raise DuplicateAbscissaError(f"duplicate abscissa x={pt.x.value}")
        seen.add(pt.x.value)
    return params


def _root_poly(xs: list[int], p: int) -> list[int]:
    """Coefficients of prod (x - x_r), constant term first."""
    root = [1]
    for xv in xs:
        root.insert(0, 0)
        for j in range(len(root) - 1):
            root[j] = (root[j] - root[j + 1] * xv) % p
    return root


def _batch_inverse(values: list[int], p: int) -> list[int]:
    """Invert every (nonzero) value with a single exponentiation."""
    n = len(values)
    prefix = [1] * (n + 1)
    for i, v in enumerate(values):
        prefix[i + 1] = prefix[i] * v % p
    running = pow(prefix[n], p - 2, p)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = prefix[i] * running % p
        running = running * values[i] % p
    return out


def _interp_coeff_ints(xs: list[int], ys: list[int], p: int) -> list[int]:
    """Lagrange basis expansion; returns untrimmed coefficient list, len(xs) long."""
    j = len(xs)
    master = _root_poly(xs, p)
    nums: list[list[int]] = []
    dens: list[int] = []
    for i in range(j):
        xi = xs[i]
        # Synthetic division of the master polynomial by (x - x_i).
        num = [0] * j
        num[j - 1] = 1
        for k in range(j - 2, -1, -1):
            num[k] = (master[k + 1] + num[k + 1] * xi) % p
        den = 1
        for r in range(j):
            if r != i:
                den = den * (xi - xs[r]) % p
        nums.append(num)
        dens.append(den)
    out = [0] * j
    for i, inv_den in enumerate(_batch_inverse(dens, p)):
        scale = ys[i] * inv_den % p
        num = nums[i]
        for k in range(j):
            out[k] = (out[k] + num[k] * scale) % p
    return out


def interpolate(points: Sequence[SharePoint]) -> Polynomial:
    """Unique polynomial of degree <= len(points)-1 through all points.

    The result is re-evaluated at every input abscissa before being
    returned; a mismatch indicates internal corruption and raises.
    """
    params = _check_points(points)
    p = params.p
    xs = [pt.x.value for pt in points]
    ys = [pt.y.value for pt in points]
    coeffs = _interp_coeff_ints(xs, ys, p)
    result = Polynomial.from_ints(params, coeffs)
    for pt in points:
        if result.eval_at(pt.x) != pt.y:
            raise ArithmeticError("interpolation self-check failed")
    return result


def interpolate_at_zero(points: Sequence[SharePoint]) -> FieldElement:
    """Constant term of the interpolant, by the direct Lagrange-at-zero sum.

    Computes sum_i y_i * prod_{r != i} (-x_r) / (x_i - x_r) without building
    the full polynomial.
    """
    params = _check_points(points)
    p = params.p
    xs = [pt.x.value for pt in points]
    ys = [pt.y.value for pt in points]
    nums = []
    dens = []
    for i, xi in enumerate(xs):
        num = 1
        den = 1
        for r, xr in enumerate(xs):
            if r == i:
                continue
            num = num * (p - xr) % p
            den = den * (xi - xr) % p
        nums.append(num)
        dens.append(den)
    total = 0
    for i, inv_den in enumerate(_batch_inverse(dens, p)):
        total = (total + ys[i] * nums[i] % p * inv_den) % p
    return FieldElement(total, params)


class ConsistencyRule(enum.Enum):
    """Degree rule for the consistency verdict.

    EXACT_DEGREE is the default: the interpolant must have degree t-1
    exactly, which makes an all-honest run fail with probability 1/p when
    the summed leading coefficients cancel. AT_MOST_DEGREE relaxes the rule
    to degree <= t-1 and removes that false-reject; it is off by default.
    """

    EXACT_DEGREE = "exact-degree"
    AT_MOST_DEGREE = "at-most-degree"


@dataclass(frozen=True, slots=True)
class ConsistencyVerdict:
    consistent: bool
    measured_degree: int | float
    threshold: int
    rule: ConsistencyRule = ConsistencyRule.EXACT_DEGREE


def check_strong_t_consistency(
    points: Sequence[SharePoint],
    t: int,
    rule: ConsistencyRule = ConsistencyRule.EXACT_DEGREE,
) -> ConsistencyVerdict:
    """Verdict on whether the points interpolate to degree exactly t-1.

    Requires strictly more than t points: with t or fewer, every point set
    interpolates to degree <= t-1 and the check is vacuous.
    """
    if t < 1:
        raise ValueError(f"threshold must be >= 1, got {t}")
    if len(points) <= t:
        raise InsufficientPointsError(
            f"consistency check needs more than t={t} points, got {len(points)}"
        )
    measured = interpolate(points).degree
    if rule is ConsistencyRule.EXACT_DEGREE:
        ok = measured == t - 1
    else:
        ok = measured <= t - 1
    return ConsistencyVerdict(ok, measured, t, rule)
