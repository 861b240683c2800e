"""Truncated formal power series over exact rationals.

A TruncatedSeries is a coefficient vector of Fractions, closed under a
fixed truncation order N: all arithmetic (including reciprocal and
composition) is exact modulo x^{N+1}.  The verify_* functions rebuild
both sides of the generating-function identities that tie the structure
counts to the matching counts and report the first coefficient where
the two sides disagree, if any.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import counting, structures


class TruncatedSeries:
    """Exact power series modulo x^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r})"

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        self._check_order(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """Series r with self * r = 1 modulo x^(order+1)."""
        a = self.coeffs
        if not a[0]:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv0 = 1 / a[0]
        out = [inv0] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                if a[i]:
                    acc += a[i] * out[n - i]
            out[n] = -acc * inv0
        return TruncatedSeries(out, self.order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner); inner must have zero constant term."""
        self._check_order(inner)
        if inner.coeffs[0]:
            raise ValueError("composition needs a zero constant term inside")
        result = TruncatedSeries([self.coeffs[self.order]], self.order)
        for i in range(self.order - 1, -1, -1):
            result = result * inner
            result.coeffs[0] += self.coeffs[i]
        return result

    def pow(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


def geometric(order: int) -> TruncatedSeries:
    """1/(1-x) truncated at order."""
    return TruncatedSeries([1] * (order + 1), order)


def exponential(order: int) -> TruncatedSeries:
    """sum x^n / n! truncated at order."""
    return TruncatedSeries(
        [Fraction(1, math.factorial(n)) for n in range(order + 1)], order
    )


def bessel_i(r: int, order: int) -> TruncatedSeries:
    """Modified Bessel function of the first kind, I_r(2x), as a series.

    I_r(2x) = sum_j x^(2j+r) / (j! (r+j)!); negative orders coincide with
    positive ones.
    """
    r = abs(r)
    coeffs = [Fraction(0)] * (order + 1)
    for j in range((order - r) // 2 + 1):
        e = 2 * j + r
        if e <= order:
            coeffs[e] = Fraction(1, math.factorial(j) * math.factorial(r + j))
    return TruncatedSeries(coeffs, order)


def determinant(matrix: list[list[TruncatedSeries]]) -> TruncatedSeries:
    """Permutation-expansion determinant of a small series matrix."""
    size = len(matrix)
    order = matrix[0][0].order
    total = TruncatedSeries.zero(order)
    for perm in permutations(range(size)):
        sign = 1
        for i in range(size):
            for j in range(i + 1, size):
                if perm[i] > perm[j]:
                    sign = -sign
        term = TruncatedSeries.one(order)
        for i in range(size):
            term = term * matrix[i][perm[i]]
        total = total + term * sign
    return total


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity coefficient-by-coefficient."""

    name: str
    order: int
    ok: bool
    first_mismatch: int | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    def describe(self) -> str:
        if self.ok:
            return f"{self.name}: holds to order {self.order}"
        return (
            f"{self.name}: MISMATCH at x^{self.first_mismatch} "
            f"(lhs={self.lhs}, rhs={self.rhs})"
        )


def _compare(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> IdentityReport:
    for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return IdentityReport(name, lhs.order, False, i, a, b)
    return IdentityReport(name, lhs.order, True)


def _even_part(k: int, order: int) -> TruncatedSeries:
    """sum f_k(2m, 0) y^(2m), truncated at order."""
    coeffs = [Fraction(0)] * (order + 1)
    for m in range(order // 2 + 1):
        coeffs[2 * m] = Fraction(counting.fk_perfect(k, 2 * m))
    return TruncatedSeries(coeffs, order)


def verify_laplace_identity(k: int, order: int) -> IdentityReport:
    """sum T_k(n) x^n  ==  1/(1-x) * sum f_k(2n,0) (x/(1-x))^(2n).

    Left side from the partial-matching counts, right side rebuilt
    through series arithmetic only; the two routes are independent.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    lhs = TruncatedSeries(
        [counting.tk_total(k, n) for n in range(order + 1)], order
    )
    inv = geometric(order)
    ratio = TruncatedSeries.x(order) * inv
    rhs = inv * _even_part(k, order).compose(ratio)
    return _compare(f"laplace(k={k})", lhs, rhs)


def verify_functional_equation(k: int, order: int) -> IdentityReport:
    """sum S_{k,3}(n) x^n against the arc-length-3 substitution.

    Right side: 1/u(x) * sum f_k(2n,0) ((x-x^3)/u(x))^(2n) with
    u(x) = 1 - x + x^2 + x^3 - x^4.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    lhs = TruncatedSeries(
        [structures.s_k3(k, n) for n in range(order + 1)], order
    )
    u_inv = TruncatedSeries([1, -1, 1, 1, -1], order).reciprocal()
    w = TruncatedSeries([0, 1, 0, -1], order) * u_inv
    rhs = u_inv * _even_part(k, order).compose(w)
    return _compare(f"functional(k={k})", lhs, rhs)


def verify_phi_identity(n: int, order: int) -> IdentityReport:
    """sum_b lam(n+2b, b) x^b == (1/(1-x-x^2)) ((1+x)/(1-x-x^2))^n."""
    if n < 0:
        raise ValueError(f"shift must be nonnegative, got {n}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    lhs = TruncatedSeries(
        [structures.lambda_weight(n + 2 * b, b) for b in range(order + 1)], order
    )
    phi0 = TruncatedSeries([1, -1, -1], order).reciprocal()
    ratio = TruncatedSeries([1, 1], order) * phi0
    rhs = phi0 * ratio.pow(n)
    return _compare(f"phi(n={n})", lhs, rhs)


def verify_bessel_egf(k: int, order: int) -> IdentityReport:
    """Determinant form of the exponential generating functions.

    det[I_{i-j}(2x) - I_{i+j}(2x)] over i, j = 1..k-1 must have
    n! [x^n] det = f_k(n, 0), and after multiplying by e^x,
    n! [x^n] (e^x det) = T_k(n).
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    size = k - 1
    matrix = [
        [bessel_i(i - j, order) - bessel_i(i + j, order) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    det = determinant(matrix)
    lhs_f = TruncatedSeries(
        [det[n] * math.factorial(n) for n in range(order + 1)], order
    )
    rhs_f = TruncatedSeries(
        [counting.fk_perfect(k, n) for n in range(order + 1)], order
    )
    report = _compare(f"bessel-det(k={k})", lhs_f, rhs_f)
    if not report.ok:
        return report
    egf = exponential(order) * det
    lhs_t = TruncatedSeries(
        [egf[n] * math.factorial(n) for n in range(order + 1)], order
    )
    rhs_t = TruncatedSeries(
        [counting.tk_total(k, n) for n in range(order + 1)], order
    )
    return _compare(f"bessel-egf(k={k})", lhs_t, rhs_t)
