"""Truncated q-series, Euler products and principal specializations.

Coefficients are Python integers, so arithmetic is exact at any size.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .rootsystem import AffineType, affine_config, affine_positive_root_heights


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{k<=N} coeffs[k] q^k``, exact modulo ``q^{N+1}``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def one(cls, N: int) -> TruncatedSeries:
        return cls((1,) + (0,) * N)

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> TruncatedSeries:
        return cls(tuple(int(c) for c in coeffs))

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: TruncatedSeries) -> None:
        if other.N != self.N:
            raise ValueError(f"truncation mismatch: {self.N} vs {other.N}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        n = self.N
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out))

    def inverse(self) -> TruncatedSeries:
        """Reciprocal of a series whose constant term is +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError(f"constant term {c0} is not a unit")
        n = self.N
        inv = [0] * (n + 1)
        inv[0] = c0
        for k in range(1, n + 1):
            acc = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -c0 * acc
        return TruncatedSeries(tuple(inv))

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return self * other.inverse()

    def times_binomial(self, e: int, power: int) -> TruncatedSeries:
        """Multiply by ``(1 - q^e)^power`` in place of a full product."""
        if e < 1:
            raise ValueError("exponent of q must be positive")
        c = list(self.coeffs)
        n = self.N
        if power >= 0:
            for _ in range(power):
                for k in range(n, e - 1, -1):
                    c[k] -= c[k - e]
        else:
            for _ in range(-power):
                for k in range(e, n + 1):
                    c[k] += c[k - e]
        return TruncatedSeries(tuple(c))


def pochhammer_factor(x: int, y: int, exponent: int, N: int) -> TruncatedSeries:
    """``(q^x; q^y)_infinity ** exponent`` truncated at ``q^N``."""
    if y < 1 or x < 0:
        raise ValueError("need x >= 0 and y >= 1")
    if N < 0:
        raise ValueError("N must be nonnegative")
    if x == 0:
        if exponent < 0:
            raise ZeroDivisionError("(1; q^y) vanishes and cannot be inverted")
        if exponent > 0:
            return TruncatedSeries((0,) * (N + 1))
        return TruncatedSeries.one(N)
    s = TruncatedSeries.one(N)
    k = x
    while k <= N:
        s = s.times_binomial(k, exponent)
        k += y
    return s


def product_of_factors(factors: Iterable[tuple[int, int, int]], N: int) -> TruncatedSeries:
    s = TruncatedSeries.one(N)
    for x, y, e in factors:
        s = s * pochhammer_factor(x, y, e, N)
    return s


def _classes(type: AffineType | str) -> list[tuple[int, int]]:
    from .reference import CONGRUENCE_CLASSES

    return CONGRUENCE_CLASSES[AffineType.parse(type).value]


def multiplicity_a(type: AffineType | str, m: int) -> int:
    """Number of product-side congruence classes containing ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    return sum(1 for r, n in _classes(type) if m % n == r)


def product_side_series(type: AffineType | str, N: int) -> TruncatedSeries:
    """``prod_{m>=1} (1 - q^m)^{-a_m}`` truncated at ``q^N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    s = TruncatedSeries.one(N)
    for m in range(1, N + 1):
        a = multiplicity_a(type, m)
        if a:
            s = s.times_binomial(m, -a)
    return s


def specialized_D(dual_type: AffineType | str, s: Sequence[int], N: int) -> TruncatedSeries:
    """Specialized Weyl-Kac denominator of ``dual_type`` at ``e^{-alpha_i} -> q^{s_i}``."""
    config = affine_config(dual_type)
    out = TruncatedSeries.one(N)
    if N == 0:
        return out
    for h, mult in affine_positive_root_heights(config, s, N):
        out = out.times_binomial(h, mult)
    return out


def principal_vector(type: AffineType | str) -> tuple[int, ...]:
    return (1,) * (affine_config(type).rank + 1)


def level_one_vector(type: AffineType | str) -> tuple[int, ...]:
    """``(Lambda_0(h_i) + 1)_i`` = ``(2, 1, ..., 1)``."""
    return (2,) + (1,) * affine_config(type).rank


def normalized_character_series(type: AffineType | str, N: int) -> TruncatedSeries:
    """Principal specialization of ``e^{-Lambda_0} ch L(Lambda_0)``."""
    dual = affine_config(type).dual
    num = specialized_D(dual, level_one_vector(dual), N)
    den = specialized_D(dual, principal_vector(dual), N)
    if den[0] != 1:
        raise ZeroDivisionError("specialized denominator must start with 1")
    return num / den


def sum_side_series(type: AffineType | str, N: int) -> TruncatedSeries:
    """Character divided by ``(q^{ht delta}; q^{ht delta})``; equals the c-series."""
    hd = affine_config(type).ht_delta
    return normalized_character_series(type, N) / pochhammer_factor(hd, hd, 1, N)
