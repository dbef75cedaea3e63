"""Root data for the seven exceptional affine types.

Roots are integer coefficient vectors over the simple roots.  Finite roots
live over ``alpha_1 .. alpha_n``; affine vectors prepend the ``alpha_0``
coefficient.  Positive roots are generated by reflection closure from the
finite Cartan matrix, never hardcoded.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache


class AffineType(str, enum.Enum):
    G2_1 = "G2_1"
    D4_3 = "D4_3"
    F4_1 = "F4_1"
    E6_2 = "E6_2"
    E6_1 = "E6_1"
    E7_1 = "E7_1"
    E8_1 = "E8_1"

    @classmethod
    def parse(cls, value: str | AffineType) -> AffineType:
        if isinstance(value, AffineType):
            return value
        key = value.strip().upper().replace("(", "_").replace(")", "")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown affine type {value!r}") from None


ALL_TYPES: tuple[AffineType, ...] = tuple(AffineType)


class Length(str, enum.Enum):
    SHORT = "short"
    LONG = "long"


class RootKind(str, enum.Enum):
    ALL_ROOTS = "all"
    SHORT_ONLY = "short"


@dataclass(frozen=True, order=True)
class Root:
    """A root written as ``sum_j coeffs[j] * alpha_j``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c > 0 for c in self.coeffs) and any(c < 0 for c in self.coeffs):
            raise ValueError(f"mixed-sign coefficient vector {self.coeffs}")

    @property
    def ht(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.ht > 0

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coeffs))

    def label(self) -> str:
        """Concatenated absolute coefficients, e.g. ``"2342"``."""
        return "".join(str(abs(c)) for c in self.coeffs)

    @classmethod
    def from_label(cls, label: str, sign: int = 1) -> Root:
        return cls(tuple(sign * int(ch) for ch in label))

    def __repr__(self) -> str:
        body = self.label()
        return f"Root({body})" if self.ht >= 0 else f"Root(-{body})"


@dataclass(frozen=True)
class TypeConfig:
    type: AffineType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    delta_coeffs: tuple[int, ...]
    dual: AffineType
    crystal_root_kind: RootKind
    twist: int
    imaginary_mult: tuple[int, ...]

    @property
    def rank(self) -> int:
        """Number of finite simple roots (affine nodes are 0..rank)."""
        return len(self.cartan)

    @property
    def ht_delta(self) -> int:
        return sum(self.delta_coeffs)

    def mult_imaginary(self, r: int) -> int:
        """Multiplicity of ``r * delta``; indexed cyclically by ``r mod twist``."""
        if r < 1:
            raise ValueError("imaginary roots are r*delta with r >= 1")
        return self.imaginary_mult[r % self.twist]


def _simply_laced(n: int, edges: Sequence[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in a)


# a[i][j] = <h_i, alpha_j>.  Node order is the one under which the coefficient
# vectors of the positive roots are written (Bourbaki for F4 and E6..E8).
_G2_LONG_FIRST = ((2, -1), (-3, 2))
_G2_SHORT_FIRST = ((2, -3), (-1, 2))
_F4_LONG_FIRST = ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))
_F4_SHORT_FIRST = ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))
_E6 = _simply_laced(6, [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)])
_E7 = _simply_laced(7, [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)])
_E8 = _simply_laced(8, [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)])

_CONFIGS = {
    AffineType.G2_1: TypeConfig(
        AffineType.G2_1, _G2_LONG_FIRST, (3, 1), (1, 2, 3),
        AffineType.D4_3, RootKind.ALL_ROOTS, 1, (2,)),
    AffineType.D4_3: TypeConfig(
        AffineType.D4_3, _G2_SHORT_FIRST, (1, 3), (1, 2, 1),
        AffineType.G2_1, RootKind.SHORT_ONLY, 3, (2, 1, 1)),
    AffineType.F4_1: TypeConfig(
        AffineType.F4_1, _F4_LONG_FIRST, (2, 2, 1, 1), (1, 2, 3, 4, 2),
        AffineType.E6_2, RootKind.ALL_ROOTS, 1, (4,)),
    AffineType.E6_2: TypeConfig(
        AffineType.E6_2, _F4_SHORT_FIRST, (1, 1, 2, 2), (1, 2, 3, 2, 1),
        AffineType.F4_1, RootKind.SHORT_ONLY, 2, (4, 2)),
    AffineType.E6_1: TypeConfig(
        AffineType.E6_1, _E6, (1,) * 6, (1, 1, 2, 2, 3, 2, 1),
        AffineType.E6_1, RootKind.ALL_ROOTS, 1, (6,)),
    AffineType.E7_1: TypeConfig(
        AffineType.E7_1, _E7, (1,) * 7, (1, 2, 2, 3, 4, 3, 2, 1),
        AffineType.E7_1, RootKind.ALL_ROOTS, 1, (7,)),
    AffineType.E8_1: TypeConfig(
        AffineType.E8_1, _E8, (1,) * 8, (1, 2, 3, 4, 6, 5, 4, 3, 2),
        AffineType.E8_1, RootKind.ALL_ROOTS, 1, (8,)),
}


def affine_config(type: AffineType | str) -> TypeConfig:
    return _CONFIGS[AffineType.parse(type)]


def _pairing(cartan: Sequence[Sequence[int]], coeffs: Sequence[int], i: int) -> int:
    """<h_i, beta> for beta = sum_j coeffs[j] alpha_j."""
    return sum(cartan[i][j] * c for j, c in enumerate(coeffs))


def _norm(cartan: Sequence[Sequence[int]], sym: Sequence[int], coeffs: Sequence[int]) -> int:
    n = len(coeffs)
    return sum(coeffs[i] * coeffs[j] * sym[i] * cartan[i][j]
               for i in range(n) for j in range(n))


def positive_roots_from_cartan(
    cartan: Sequence[Sequence[int]], max_iter: int = 10_000,
) -> list[tuple[int, ...]]:
    """Positive roots of a finite Cartan matrix by simple-reflection closure.

    Every positive root is reachable from a simple root through simple
    reflections that stay positive, so the positive orbit is the whole set.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    steps = 0
    while frontier:
        steps += 1
        if steps > max_iter:
            raise RuntimeError("root closure did not stabilize; bad Cartan matrix?")
        nxt = []
        for beta in frontier:
            for i in range(n):
                k = _pairing(cartan, beta, i)
                image = tuple(c - k * int(j == i) for j, c in enumerate(beta))
                if all(c >= 0 for c in image) and any(image) and image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def finite_positive_roots(config: TypeConfig) -> tuple[tuple[Root, Length], ...]:
    """All positive roots of the finite part, each tagged short or long."""
    raw = positive_roots_from_cartan(config.cartan)
    norms = {r: _norm(config.cartan, config.symmetrizer, r) for r in raw}
    longest = max(norms.values())
    return tuple(
        (Root(r), Length.LONG if norms[r] == longest else Length.SHORT) for r in raw
    )


@dataclass(frozen=True)
class CrystalRootData:
    rplus: tuple[Root, ...]
    sigma: tuple[int, ...]
    theta: Root


@lru_cache(maxsize=None)
def crystal_root_data(config: TypeConfig) -> CrystalRootData:
    """The roots ``R+``, simple indices ``Sigma`` and ``theta`` used to build B."""
    roots = finite_positive_roots(config)
    if config.crystal_root_kind is RootKind.SHORT_ONLY:
        rplus = tuple(r for r, length in roots if length is Length.SHORT)
    else:
        rplus = tuple(r for r, _ in roots)
    sigma = tuple(
        i + 1 for i in range(config.rank)
        if Root(tuple(int(j == i) for j in range(config.rank))) in rplus
    )
    top = max(r.ht for r in rplus)
    highest = [r for r in rplus if r.ht == top]
    if len(highest) != 1:
        raise RuntimeError(f"no unique highest root in R+ for {config.type}")
    return CrystalRootData(rplus, sigma, highest[0])


def ht_s(coeffs: Sequence[int], s: Sequence[int]) -> int:
    return sum(c * w for c, w in zip(coeffs, s))


def affine_positive_root_heights(
    dual_config: TypeConfig, s: Sequence[int], cutoff: int,
) -> Iterator[tuple[int, int]]:
    """Yield ``(ht_s(alpha), mult(alpha))`` for affine positive roots with ht_s <= cutoff.

    ``s`` has one entry per affine node, ``s[0]`` being node 0.  Real roots of
    twisted types use spacing ``twist * delta`` for long finite roots.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    n = dual_config.rank
    if len(s) != n + 1 or any(w < 1 for w in s):
        raise ValueError(f"specialization vector must have {n + 1} entries >= 1")
    hd = ht_s(dual_config.delta_coeffs, s)
    twisted = dual_config.twist > 1
    for root, length in finite_positive_roots(dual_config):
        h = ht_s(root.coeffs, s[1:])
        step = hd * dual_config.twist if twisted and length is Length.LONG else hd
        # alpha + r*step (r >= 0) and -alpha + r*step (r >= 1)
        k = h
        while k <= cutoff:
            yield k, 1
            k += step
        k = step - h
        while k <= cutoff:
            yield k, 1
            k += step
    r = 1
    while r * hd <= cutoff:
        yield r * hd, dual_config.mult_imaginary(r)
        r += 1
