"""The level-one perfect crystal ``B = B(theta) + B(0)``.

Elements are the ground ``phi``, ``x_alpha`` and ``x_{-alpha}`` for
``alpha`` in ``R+``, and ``r_i`` for each simple index in ``Sigma``.  Arrows
are stored as dense ``(element, node)`` tables; ``-1`` marks an absent arrow.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .rootsystem import AffineType, Root, TypeConfig, affine_config, crystal_root_data


class Kind(enum.IntEnum):
    GROUND = 0
    POS = 1
    MID = 2
    NEG = 3


@dataclass(frozen=True)
class CrystalElement:
    kind: Kind
    root: Root | None = None  # the positive root alpha for POS and NEG
    index: int | None = None  # simple index i for MID

    @property
    def ht_wt(self) -> int:
        """Height of the classical weight."""
        if self.kind is Kind.POS:
            return self.root.ht
        if self.kind is Kind.NEG:
            return -self.root.ht
        return 0

    @property
    def name(self) -> str:
        if self.kind is Kind.GROUND:
            return "phi"
        if self.kind is Kind.MID:
            return f"r{self.index}"
        sign = "+" if self.kind is Kind.POS else "-"
        return sign + self.root.label()

    def __str__(self) -> str:
        return self.name


GROUND = CrystalElement(Kind.GROUND)

_NAME_RE = re.compile(r"^(phi|r(\d+)|([+-])(\d+))$")


def parse_element(name: str) -> CrystalElement:
    """Inverse of :attr:`CrystalElement.name`."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"not a crystal element name: {name!r}")
    if m.group(1) == "phi":
        return GROUND
    if m.group(2):
        return CrystalElement(Kind.MID, index=int(m.group(2)))
    kind = Kind.POS if m.group(3) == "+" else Kind.NEG
    return CrystalElement(kind, root=Root.from_label(m.group(4)))


def x(alpha: Root) -> CrystalElement:
    """``x_alpha`` for a positive or negative root."""
    if alpha.is_positive:
        return CrystalElement(Kind.POS, root=alpha)
    return CrystalElement(Kind.NEG, root=-alpha)


def _signed_root(b: CrystalElement) -> Root | None:
    if b.kind is Kind.POS:
        return b.root
    if b.kind is Kind.NEG:
        return -b.root
    return None


@dataclass(frozen=True, eq=False)
class Crystal:
    type: AffineType
    config: TypeConfig
    theta: Root
    elements: tuple[CrystalElement, ...]
    f: np.ndarray  # f[b, i] -> index of f_i(b) or -1
    e: np.ndarray
    order_index: dict[CrystalElement, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def n_nodes(self) -> int:
        return self.f.shape[1]

    @property
    def ground(self) -> int:
        return self.order_index[GROUND]

    def index(self, b: CrystalElement | str) -> int:
        if isinstance(b, str):
            b = parse_element(b)
        return self.order_index[b]

    def f_i(self, b: CrystalElement, i: int) -> CrystalElement | None:
        j = self.f[self.order_index[b], i]
        return None if j < 0 else self.elements[j]

    def e_i(self, b: CrystalElement, i: int) -> CrystalElement | None:
        j = self.e[self.order_index[b], i]
        return None if j < 0 else self.elements[j]

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.elements]

    @property
    def ht_wt(self) -> np.ndarray:
        return np.array([b.ht_wt for b in self.elements], dtype=np.int64)

    def phi_table(self) -> np.ndarray:
        """phi_i(b) for all b, i as an ``(|B|, n_nodes)`` array."""
        return _chain_lengths(self.f)

    def epsilon_table(self) -> np.ndarray:
        return _chain_lengths(self.e)


def _chain_lengths(arrows: np.ndarray) -> np.ndarray:
    nb, nn = arrows.shape
    out = np.zeros((nb, nn), dtype=np.int64)
    for i in range(nn):
        for b in range(nb):
            k, j = 0, arrows[b, i]
            while j >= 0:
                k += 1
                j = arrows[j, i]
                if k > nb:
                    raise RuntimeError("cyclic i-string")
            out[b, i] = k
    return out


def canonical_order(rplus, sigma) -> list[CrystalElement]:
    """phi, positives lex-descending, r_i ascending, negatives lex-ascending."""
    pos = sorted(rplus, key=lambda r: r.coeffs, reverse=True)
    neg = sorted(rplus, key=lambda r: r.coeffs)
    return (
        [GROUND]
        + [CrystalElement(Kind.POS, root=r) for r in pos]
        + [CrystalElement(Kind.MID, index=i) for i in sorted(sigma)]
        + [CrystalElement(Kind.NEG, root=r) for r in neg]
    )


@lru_cache(maxsize=None)
def build_crystal(type: AffineType | str) -> Crystal:
    config = affine_config(type)
    data = crystal_root_data(config)
    n = config.rank
    elements = canonical_order(data.rplus, data.sigma)
    index = {b: k for k, b in enumerate(elements)}
    signed = {}
    for b in elements:
        r = _signed_root(b)
        if r is not None:
            signed[r.coeffs] = index[b]

    f = np.full((len(elements), n + 1), -1, dtype=np.int64)

    def arrow(src: int, i: int, dst: int) -> None:
        if f[src, i] >= 0:
            raise RuntimeError(f"two {i}-arrows leave {elements[src]}")
        f[src, i] = dst

    # i != 0: x_alpha -> x_{alpha - alpha_i}
    for b in elements:
        r = _signed_root(b)
        if r is None:
            continue
        for i in range(1, n + 1):
            target = tuple(c - int(j == i - 1) for j, c in enumerate(r.coeffs))
            if target in signed:
                arrow(index[b], i, signed[target])
    # x_{alpha_i} -> r_i -> x_{-alpha_i}
    for i in data.sigma:
        simple = tuple(int(j == i - 1) for j in range(n))
        mid = index[CrystalElement(Kind.MID, index=i)]
        arrow(signed[simple], i, mid)
        arrow(mid, i, signed[tuple(-c for c in simple)])
    # i = 0: x_alpha -> x_{alpha + theta} for alpha in R-, alpha != -theta
    theta = data.theta.coeffs
    for r in data.rplus:
        if r == data.theta:
            continue
        target = tuple(t - c for t, c in zip(theta, r.coeffs))
        if target in signed and sum(target) > 0:
            arrow(signed[tuple(-c for c in r.coeffs)], 0, signed[target])
    ground = index[GROUND]
    arrow(signed[tuple(-c for c in theta)], 0, ground)
    arrow(ground, 0, signed[theta])

    e = np.full_like(f, -1)
    for b in range(len(elements)):
        for i in range(n + 1):
            if f[b, i] >= 0:
                e[f[b, i], i] = b
    f.flags.writeable = False
    e.flags.writeable = False
    return Crystal(AffineType.parse(type), config, data.theta, tuple(elements), f, e, index)


def string_stats(crystal: Crystal, b: CrystalElement, i: int) -> tuple[int, int]:
    """``(epsilon_i(b), phi_i(b))``: backward and forward i-string lengths."""
    k = crystal.index(b)
    eps = phi = 0
    j = crystal.e[k, i]
    while j >= 0:
        eps += 1
        j = crystal.e[j, i]
    j = crystal.f[k, i]
    while j >= 0:
        phi += 1
        j = crystal.f[j, i]
    return eps, phi
