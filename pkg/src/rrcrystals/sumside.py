"""Colored partitions with congruence, initial and difference conditions.

A partition is a sequence of ``(value, color)`` parts, largest first, ending
in the ground part ``(0, phi)``.  Adjacent parts obey
``value_k - value_{k+1} >= M[color_{k+1}, color_k]``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .crystal import GROUND, Crystal, CrystalElement, Kind, build_crystal
from .energy import IntegrityError, difference_matrix
from .rootsystem import AffineType

ORACLE_BOUND = 25


class BudgetError(ValueError):
    """The brute-force enumerator was asked for a weight above its bound."""


class ColoredPart(NamedTuple):
    value: int
    color: CrystalElement

    def __str__(self) -> str:
        return f"{self.value}^{self.color.name}"


GROUND_PART = ColoredPart(0, GROUND)


@dataclass(frozen=True)
class ColoredPartition:
    parts: tuple[ColoredPart, ...]

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


def gamma(type: AffineType | str, b: CrystalElement) -> int:
    """Residue class mod ht(delta) that every part of color ``b`` lies in."""
    hd = build_crystal(type).config.ht_delta
    return (-b.ht_wt) % hd


def congruence_table(type: AffineType | str) -> dict[int, list[CrystalElement]]:
    crystal = build_crystal(type)
    hd = crystal.config.ht_delta
    table: dict[int, list[CrystalElement]] = {r: [] for r in range(hd)}
    for b in crystal.elements:
        table[gamma(type, b)].append(b)
    return table


def forbidden_parts(type: AffineType | str) -> set[ColoredPart]:
    """All forbidden colored parts with nonnegative value.

    These are ``0^b`` and ``(-ht wt b)^b`` for ``b != phi``; the positive ones
    are exactly ``ht(alpha)^{x_{-alpha}}``.
    """
    out = set()
    for b in build_crystal(type).elements:
        if b == GROUND:
            continue
        out.add(ColoredPart(0, b))
        if -b.ht_wt >= 0:
            out.add(ColoredPart(-b.ht_wt, b))
    return out


def _as_parts(parts) -> list[ColoredPart]:
    if isinstance(parts, ColoredPartition):
        parts = parts.parts
    return [p if isinstance(p, ColoredPart) else ColoredPart(*p) for p in parts]


def is_admissible(type: AffineType | str, parts) -> bool:
    crystal = build_crystal(type)
    m = difference_matrix(type).entries
    parts = _as_parts(parts)
    if not parts or parts[-1] != GROUND_PART:
        return False
    if any(p.value <= 0 for p in parts[:-1]):
        return False
    hd = crystal.config.ht_delta
    for p in parts:
        if p.color not in crystal.order_index:
            return False
        if (p.value + p.color.ht_wt) % hd:
            return False
        if p.color != GROUND and p.value == -p.color.ht_wt:
            return False
    for upper, lower in zip(parts, parts[1:]):
        bound = m[crystal.order_index[lower.color], crystal.order_index[upper.color]]
        if upper.value - lower.value < bound:
            return False
    return True


@dataclass(frozen=True, eq=False)
class _Tables:
    crystal: Crystal
    m: np.ndarray
    gamma: np.ndarray
    forbidden_value: np.ndarray  # positive forbidden value per color, -1 if none


def _tables(type: AffineType | str) -> _Tables:
    crystal = build_crystal(type)
    hd = crystal.config.ht_delta
    ht = crystal.ht_wt
    forb = np.where(
        np.array([b.kind is Kind.NEG for b in crystal.elements]), -ht, -1)
    return _Tables(crystal, difference_matrix(type).entries, (-ht) % hd, forb)


def count_d_series(type: AffineType | str, p_max: int) -> list[int]:
    """``d(0), ..., d(p_max)`` by a transfer DP over (weight, top value, top color).

    ``count[w, v, b]`` is the number of admissible partitions of weight ``w``
    whose largest part is ``v`` with color ``b``.  A new part ``(v2, b2)`` may
    sit on top of ``(v, b)`` iff ``v <= v2 - M[b, b2]``, so summing over ``v``
    is a lookup in a prefix sum along the value axis.
    """
    if p_max < 0:
        raise ValueError("p_max must be nonnegative")
    t = _tables(type)
    nb = len(t.crystal)
    hd = t.crystal.config.ht_delta
    colors_at = [
        np.flatnonzero((t.gamma == v % hd) & (t.forbidden_value != v))
        for v in range(p_max + 1)
    ]
    count = np.zeros((p_max + 1, p_max + 1, nb), dtype=np.int64)
    prefix = np.zeros_like(count)
    count[0, 0, t.crystal.ground] = 1
    prefix[0] = np.cumsum(count[0], axis=0)
    rows = np.arange(nb)[:, None]
    limit = np.iinfo(np.int64).max // (nb * (p_max + 1))
    for w2 in range(1, p_max + 1):
        for v2 in range(1, w2 + 1):
            top = colors_at[v2]
            if top.size == 0:
                continue
            reach = v2 - t.m[:, top]  # largest admissible lower value
            ok = reach >= 0
            gathered = prefix[w2 - v2][np.clip(reach, 0, p_max), rows]
            count[w2, v2, top] = np.where(ok, gathered, 0).sum(axis=0)
        prefix[w2] = np.cumsum(count[w2], axis=0)
        if prefix[w2].max(initial=0) > limit:
            raise OverflowError("partition counts exceed the int64 guard")
    return [int(x) for x in count.sum(axis=(1, 2))]


def enumerate_partitions(type: AffineType | str, p: int,
                         bound: int = ORACLE_BOUND) -> list[ColoredPartition]:
    """Every admissible partition of weight exactly ``p``, by depth-first search.

    Independent of the DP: parts are grown upward from the ground, candidates
    are screened pairwise, and each finished sequence is re-checked with
    :func:`is_admissible`.
    """
    if p > bound:
        raise BudgetError(f"p={p} exceeds the enumeration bound {bound}")
    if p < 0:
        return []
    crystal = build_crystal(type)
    m = difference_matrix(type).entries
    forb = forbidden_parts(type)
    hd = crystal.config.ht_delta
    by_residue = congruence_table(type)
    out: list[ColoredPartition] = []

    def grow(stack: list[ColoredPart], remaining: int) -> None:
        if remaining == 0:
            parts = tuple(reversed(stack))
            if not is_admissible(type, parts):
                raise IntegrityError(f"enumerator produced inadmissible {parts}")
            out.append(ColoredPartition(parts))
            return
        lower = stack[-1]
        li = crystal.order_index[lower.color]
        for v in range(max(lower.value, 1), remaining + 1):
            for b in by_residue[v % hd]:
                if v - lower.value < m[li, crystal.order_index[b]]:
                    continue
                part = ColoredPart(v, b)
                if part in forb:
                    continue
                stack.append(part)
                grow(stack, remaining - v)
                stack.pop()

    grow([GROUND_PART], p)
    return out


def reconstruct_lambda(type: AffineType | str, parts) -> list[int]:
    """Undo the shift ``pi_k = ht(delta) * lambda_k - ht wt(b_k)``."""
    hd = build_crystal(type).config.ht_delta
    out = []
    for p in _as_parts(parts):
        q, r = divmod(p.value + p.color.ht_wt, hd)
        if r:
            raise IntegrityError(f"{p} does not lift to an integral part")
        out.append(q)
    return out


def pi_from_lambda(type: AffineType | str,
                   parts: Sequence[tuple[int, CrystalElement]]) -> list[ColoredPart]:
    """Forward map ``lambda_k^{b_k} -> (ht(delta) lambda_k - ht wt b_k)^{b_k}``."""
    hd = build_crystal(type).config.ht_delta
    return [ColoredPart(hd * lam - b.ht_wt, b) for lam, b in parts]
