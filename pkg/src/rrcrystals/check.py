"""End-to-end comparison of the two sides of the partition identity."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import reference
from .productside import product_side_series
from .rootsystem import AffineType
from .sumside import count_d_series


@dataclass(frozen=True)
class CheckReport:
    type: AffineType
    p_max: int
    c: tuple[int, ...]  # index p, 0..p_max
    d: tuple[int, ...]
    reference: tuple[int, ...] | None = field(default=None)  # p = 1..min(p_max, 60)

    @property
    def first_mismatch(self) -> int | None:
        for p in range(self.p_max + 1):
            if self.c[p] != self.d[p]:
                return p
            if self.reference is not None and 1 <= p <= len(self.reference):
                if self.c[p] != self.reference[p - 1]:
                    return p
        return None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def verdict(self) -> str:
        if self.passed:
            ref = " and reference table" if self.reference is not None else ""
            return f"{self.type.value}: pass, c(p) = d(p){ref} for p <= {self.p_max}"
        p = self.first_mismatch
        return (f"{self.type.value}: FAIL at p = {p}: c = {self.c[p]}, d = {self.d[p]}"
                + (f", reference = {self.reference[p - 1]}"
                   if self.reference is not None and 1 <= p <= len(self.reference) else ""))

    def rows(self) -> list[list]:
        out = []
        for p in range(1, self.p_max + 1):
            ref = ""
            if self.reference is not None and p <= len(self.reference):
                ref = self.reference[p - 1]
            out.append([self.type.value, p, self.c[p], self.d[p], ref])
        return out

    def as_dict(self) -> dict:
        return {
            "type": self.type.value,
            "p_max": self.p_max,
            "c": list(self.c),
            "d": list(self.d),
            "reference": None if self.reference is None else list(self.reference),
            "pass": self.passed,
            "first_mismatch": self.first_mismatch,
        }


def run_check(type: AffineType | str, p_max: int) -> CheckReport:
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    t = AffineType.parse(type)
    c = tuple(product_side_series(t, p_max).coeffs)
    d = tuple(count_d_series(t, p_max))
    ref = None
    if p_max <= 60:
        ref = reference.partition_counts(t)[:p_max]
    return CheckReport(t, p_max, c, d, ref)
