"""Overpartitions: the first occurrence of each part value may carry an overline.

The counting functions for the modular, congruent and duplicate
variants are given only as products, so those products are the
definitions used here.  Each has two equivalent product forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .partitions import Partition, enumerate_partitions
from .series import FactorSpec, TruncatedSeries, euler, pochhammer_product, qpoch


@dataclass(frozen=True, order=True)
class Overpartition:
    # (part, multiplicity, overlined), parts strictly decreasing
    entries: tuple[tuple[int, int, bool], ...]

    def __post_init__(self):
        parts = [p for p, _, _ in self.entries]
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be strictly decreasing")
        if any(m < 1 or p < 1 for p, m, _ in self.entries):
            raise ValueError("parts and multiplicities must be positive")

    @property
    def weight(self) -> int:
        return sum(p * m for p, m, _ in self.entries)

    @property
    def underlying(self) -> Partition:
        return Partition.from_multiplicities((p, m) for p, m, _ in self.entries)

    def __str__(self):
        out = []
        for p, m, bar in self.entries:
            if bar:
                out.append(f"[{p}]")
                m -= 1
            if m:
                out.append(str(p) if m == 1 else f"{p}^{m}")
        return ",".join(out) or "()"


def enumerate_overpartitions(n: int) -> Iterator[Overpartition]:
    """Every overpartition of n, once each."""
    for lam in enumerate_partitions(n):
        for marks in product((False, True), repeat=len(lam.entries)):
            yield Overpartition(tuple((p, m, b) for (p, m), b in zip(lam.entries, marks)))


def overpartition_genfun(order: int) -> TruncatedSeries:
    """(-q;q) / (q;q)."""
    return pochhammer_product([euler(1, +1)], order, [euler(1)])


KINDS = ("modular", "congruent", "duplicate")


def _doubled(step: int) -> FactorSpec:
    # (-2 q^step; q^step)_inf
    return FactorSpec(2, step, step, +1)


def over_genfun(kind: str, s: int, form: str, order: int) -> TruncatedSeries:
    if s < 4 or s % 2:
        raise ValueError(f"s must be an even integer >= 4, got {s}")
    if form not in ("first", "second"):
        raise ValueError("form must be 'first' or 'second'")
    N, h = order, s // 2
    if kind == "modular":
        if form == "first":
            return pochhammer_product([_doubled(1), euler(s, +1)], N, [euler(s)])
        return pochhammer_product([_doubled(1), euler(2 * s)], N, [euler(s), euler(s)])
    if kind == "congruent":
        if form == "first":
            return pochhammer_product([FactorSpec(1, 1, 2, +1), euler(s, +1)], N,
                                      [qpoch(1, 1, 2), euler(s)])
        return pochhammer_product([euler(2)] * 3 + [euler(2 * s)], N,
                                  [euler(1), euler(1), euler(4), euler(s), euler(s)])
    if kind == "duplicate":
        if form == "first":
            return pochhammer_product([_doubled(1), euler(h, +1)], N, [_doubled(h), euler(h)])
        return pochhammer_product([_doubled(1), euler(s)], N, [_doubled(h), euler(h), euler(h)])
    raise ValueError(f"unknown overpartition kind {kind!r}")
