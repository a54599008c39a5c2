"""Counting by number of parts: recurrences for the three equinumerous classes,
plus the triangular-number recurrence for C_4(n) and the closed recurrence
for two-part 4-duplicate partitions.

All tables are filled bottom-up.  Out-of-range cells (n < 0 or k < 0)
read as 0 and ``cell(0, 0) == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .partitions import ClassSpec, Partition
from .series import triangular_numbers


@dataclass(frozen=True)
class CountTable:
    kind: str
    s: int
    max_n: int
    max_k: int
    cells: tuple[tuple[int, ...], ...]
    layers: dict = field(default_factory=dict, compare=False)

    def cell(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            return 0
        if n > self.max_n or k > self.max_k:
            raise IndexError(f"({n}, {k}) is outside the computed {self.max_n}x{self.max_k} table")
        return self.cells[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        """Cells k = 1..max_k of row n."""
        return self.cells[n][1:]

    def row_sum(self, n: int) -> int:
        # complete only when max_k >= n
        return sum(self.cells[n])

    def layer(self, ell: int, n: int, k: int) -> int:
        """Congruent tables only: count with smallest part ``ell`` (``s+1``: all parts > s)."""
        if n < 0 or k < 0:
            return 0
        return self.layers[ell][n][k]


def _check(s, N, K):
    if s < 4 or s % 2:
        raise ValueError(f"s must be an even integer >= 4, got {s}")
    if N < 0 or K < 0:
        raise ValueError("table bounds must be non-negative")


def _grid(N, K):
    g = [[0] * (K + 1) for _ in range(N + 1)]
    g[0][0] = 1
    return g


def _get(g, n, k):
    return g[n][k] if n >= 0 and k >= 0 else 0


def _freeze(g):
    return tuple(tuple(r) for r in g)


def m_table(s: int, N: int, K: int) -> CountTable:
    """M_s(n,k): strip the 1's (a multiplicity 0 or 1 mod s) and lower every other part by one."""
    _check(s, N, K)
    g = _grid(N, K)
    for n in range(1, N + 1):
        for k in range(1, K + 1):
            g[n][k] = sum(_get(g, n - k, k - ell)
                          for ell in range(0, k + 1) if ell % s in (0, 1))
    return CountTable("modular", s, N, K, _freeze(g))


def c_table(s: int, N: int, K: int) -> CountTable:
    """C_s(n,k) via the smallest-part dissection.

    Layers are kept for every smallest part ell in {1, 3, .., s-1, s}
    and for ``s+1`` (every part exceeds s).
    """
    _check(s, N, K)
    smallest = list(range(1, s, 2)) + [s]
    g = _grid(N, K)
    lay = {ell: [[0] * (K + 1) for _ in range(N + 1)] for ell in smallest + [s + 1]}
    for n in range(1, N + 1):
        for k in range(1, K + 1):
            total = 0
            for ell in smallest:
                v = _get(g, n - ell, k - 1)
                if n - ell >= 0:
                    v -= sum(lay[i][n - ell][k - 1] for i in smallest if i % 2 and i < ell)
                lay[ell][n][k] = v
                total += v
            v = _get(g, n - s * k, k)
            lay[s + 1][n][k] = v
            g[n][k] = total + v
    return CountTable("congruent", s, N, K, _freeze(g),
                      {ell: _freeze(t) for ell, t in lay.items()})


@dataclass(frozen=True)
class AlphaSet:
    """Partitions into distinct parts at most s/2 - 1, the empty one included."""

    s: int
    members: tuple[Partition, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def alpha_set(s: int) -> AlphaSet:
    top = s // 2 - 1
    out = []
    for r in range(top + 1):
        for combo in combinations(range(top, 0, -1), r):
            out.append(Partition.from_parts(combo))
    return AlphaSet(s, tuple(out))


def d_table(s: int, N: int, K: int, *, printed_s8_first_term: bool = False) -> CountTable:
    """D_s(n,k): either a part s/2 is present (remove it), or the parts below s/2
    form some alpha and the others are shifted down by s/2.

    ``printed_s8_first_term`` swaps the first term D(n - s/2, k - 1) for the
    D(n - 4k, k - 1) of the expanded s = 8 display, to show that the two differ.
    """
    _check(s, N, K)
    if printed_s8_first_term and s != 8:
        raise ValueError("the printed first-term variant exists only for s = 8")
    alphas = [(a.weight, a.length) for a in alpha_set(s)]
    h = s // 2
    g = _grid(N, K)
    for n in range(1, N + 1):
        for k in range(1, K + 1):
            first = _get(g, n - 4 * k, k - 1) if printed_s8_first_term else _get(g, n - h, k - 1)
            g[n][k] = first + sum(_get(g, n - h * (k - ln) - w, k - ln) for w, ln in alphas)
    return CountTable("duplicate", s, N, K, _freeze(g))


def table_for(c: ClassSpec, N: int, K: int) -> CountTable:
    builders = {"modular": m_table, "congruent": c_table, "duplicate": d_table}
    if c.kind not in builders:
        raise ValueError(f"no (n, k) recurrence for {c.kind}")
    return builders[c.kind](c.s, N, K)


_c4_cache = [1]


def c4_triangular(n: int) -> int:
    """C_4(n) from the signed sum over triangular numbers T_k, k >= 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    while len(_c4_cache) <= n:
        m = len(_c4_cache)
        acc = 0
        for k, t in enumerate(triangular_numbers(m)):
            if k == 0:
                continue
            sign = 1 if (t + 1) % 2 == 0 else -1
            acc += sign * _c4_cache[m - t]
        _c4_cache.append(acc)
    return _c4_cache[n]


def d4_two_parts(n: int) -> int:
    """Number of 4-duplicate partitions of n into exactly two parts."""
    if n < 0:
        raise ValueError("n must be non-negative")
    base = (0, 0, 0, 1, 2, 2, 2)
    if n <= 6:
        return base[n]
    # D(n,2) = D(n-4,2) + 2, stepped down into 3..6
    j = -(-(n - 6) // 4)
    return base[n - 4 * j] + 2 * j
