"""Partitions, partition classes and brute-force counting.

A :class:`Partition` is stored in frequency form: a tuple of
``(part, multiplicity)`` pairs with parts strictly decreasing.  Every
counting function here works by exhaustive enumeration, so the results
serve as the reference against which the product formulas and the
recurrences are checked.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Iterator, Mapping

Entries = tuple[tuple[int, int], ...]


class InvalidClassSpec(ValueError):
    """Raised when a partition class is built with out-of-range parameters."""


class PartitionSyntaxError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """A partition in frequency form, parts strictly decreasing.

    >>> p = Partition.from_parts([1, 3, 1, 2, 2, 2])
    >>> p
    Partition('3,2^3,1^2')
    >>> p.weight, p.length
    (11, 6)
    """

    entries: Entries = ()

    def __post_init__(self):
        last = None
        for part, mult in self.entries:
            if part < 1 or mult < 1:
                raise ValueError(f"non-positive part or multiplicity in {self.entries!r}")
            if last is not None and part >= last:
                raise ValueError(f"parts not strictly decreasing in {self.entries!r}")
            last = part

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        counts = Counter(parts)
        return cls.from_multiplicities(counts.items())

    @classmethod
    def from_multiplicities(cls, pairs: Iterable[tuple[int, int]] | Mapping[int, int]) -> Partition:
        """Build from (part, multiplicity) pairs, adding up repeated parts.

        Pairs with multiplicity zero are dropped.
        """
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        total: dict[int, int] = {}
        for part, mult in pairs:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for part {part}")
            if mult:
                total[part] = total.get(part, 0) + mult
        return cls(tuple(sorted(total.items(), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the exponent notation used for partition literals, e.g. ``"3,2^3,1"``."""
        body = re.sub(r"\s+", "", text)
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if not body:
            return cls()
        pairs = []
        for token in body.split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if not m:
                raise PartitionSyntaxError(f"cannot parse {token!r} in {text!r}")
            part, mult = int(m.group(1)), int(m.group(2) or 1)
            if part < 1 or mult < 1:
                raise PartitionSyntaxError(f"parts and multiplicities must be positive: {token!r}")
            pairs.append((part, mult))
        return cls.from_multiplicities(pairs)

    @property
    def weight(self) -> int:
        return sum(p * m for p, m in self.entries)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def parts(self) -> tuple[int, ...]:
        """The parts written out with repetition, weakly decreasing."""
        return tuple(p for p, m in self.entries for _ in range(m))

    def multiplicity(self, part: int) -> int:
        for p, m in self.entries:
            if p == part:
                return m
        return 0

    def union(self, other: Partition) -> Partition:
        return Partition.from_multiplicities(self.entries + other.entries)

    def __str__(self):
        if not self.entries:
            return "()"
        return ",".join(str(p) if m == 1 else f"{p}^{m}" for p, m in self.entries)

    def __repr__(self):
        return f"Partition({str(self)!r})"


# --------------------------------------------------------------------------
# classes

_KINDS = (
    "modular", "congruent", "duplicate", "congruent_distinct", "eclass",
    "vclass", "wclass", "pod", "ped", "unrestricted", "two_part_duplicate4",
)


@dataclass(frozen=True)
class ClassSpec:
    """A named family of partitions together with its parameters.

    Use the constructors (``ClassSpec.modular(4)`` etc.) rather than the
    raw initializer; both validate the parameters.
    """

    kind: str
    s: int | None = None
    t: int | None = None
    k: int | None = None
    i: int | None = None
    _residues: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidClassSpec(f"unknown class kind {self.kind!r}")
        if self.kind in ("modular", "congruent", "duplicate", "congruent_distinct", "eclass"):
            if self.s is None or self.s < 4 or self.s % 2:
                raise InvalidClassSpec(f"s must be an even integer >= 4, got {self.s}")
        if self.kind == "congruent_distinct":
            if self.t is None or self.t < 2:
                raise InvalidClassSpec(f"t must be >= 2, got {self.t}")
        if self.kind == "eclass":
            if self.t is None or self.t < 3:
                raise InvalidClassSpec(f"t must be >= 3, got {self.t}")
            r = self.t % self.s
            if r % 2 == 0 and r != 0:
                raise InvalidClassSpec(f"t={self.t} is congruent to {r} mod {self.s}")
            res = {0} | {self.t * (2 * j + 1) % (self.t * self.s) for j in range(self.s // 2)}
            object.__setattr__(self, "_residues", frozenset(res))
        if self.kind in ("vclass", "wclass"):
            if self.k is None or self.i is None or not 0 < self.i <= self.k:
                raise InvalidClassSpec(f"need 0 < i <= k, got k={self.k}, i={self.i}")

    @classmethod
    def modular(cls, s: int) -> ClassSpec:
        return cls("modular", s=s)

    @classmethod
    def congruent(cls, s: int) -> ClassSpec:
        return cls("congruent", s=s)

    @classmethod
    def duplicate(cls, s: int) -> ClassSpec:
        return cls("duplicate", s=s)

    @classmethod
    def congruent_distinct(cls, s: int, t: int) -> ClassSpec:
        return cls("congruent_distinct", s=s, t=t)

    @classmethod
    def eclass(cls, s: int, t: int) -> ClassSpec:
        return cls("eclass", s=s, t=t)

    @classmethod
    def vclass(cls, k: int, i: int) -> ClassSpec:
        return cls("vclass", k=k, i=i)

    @classmethod
    def wclass(cls, k: int, i: int) -> ClassSpec:
        return cls("wclass", k=k, i=i)

    @classmethod
    def pod(cls) -> ClassSpec:
        return cls("pod")

    @classmethod
    def ped(cls) -> ClassSpec:
        return cls("ped")

    @classmethod
    def unrestricted(cls) -> ClassSpec:
        return cls("unrestricted")

    @classmethod
    def two_part_duplicate4(cls) -> ClassSpec:
        """4-duplicate partitions with exactly two parts."""
        return cls("two_part_duplicate4")

    @property
    def eclass_residues(self) -> frozenset:
        """Forbidden residues mod t*s for an E-class: 0 and t(2r+1)."""
        return self._residues

    def __str__(self):
        args = [f"{n}={getattr(self, n)}" for n in ("s", "t", "k", "i") if getattr(self, n) is not None]
        return f"{self.kind}({', '.join(args)})"


def _bad_even_residue(part: int, s: int) -> bool:
    # part is congruent to one of 2, 4, ..., s-2 mod s
    r = part % s
    return r % 2 == 0 and r != 0


def _predicate(c: ClassSpec) -> Callable[[Entries], bool]:
    kind = c.kind
    if kind == "unrestricted":
        return lambda e: True
    if kind == "modular":
        s = c.s
        return lambda e: all(m % s in (0, 1) for _, m in e)
    if kind == "congruent":
        s = c.s
        return lambda e: not any(_bad_even_residue(p, s) for p, _ in e)
    if kind == "duplicate":
        h = c.s // 2
        return lambda e: all(m == 1 or p % h == 0 for p, m in e)
    if kind == "congruent_distinct":
        s, t = c.s, c.t
        return lambda e: all(m < t and not _bad_even_residue(p, s) for p, m in e)
    if kind == "eclass":
        s, ts, bad = c.s, c.t * c.s, c.eclass_residues
        return lambda e: not any(_bad_even_residue(p, s) or p % ts in bad for p, _ in e)
    if kind == "vclass":
        mod = 4 * c.k
        bad = {0, (2 * c.i - 1) % mod, -(2 * c.i - 1) % mod}
        return lambda e: not any(p % 4 == 2 or p % mod in bad for p, _ in e)
    if kind == "wclass":
        return lambda e: _w_condition(e, c.k, c.i)
    if kind == "pod":
        return lambda e: all(m == 1 or p % 2 == 0 for p, m in e)
    if kind == "ped":
        return lambda e: all(m == 1 or p % 2 == 1 for p, m in e)
    if kind == "two_part_duplicate4":
        return lambda e: sum(m for _, m in e) == 2 and all(m == 1 or p % 2 == 0 for p, m in e)
    raise InvalidClassSpec(kind)  # pragma: no cover


def _w_condition(entries: Entries, k: int, i: int) -> bool:
    if any(p % 2 == 1 and m > 1 for p, m in entries):
        return False
    seq = [p for p, m in entries for _ in range(m)]
    if sum(1 for p in seq if p <= 2) > i - 1:
        return False
    # only pairs whose lower index exists in the sequence are constrained
    for j in range(len(seq) - k + 1):
        a, b = seq[j], seq[j + k - 1]
        gap = a - b
        if (a % 2 == 1 and gap < 2) or (a % 2 == 0 and gap <= 2):
            return False
    return True


def is_member(partition: Partition, c: ClassSpec) -> bool:
    return _predicate(c)(partition.entries)


# --------------------------------------------------------------------------
# enumeration

def _gen_entries(n: int, largest: int) -> Iterator[Entries]:
    # lexicographically descending: larger leading part first, then more copies of it
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for m in range(n // p, 0, -1):
            for rest in _gen_entries(n - p * m, p - 1):
                yield ((p, m),) + rest


def _gen_entries_len(n: int, k: int, largest: int) -> Iterator[Entries]:
    if k == 0:
        if n == 0:
            yield ()
        return
    if n < k:
        return
    # leading part p with k parts total needs p <= n - (k - 1)
    for p in range(min(largest, n - k + 1), 0, -1):
        if p * k < n:
            break
        for m in range(min(k, n // p), 0, -1):
            for rest in _gen_entries_len(n - p * m, k - m, p - 1):
                yield ((p, m),) + rest


_CACHE_LIMIT = 32


@lru_cache(maxsize=None)
def _cached_entries(n: int) -> tuple[Entries, ...]:
    return tuple(_gen_entries(n, n))


def _entries(n: int) -> Iterable[Entries]:
    if n <= _CACHE_LIMIT:
        return _cached_entries(n)
    return _gen_entries(n, n)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in lexicographically descending order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2^2', '2,1^2', '1^4']
    """
    if n < 0:
        return
    for e in _entries(n):
        yield Partition(e)


def enumerate_partitions_with_length(n: int, k: int) -> Iterator[Partition]:
    """Yield the partitions of ``n`` into exactly ``k`` parts, same order."""
    if n < 0 or k < 0:
        return
    for e in _gen_entries_len(n, k, n):
        yield Partition(e)


def count(n: int, c: ClassSpec) -> int:
    """Number of partitions of ``n`` in class ``c``, by exhaustive filtering.

    Negative ``n`` gives 0.
    """
    if n < 0:
        return 0
    pred = _predicate(c)
    return sum(1 for e in _entries(n) if pred(e))


def count_with_length(n: int, k: int, c: ClassSpec) -> int:
    if n < 0 or k < 0:
        return 0
    pred = _predicate(c)
    return sum(1 for e in _gen_entries_len(n, k, n) if pred(e))


def members(n: int, c: ClassSpec) -> list[Partition]:
    pred = _predicate(c)
    return [Partition(e) for e in _entries(n) if pred(e)] if n >= 0 else []


def refined_duplicate_counts(n: int, s: int) -> dict[tuple[int, int], int]:
    """Count s-duplicate partitions of ``n`` by (number of parts, parts not divisible by s/2)."""
    c = ClassSpec.duplicate(s)
    h = s // 2
    out: Counter = Counter()
    pred = _predicate(c)
    for e in _entries(n):
        if pred(e):
            r = sum(m for _, m in e)
            l = sum(m for p, m in e if p % h)
            out[(r, l)] += 1
    return dict(out)


def _distinct_parts(n: int, largest: int, gap: int) -> Iterator[tuple[int, ...]]:
    # strictly decreasing sequences with consecutive differences >= gap
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _distinct_parts(n - p, p - gap, gap):
            yield (p,) + rest


def alladi_weight_polynomials(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Both sides of Alladi's weighted identity as coefficient lists in ``c``.

    The first polynomial sums ``c**len`` over partitions of ``n`` into
    distinct parts.  The second sums ``c**len * (1 + c)**nu`` over
    partitions with gaps of at least 3, where ``nu`` counts the gaps that
    exceed 3 (the last part is compared with -1).
    """
    left = [0] * (n + 1)
    for seq in _distinct_parts(n, n, 1):
        left[len(seq)] += 1
    right = [0] * (n + 1)
    for seq in _distinct_parts(n, n, 3):
        ext = seq + (-1,)
        nu = sum(1 for a, b in zip(ext, ext[1:]) if a - b > 3)
        # c**len * (1+c)**nu
        for j in range(nu + 1):
            right[len(seq) + j] += comb(nu, j)
    return _trim(left), _trim(right)


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)
