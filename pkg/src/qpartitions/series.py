"""Truncated power series in q with exact integer coefficients.

Series carry an explicit order ``N``: coefficients of q^0..q^N are
known, everything above is unknown.  Combining two series truncates to
the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import ClassSpec


class NonUnitConstantTerm(ArithmeticError):
    pass


class UnsupportedClass(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise ValueError("a truncated series needs order >= 0")
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, coeff: int, power: int, order: int) -> TruncatedSeries:
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries([other], self.order)
        if isinstance(other, TruncatedSeries):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(other * a for a in self.coeffs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return ts_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return ts_mul(self, ts_invert(other))

    def __pow__(self, k: int):
        if k < 0:
            return ts_invert(self) ** (-k)
        out = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_binomial(self, coeff: int, power: int) -> TruncatedSeries:
        """Multiply by (1 + coeff*q^power) in O(N)."""
        c = list(self.coeffs)
        for n in range(len(c) - 1, power - 1, -1):
            c[n] += coeff * c[n - power]
        return TruncatedSeries(c)

    def div_binomial(self, coeff: int, power: int) -> TruncatedSeries:
        """Divide by (1 + coeff*q^power), power >= 1, in O(N)."""
        if power < 1:
            raise NonUnitConstantTerm("binomial divisor must have positive q-power")
        c = list(self.coeffs)
        for n in range(power, len(c)):
            c[n] -= coeff * c[n - power]
        return TruncatedSeries(c)

    def substitute_neg_q(self) -> TruncatedSeries:
        """The series with q replaced by -q."""
        return TruncatedSeries(a if n % 2 == 0 else -a for n, a in enumerate(self.coeffs))

    def dilate(self, d: int) -> TruncatedSeries:
        """The series with q replaced by q^d, keeping the order."""
        c = [0] * len(self.coeffs)
        for n in range(0, len(c)):
            if n * d < len(c):
                c[n * d] = self.coeffs[n]
        return TruncatedSeries(c)

    def __str__(self):
        terms = [f"{a}*q^{n}" for n, a in enumerate(self.coeffs) if a]
        return (" + ".join(terms) or "0") + f" + O(q^{self.order + 1})"


def ts_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(x.order, y.order)
    a, b = x.coeffs, y.coeffs
    out = [0] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
    return TruncatedSeries(out)


def ts_invert(x: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse by forward recurrence; the constant term must be +1 or -1."""
    a0 = x.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a0} is not a unit")
    a = x.coeffs
    y = [0] * len(a)
    y[0] = a0  # 1/a0 == a0 for a0 = +-1
    for n in range(1, len(a)):
        acc = 0
        for k in range(1, n + 1):
            if a[k]:
                acc += a[k] * y[n - k]
        y[n] = -a0 * acc
    return TruncatedSeries(y)


@dataclass(frozen=True)
class FactorSpec:
    """The product over i >= 0 of (1 + sign*coefficient*q^(offset + i*step)).

    ``count`` limits the number of factors; ``None`` means all factors
    with exponent up to the truncation order.
    """

    coefficient: int
    offset: int
    step: int
    sign: int = -1
    count: int | None = None

    def __post_init__(self):
        if self.offset < 1 or self.step < 1:
            raise ValueError("offset and step must be positive")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def exponents(self, order: int):
        i = 0
        while self.count is None or i < self.count:
            e = self.offset + i * self.step
            if e > order:
                return
            yield e
            i += 1


def qpoch(coefficient: int, offset: int, step: int, count: int | None = None) -> FactorSpec:
    """(a q^offset; q^step)_count with a = coefficient, in the usual minus-sign form."""
    return FactorSpec(coefficient, offset, step, -1, count)


def pochhammer_product(factors: Sequence[FactorSpec], order: int,
                       denominators: Sequence[FactorSpec] = ()) -> TruncatedSeries:
    """Exact truncated product of ``factors`` divided by ``denominators``.

    Factors with exponent above ``order`` equal 1 modulo q^(order+1) and
    are skipped.
    """
    out = TruncatedSeries.one(order)
    for f in factors:
        c = f.sign * f.coefficient
        for e in f.exponents(order):
            out = out.mul_binomial(c, e)
    for f in denominators:
        c = f.sign * f.coefficient
        for e in f.exponents(order):
            out = out.div_binomial(c, e)
    return out


def euler(step: int, sign: int = -1) -> FactorSpec:
    # (q^step; q^step)_inf, or (-q^step; q^step)_inf with sign=+1
    return FactorSpec(1, step, step, sign)


def pentagonal(order: int) -> TruncatedSeries:
    """(q;q)_inf."""
    return pochhammer_product([euler(1)], order)


def inverse_pentagonal(order: int) -> TruncatedSeries:
    """1/(q;q)_inf, the unrestricted partition numbers."""
    return pochhammer_product([], order, [euler(1)])


def triangular_numbers(limit: int) -> list[int]:
    out, k = [], 0
    while k * (k + 1) // 2 <= limit:
        out.append(k * (k + 1) // 2)
        k += 1
    return out


def theta_psi(sign: int, order: int) -> TruncatedSeries:
    """psi(q) (sign=+1) or psi(-q) (sign=-1) as a sum over triangular numbers."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    c = [0] * (order + 1)
    for t in triangular_numbers(order):
        c[t] = sign ** t
    return TruncatedSeries(c)


def theta_psi_product(sign: int, order: int) -> TruncatedSeries:
    """The product forms: (q^2;q^2)/(q;q^2) for psi(q) and (q;q)(q^4;q^4)/(q^2;q^2) for psi(-q)."""
    if sign == 1:
        return pochhammer_product([euler(2)], order, [qpoch(1, 1, 2)])
    if sign == -1:
        return pochhammer_product([euler(1), euler(4)], order, [euler(2)])
    raise ValueError("sign must be +1 or -1")


def class_genfun(c: ClassSpec, order: int) -> TruncatedSeries:
    """Product generating function for a partition class, truncated at ``order``."""
    N = order
    kind = c.kind
    if kind == "unrestricted":
        return inverse_pentagonal(N)
    if kind == "modular":
        # (-q;q) / (q^s;q^s)
        return pochhammer_product([euler(1, +1)], N, [euler(c.s)])
    if kind == "congruent":
        # 1 / ((q;q^2)(q^s;q^s))
        return pochhammer_product([], N, [qpoch(1, 1, 2), euler(c.s)])
    if kind == "duplicate":
        # (-q;q) / ((-q^{s/2};q^{s/2})(q^{s/2};q^{s/2}))
        h = c.s // 2
        return pochhammer_product([euler(1, +1)], N, [euler(h, +1), euler(h)])
    if kind == "congruent_distinct":
        # prod (1-q^{t(2n-1)})(1-q^{tsn}) / ((1-q^{2n-1})(1-q^{sn}))
        s, t = c.s, c.t
        return pochhammer_product([qpoch(1, t, 2 * t), euler(t * s)], N,
                                  [qpoch(1, 1, 2), euler(s)])
    if kind == "eclass":
        # (q^2;q^2)(q^t;q^t)(q^{ts};q^{ts}) / ((q;q)(q^s;q^s)(q^{2t};q^{2t}))
        s, t = c.s, c.t
        return pochhammer_product([euler(2), euler(t), euler(t * s)], N,
                                  [euler(1), euler(s), euler(2 * t)])
    if kind == "pod":
        return ts_invert(theta_psi(-1, N))
    if kind == "ped":
        # (-q^2;q^2) / (q;q^2)
        return pochhammer_product([euler(2, +1)], N, [qpoch(1, 1, 2)])
    if kind == "two_part_duplicate4":
        # 2q^4/(q^2;q^2)_2 + q^3/(1-q^2)^2
        a = pochhammer_product([], N, [qpoch(1, 2, 2, count=2)]) * TruncatedSeries.monomial(2, 4, N)
        b = pochhammer_product([], N, [qpoch(1, 2, 2, count=1)] * 2) * TruncatedSeries.monomial(1, 3, N)
        return a + b
    raise UnsupportedClass(f"no product generating function for {kind}")


def class_genfun_two_forms(s: int, t: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The congruent-distinct product and the E-class product for the same (s, t)."""
    return (class_genfun(ClassSpec.congruent_distinct(s, t), order),
            class_genfun(ClassSpec.eclass(s, t), order))
