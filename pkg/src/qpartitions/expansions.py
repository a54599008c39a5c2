"""Series in q whose coefficients are polynomials in a few marker variables,
and the identity checks built on them.

A :class:`WeightedSeries` with markers ``("z", "b")`` stores, for each
power of q up to its order, a sparse map ``{(z_exp, b_exp): coeff}``.
Marker exponents are never negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .series import TruncatedSeries, pentagonal, pochhammer_product, euler, qpoch, theta_psi


class ArityMismatch(ValueError):
    pass


class InvalidSpecialization(ValueError):
    pass


Exps = tuple[int, ...]


def _add_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


class WeightedSeries:
    __slots__ = ("markers", "terms")

    def __init__(self, markers: tuple[str, ...], terms: Iterable[Mapping[Exps, int]]):
        self.markers = tuple(markers)
        clean = []
        for row in terms:
            r = {}
            for e, v in row.items():
                if len(e) != len(self.markers):
                    raise ArityMismatch(f"exponent {e} does not fit markers {self.markers}")
                if any(x < 0 for x in e):
                    raise ValueError("marker exponents must be non-negative")
                if v:
                    r[tuple(e)] = v
            clean.append(r)
        if not clean:
            raise ValueError("a weighted series needs order >= 0")
        self.terms = tuple(clean)

    @classmethod
    def zero(cls, markers, order):
        return cls(markers, [{} for _ in range(order + 1)])

    @classmethod
    def one(cls, markers, order):
        return cls.monomial(markers, order, 1, 0)

    @classmethod
    def monomial(cls, markers, order, coeff: int, q_power: int, exps: Exps | None = None):
        """coeff * (marker monomial) * q^q_power, truncated at ``order``."""
        exps = tuple(exps) if exps is not None else (0,) * len(markers)
        rows = [{} for _ in range(order + 1)]
        if q_power <= order:
            rows[q_power] = {exps: coeff}
        return cls(markers, rows)

    @classmethod
    def polynomial(cls, markers, order, terms: Iterable[tuple[int, int, Exps]]):
        """Sum of ``(coeff, q_power, exps)`` terms."""
        rows = [{} for _ in range(order + 1)]
        for c, p, e in terms:
            if p <= order:
                e = tuple(e)
                rows[p][e] = rows[p].get(e, 0) + c
        return cls(markers, rows)

    @classmethod
    def from_series(cls, markers, ts: TruncatedSeries):
        zero = (0,) * len(markers)
        return cls(markers, [{zero: a} for a in ts.coeffs])

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    def coefficient(self, n: int, exps: Exps) -> int:
        return self.terms[n].get(tuple(exps), 0)

    def _compatible(self, other):
        if not isinstance(other, WeightedSeries):
            return False
        if other.markers != self.markers:
            raise ArityMismatch(f"markers {self.markers} vs {other.markers}")
        return True

    def __eq__(self, other):
        if not isinstance(other, WeightedSeries):
            return NotImplemented
        return self.markers == other.markers and self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, int):
            other = WeightedSeries.monomial(self.markers, self.order, other, 0)
        if not self._compatible(other):
            return NotImplemented
        n = min(self.order, other.order)
        rows = []
        for i in range(n + 1):
            r = dict(self.terms[i])
            for e, v in other.terms[i].items():
                r[e] = r.get(e, 0) + v
            rows.append(r)
        return WeightedSeries(self.markers, rows)

    __radd__ = __add__

    def __neg__(self):
        return WeightedSeries(self.markers, [{e: -v for e, v in r.items()} for r in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return WeightedSeries(self.markers, [{e: other * v for e, v in r.items()} for r in self.terms])
        if not self._compatible(other):
            return NotImplemented
        n = min(self.order, other.order)
        rows = [{} for _ in range(n + 1)]
        for i in range(n + 1):
            for ea, va in self.terms[i].items():
                for j in range(n + 1 - i):
                    out = rows[i + j]
                    for eb, vb in other.terms[j].items():
                        e = _add_exps(ea, eb)
                        out[e] = out.get(e, 0) + va * vb
        return WeightedSeries(self.markers, rows)

    __rmul__ = __mul__

    def mul_binomial(self, coeff: int, exps: Exps, power: int) -> WeightedSeries:
        """Multiply by (1 + coeff * x^exps * q^power)."""
        rows = [dict(r) for r in self.terms]
        exps = tuple(exps)
        for n in range(self.order, power - 1, -1):
            src = self.terms[n - power]
            dst = rows[n]
            for e, v in src.items():
                k = _add_exps(e, exps)
                dst[k] = dst.get(k, 0) + coeff * v
        return WeightedSeries(self.markers, rows)

    def div_binomial(self, coeff: int, exps: Exps, power: int) -> WeightedSeries:
        """Divide by (1 + coeff * x^exps * q^power); needs power >= 1."""
        if power < 1:
            raise InvalidSpecialization("divisor must have positive q-power")
        rows = [dict(r) for r in self.terms]
        exps = tuple(exps)
        for n in range(power, self.order + 1):
            dst = rows[n]
            for e, v in rows[n - power].items():
                k = _add_exps(e, exps)
                dst[k] = dst.get(k, 0) - coeff * v
        return WeightedSeries(self.markers, rows)

    def specialize(self, values: Mapping[str, int]):
        """Substitute integers for some markers.  Returns a TruncatedSeries once none remain."""
        for name in values:
            if name not in self.markers:
                raise ArityMismatch(f"unknown marker {name!r}")
        keep = [i for i, m in enumerate(self.markers) if m not in values]
        subs = [(i, values[m]) for i, m in enumerate(self.markers) if m in values]
        rows = []
        for r in self.terms:
            out = {}
            for e, v in r.items():
                w = v
                for i, x in subs:
                    w *= x ** e[i]
                k = tuple(e[i] for i in keep)
                out[k] = out.get(k, 0) + w
            rows.append(out)
        if not keep:
            return TruncatedSeries(r.get((), 0) for r in rows)
        return WeightedSeries(tuple(self.markers[i] for i in keep), rows)

    def map_exponents(self, new_markers: tuple[str, ...], fn) -> WeightedSeries:
        """Re-index every monomial through ``fn(exps) -> new_exps``."""
        rows = []
        for r in self.terms:
            out = {}
            for e, v in r.items():
                k = tuple(fn(e))
                out[k] = out.get(k, 0) + v
            rows.append(out)
        return WeightedSeries(new_markers, rows)

    def truncate(self, order: int) -> WeightedSeries:
        return WeightedSeries(self.markers, self.terms[: order + 1])

    def first_difference(self, other: WeightedSeries):
        """(n, exps, mine, theirs) for the lowest differing coefficient, or None."""
        self._compatible(other)
        for n in range(min(self.order, other.order) + 1):
            a, b = self.terms[n], other.terms[n]
            if a != b:
                for e in sorted(set(a) | set(b)):
                    if a.get(e, 0) != b.get(e, 0):
                        return n, e, a.get(e, 0), b.get(e, 0)
        return None

    def rows(self):
        """Canonical, sorted listing: [(n, exps, coeff), ...]."""
        return [(n, e, r[e]) for n, r in enumerate(self.terms) for e in sorted(r)]

    def __repr__(self):
        return f"WeightedSeries({self.markers}, order={self.order}, terms={len(self.rows())})"


def ws_arith(x: WeightedSeries, y: WeightedSeries, op: str) -> WeightedSeries:
    if x.markers != y.markers:
        raise ArityMismatch(f"markers {x.markers} vs {y.markers}")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# s-duplicate partitions refined by number of parts (z) and parts not
# divisible by s/2 (b)

ZB = ("z", "b")


def duplicate_refined_lhs(s: int, N: int) -> WeightedSeries:
    """prod (1 + z b q^n) / ((1 + z b q^{sn/2}) (1 - z q^{sn/2})), as a (z, b) series."""
    _check_s(s)
    h = s // 2
    out = WeightedSeries.one(ZB, N)
    for n in range(1, N + 1):
        if n % h:
            out = out.mul_binomial(1, (1, 1), n)
        else:
            # the (1 + z b q^n) factor cancels against its denominator
            out = out.div_binomial(-1, (1, 0), n)
    return out


def summand_count(s: int, N: int) -> int:
    """Least k whose summand starts above q^N; summands from k on are dropped."""
    k = 1
    while s * k * k // 2 - (s // 2 - 1) <= N:
        k += 1
    return k


def _shifted_block(out, exps, start, step, count, k):
    # (-x q^{start}, -x q^{start+1}, ..., ; q^step)_k  with x = marker monomial
    for j in range(k):
        for t in range(count):
            out = out.mul_binomial(1, exps, start + t + j * step)
    return out


def duplicate_refined_rhs(s: int, N: int, K: int | None = None, *,
                          second_case_denominators: str = "k") -> WeightedSeries:
    """Durfee-square expansion of the same product.

    ``second_case_denominators`` selects how the bracket's second case is
    built: ``"k"`` multiplies the common factor (with k-indexed
    denominators) by (1 - z q^{sk/2})(1 - q^{sk/2}); ``"k-1"`` uses
    (k-1)-indexed denominators directly.  The two are equal as series.
    """
    _check_s(s)
    if second_case_denominators not in ("k", "k-1"):
        raise ValueError("second_case_denominators must be 'k' or 'k-1'")
    h = s // 2
    if K is None:
        K = summand_count(s, N)
    total = WeightedSeries.one(ZB, N)
    for k in range(1, K + 1):
        base = s * k * k // 2
        if base - (h - 1) > N:
            continue
        common = WeightedSeries.one(ZB, N)
        common = _shifted_block(common, (1, 1), 1, h, h - 1, k - 1)
        common = _shifted_block(common, (0, 1), 1, h, h - 1, k - 1)

        # first case: full k x k square
        first = common
        for j in range(1, k + 1):
            first = first.div_binomial(-1, (1, 0), h * j).div_binomial(-1, (0, 0), h * j)
        first = first * WeightedSeries.monomial(ZB, N, 1, base, (k, 0))
        for t in range(h - 1):
            first = first.mul_binomial(1, (1, 1), h * (k - 1) + 1 + t)
            first = first.mul_binomial(1, (0, 1), h * (k - 1) + 1 + t)

        # remaining cases: the corner box holds i = 1 .. s/2-1
        corner = WeightedSeries.polynomial(ZB, N, [(1, base - i, (k, 1)) for i in range(1, h)])
        second = common * corner
        if second_case_denominators == "k":
            for j in range(1, k + 1):
                second = second.div_binomial(-1, (1, 0), h * j).div_binomial(-1, (0, 0), h * j)
            second = second.mul_binomial(-1, (1, 0), h * k).mul_binomial(-1, (0, 0), h * k)
        else:
            for j in range(1, k):
                second = second.div_binomial(-1, (1, 0), h * j).div_binomial(-1, (0, 0), h * j)
        total = total + first + second
    return total


def _check_s(s):
    if s < 4 or s % 2:
        raise ValueError(f"s must be an even integer >= 4, got {s}")


# ---------------------------------------------------------------------------
# Alladi's expansion; b marks odd parts, c marks even parts

BC = ("b", "c")


def alladi_sides(N: int) -> tuple[WeightedSeries, WeightedSeries]:
    lhs = WeightedSeries.one(BC, N)
    for m in range(1, N + 1, 2):
        lhs = lhs.mul_binomial(1, (1, 0), m)
    for m in range(2, N + 1, 2):
        lhs = lhs.div_binomial(-1, (0, 1), m)

    rhs = WeightedSeries.one(BC, N)
    k = 1
    while 2 * k * k - 1 <= N:
        term = WeightedSeries.monomial(BC, N, 1, 2 * k * k - 1)
        for i in range(k - 1):
            term = term.mul_binomial(1, (1, 0), 2 * i + 1)
        # c^k (-b c^{-1} q; q^2)_{k-1} (b c^{-1} + q)
        #   = (c + b q)(c + b q^3) ... (c + b q^{2k-3}) (b + c q)
        bracket = WeightedSeries.polynomial(BC, N, [(1, 0, (1, 0)), (1, 1, (0, 1))])
        for i in range(k - 1):
            bracket = bracket * WeightedSeries.polynomial(
                BC, N, [(1, 0, (0, 1)), (1, 2 * i + 1, (1, 0))])
        term = (term * bracket).mul_binomial(1, (1, 0), 4 * k - 1)
        for j in range(1, k + 1):
            term = term.div_binomial(-1, (0, 1), 2 * j).div_binomial(-1, (0, 0), 2 * j)
        rhs = rhs + term
        k += 1
    return lhs, rhs


def to_alladi_markers(ws: WeightedSeries) -> WeightedSeries:
    """Send z -> c, b -> b/c: z^r b^l becomes b^l c^(r-l).

    Every monomial must have r >= l, otherwise a negative power of c
    would appear.
    """
    if ws.markers != ZB:
        raise ArityMismatch(f"expected markers {ZB}, got {ws.markers}")

    def fn(e):
        r, l = e
        if l > r:
            raise InvalidSpecialization(f"z^{r} b^{l} has no polynomial image")
        return (l, r - l)

    return ws.map_exponents(BC, fn)


# ---------------------------------------------------------------------------
# classical identities

@dataclass(frozen=True)
class Monomial:
    coefficient: int
    q_power: int

    def __post_init__(self):
        if self.q_power < 0:
            raise ValueError("q_power must be non-negative")

    def power(self, m: int) -> Monomial:
        return Monomial(self.coefficient ** m, self.q_power * m)

    def times(self, other: Monomial) -> Monomial:
        return Monomial(self.coefficient * other.coefficient, self.q_power + other.q_power)

    def series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.monomial(self.coefficient, self.q_power, order)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """'3', 'q', '-2q^3', 'q^2' and the like."""
        t = text.replace(" ", "")
        if "q" not in t:
            return cls(int(t), 0)
        head, _, tail = t.partition("q")
        coef = {"": 1, "+": 1, "-": -1}.get(head)
        if coef is None:
            coef = int(head.rstrip("*"))
        power = int(tail[1:]) if tail.startswith("^") else 1
        if tail and not tail.startswith("^"):
            raise ValueError(f"bad monomial {text!r}")
        return cls(coef, power)

    def __str__(self):
        if self.q_power == 0:
            return str(self.coefficient)
        c = {1: "", -1: "-"}.get(self.coefficient, f"{self.coefficient}")
        return f"{c}q" + (f"^{self.q_power}" if self.q_power != 1 else "")


def _tri(n):
    return n * (n + 1) // 2


def lebesgue_sides(N: int) -> tuple[WeightedSeries, WeightedSeries]:
    """sum q^{T_n} (-bq;q)_n/(q;q)_n  and  prod (1 + b q^{2m})/(1 - q^{2m-1})."""
    B = ("b",)
    lhs = WeightedSeries.zero(B, N)
    n = 0
    while _tri(n) <= N:
        t = WeightedSeries.monomial(B, N, 1, _tri(n))
        for i in range(1, n + 1):
            t = t.mul_binomial(1, (1,), i).div_binomial(-1, (0,), i)
        lhs = lhs + t
        n += 1
    rhs = WeightedSeries.one(B, N)
    for m in range(1, N + 1):
        if m % 2 == 0:
            rhs = rhs.mul_binomial(1, (1,), m)
        else:
            rhs = rhs.div_binomial(-1, (0,), m)
    return lhs, rhs


def gauss_sides(N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    return theta_psi(1, N), pochhammer_product([euler(2)], N, [qpoch(1, 1, 2)])


def pentagonal_sides(N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    c = [0] * (N + 1)
    c[0] = 1
    k = 1
    while (3 * k * k - k) // 2 <= N:
        for e in ((3 * k * k - k) // 2, (3 * k * k + k) // 2):
            if e <= N:
                c[e] += (-1) ** k
        k += 1
    return pentagonal(N), TruncatedSeries(c)


def sylvester_sides(N: int) -> tuple[WeightedSeries, WeightedSeries]:
    """prod (1 + b q^n)  and its Durfee-square sum over k."""
    B = ("b",)
    lhs = WeightedSeries.one(B, N)
    for m in range(1, N + 1):
        lhs = lhs.mul_binomial(1, (1,), m)
    rhs = WeightedSeries.one(B, N)
    k = 1
    while (3 * k * k - k) // 2 <= N:
        t = WeightedSeries.monomial(B, N, 1, (3 * k * k - k) // 2, (k,))
        for i in range(1, k):
            t = t.mul_binomial(1, (1,), i)
        t = t.mul_binomial(1, (1,), 2 * k)
        for i in range(1, k + 1):
            t = t.div_binomial(-1, (0,), i)
        rhs = rhs + t
        k += 1
    return lhs, rhs


def rogers_fine_sides(alpha: Monomial, beta: Monomial, tau: Monomial,
                      N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Fine's function F(alpha, beta, tau) summed directly, and its Rogers-Fine form.

    beta^n (alpha tau q / beta; q)_n is expanded as prod (beta - alpha tau q^{i+1})
    so beta may be zero.
    """
    if tau.q_power < 1:
        raise InvalidSpecialization("tau needs a positive power of q")
    a, b, t = alpha, beta, tau
    lhs = TruncatedSeries([0], N)
    n = 0
    while n * t.q_power <= N:
        term = t.power(n).series(N)
        for i in range(n):
            term = term.mul_binomial(-a.coefficient, a.q_power + i + 1)
            term = term.div_binomial(-b.coefficient, b.q_power + i + 1)
        lhs = lhs + term
        n += 1

    rhs = TruncatedSeries([0], N)
    at = a.times(t)
    n = 0
    while n * n + n * t.q_power <= N:
        term = t.power(n).series(N) * TruncatedSeries.monomial(1, n * n, N)
        for i in range(n):
            term = term.mul_binomial(-a.coefficient, a.q_power + i + 1)
            factor = TruncatedSeries.monomial(b.coefficient, b.q_power, N) - \
                TruncatedSeries.monomial(at.coefficient, at.q_power + i + 1, N)
            term = term * factor
            term = term.div_binomial(-b.coefficient, b.q_power + i + 1)
        term = term.mul_binomial(-at.coefficient, at.q_power + 2 * n + 1)
        for i in range(n + 1):
            term = term.div_binomial(-t.coefficient, t.q_power + i)
        rhs = rhs + term
        n += 1
    return lhs, rhs


def jacobi_triple_sides(a: Monomial, b: Monomial, N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """sum over all integers n of a^{n(n+1)/2} b^{n(n-1)/2}, and the triple product."""
    if a.q_power < 1 or b.q_power < 1:
        raise InvalidSpecialization("both parameters need a positive power of q")
    lhs = [0] * (N + 1)
    n = 0
    while True:
        hit = False
        for m in {n, -n}:
            x, y = m * (m + 1) // 2, m * (m - 1) // 2
            e = a.q_power * x + b.q_power * y
            if e <= N:
                lhs[e] += a.coefficient ** x * b.coefficient ** y
                hit = True
        if not hit:
            break
        n += 1
    ab = a.times(b)
    rhs = TruncatedSeries.one(N)
    i = 0
    while ab.q_power * i + min(a.q_power, b.q_power) <= N:
        ai, bi = a.times(ab.power(i)), b.times(ab.power(i))
        rhs = rhs.mul_binomial(ai.coefficient, ai.q_power)
        rhs = rhs.mul_binomial(bi.coefficient, bi.q_power)
        abi = ab.power(i + 1)
        rhs = rhs.mul_binomial(-abi.coefficient, abi.q_power)
        i += 1
    return TruncatedSeries(lhs), rhs


IDENTITIES = ("lebesgue", "gauss", "pentagonal", "sylvester", "rogers-fine", "jacobi")


def classical_identity_sides(which: str, params: list[Monomial], N: int):
    """Both sides of a named classical identity to order N."""
    which = which.lower().replace("_", "-")
    arity = {"lebesgue": 0, "gauss": 0, "pentagonal": 0, "sylvester": 0, "rogers-fine": 3, "jacobi": 2}
    if which not in arity:
        raise ValueError(f"unknown identity {which!r}")
    if len(params) != arity[which]:
        raise InvalidSpecialization(f"{which} takes {arity[which]} parameters, got {len(params)}")
    if which == "lebesgue":
        return lebesgue_sides(N)
    if which == "gauss":
        return gauss_sides(N)
    if which == "pentagonal":
        return pentagonal_sides(N)
    if which == "sylvester":
        return sylvester_sides(N)
    if which == "rogers-fine":
        return rogers_fine_sides(*params, N)
    return jacobi_triple_sides(*params, N)
