"""Named verification routines shared by ``qpartitions verify`` and the tests.

Every check returns a :class:`CheckResult`; nothing raises on a
mathematical mismatch.  ``detail`` names the first failing coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import expansions as ex
from .overpartitions import KINDS as OVER_KINDS
from .overpartitions import enumerate_overpartitions, over_genfun, overpartition_genfun
from .partitions import ClassSpec, alladi_weight_polynomials, count
from .recurrences import c4_triangular, table_for
from .series import TruncatedSeries, class_genfun, triangular_numbers


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        return f"{head}: {self.detail}" if self.detail else head


def first_series_difference(a: TruncatedSeries, b: TruncatedSeries):
    for n in range(min(a.order, b.order) + 1):
        if a[n] != b[n]:
            return n, a[n], b[n]
    return None


def _compare(name, a, b, what):
    if isinstance(a, ex.WeightedSeries):
        d = a.first_difference(b)
        if d is None:
            return CheckResult(name, True, f"{what} equal to q^{min(a.order, b.order)}")
        n, e, x, y = d
        mono = "*".join(f"{m}^{p}" for m, p in zip(a.markers, e) if p) or "1"
        return CheckResult(name, False, f"{what}: coefficient of {mono}*q^{n} is {x} vs {y}")
    d = first_series_difference(a, b)
    if d is None:
        return CheckResult(name, True, f"{what} equal to q^{min(a.order, b.order)}")
    return CheckResult(name, False, f"{what}: coefficient of q^{d[0]} is {d[1]} vs {d[2]}")


def _all(name, results):
    bad = [r for r in results if not r.ok]
    if bad:
        return CheckResult(name, False, "; ".join(r.detail for r in bad))
    return CheckResult(name, True, "; ".join(r.detail for r in results))


def check_gauss(order=200):
    return _compare("gauss", *ex.gauss_sides(order), "triangular sum vs product")


def check_pentagonal(order=200):
    return _compare("pentagonal", *ex.pentagonal_sides(order), "(q;q) vs pentagonal sum")


def check_lebesgue(order=40):
    lhs, rhs = ex.lebesgue_sides(order)
    return _all("lebesgue", [
        _compare("lebesgue", lhs, rhs, "bivariate sides"),
        _compare("lebesgue", lhs.specialize({"b": -1}), ex.gauss_sides(order)[1], "b=-1 vs gauss product"),
    ])


def check_sylvester(order=40):
    lhs, rhs = ex.sylvester_sides(order)
    return _all("sylvester", [
        _compare("sylvester", lhs, rhs, "bivariate sides"),
        _compare("sylvester", rhs.specialize({"b": -1}), ex.pentagonal_sides(order)[1], "b=-1 vs pentagonal sum"),
    ])


M = ex.Monomial
ROGERS_FINE_DEFAULTS = [
    (M(0, 0), M(0, 0), M(1, 1)),
    (M(1, 0), M(1, 1), M(1, 1)),
    (M(-2, 1), M(3, 0), M(1, 2)),
    (M(1, 1), M(0, 0), M(-1, 1)),
]
JACOBI_DEFAULTS = [
    (M(1, 1), M(1, 1)),
    (M(1, 1), M(1, 2)),
    (M(-1, 1), M(1, 2)),
    (M(2, 1), M(-1, 3)),
]


def check_rogers_fine(order=50, params=None):
    out = []
    for a, b, t in params or ROGERS_FINE_DEFAULTS:
        out.append(_compare("rogers-fine", *ex.rogers_fine_sides(a, b, t, order),
                            f"alpha={a}, beta={b}, tau={t}"))
    return _all("rogers-fine", out)


def check_jacobi(order=50, params=None):
    out = []
    for a, b in params or JACOBI_DEFAULTS:
        out.append(_compare("jacobi", *ex.jacobi_triple_sides(a, b, order), f"a={a}, b={b}"))
    return _all("jacobi", out)


def check_alladi(order=30, max_n=20):
    lhs, rhs = ex.alladi_sides(order)
    res = [_compare("alladi", lhs, rhs, "series sides")]
    bad = [n for n in range(max_n + 1) if alladi_weight_polynomials(n)[0] != alladi_weight_polynomials(n)[1]]
    res.append(CheckResult("alladi", not bad,
                           f"weighted polynomials, n <= {max_n}" + (f": first failure n={bad[0]}" if bad else " agree")))
    return _all("alladi", res)


def check_generalized_expansion(s=4, order=30):
    lhs = ex.duplicate_refined_lhs(s, order)
    res = []
    for mode in ("k", "k-1"):
        rhs = ex.duplicate_refined_rhs(s, order, second_case_denominators=mode)
        res.append(_compare("generalized-expansion", lhs, rhs, f"s={s}, {mode}-indexed second case"))
    return _all("generalized-expansion", res)


def check_alladi_reduction(order=30):
    a_lhs, a_rhs = ex.alladi_sides(order)
    return _all("alladi-reduction", [
        _compare("alladi-reduction", ex.to_alladi_markers(ex.duplicate_refined_lhs(4, order)), a_lhs,
                 "s=4 product under z->c, b->b/c"),
        _compare("alladi-reduction", ex.to_alladi_markers(ex.duplicate_refined_rhs(4, order)), a_rhs,
                 "s=4 expansion under z->c, b->b/c"),
    ])


def check_over_forms(s_values=(4, 6, 8), order=60, baseline_n=20):
    res = []
    for s in s_values:
        for kind in OVER_KINDS:
            res.append(_compare("over-forms", over_genfun(kind, s, "first", order),
                                over_genfun(kind, s, "second", order), f"{kind} s={s}"))
    g = overpartition_genfun(baseline_n)
    bad = [n for n in range(baseline_n + 1) if sum(1 for _ in enumerate_overpartitions(n)) != g[n]]
    res.append(CheckResult("over-forms", not bad, f"enumeration vs (-q;q)/(q;q) to n={baseline_n}"
                           + (f", first failure n={bad[0]}" if bad else "")))
    return _all("over-forms", res)


def check_merca(max_n=50):
    c4 = class_genfun(ClassSpec.congruent(4), max_n)
    ped = ClassSpec.ped()
    for n in range(max_n + 1):
        rhs = sum(c4[n - 2 * t] for t in triangular_numbers(n) if 2 * t <= n)
        lhs = count(n, ped)
        if lhs != rhs:
            return CheckResult("merca", False, f"n={n}: ped={lhs}, triangular sum={rhs}")
    return CheckResult("merca", True, f"ped(n) = sum C_4(n - 2T_k) for n <= {max_n}")


def check_andrews_vw(t_values=(3, 5), max_n=30):
    """C_4^t by its product, V by residue filter, W by difference conditions."""
    res = []
    for t in t_values:
        i = (t + 1) // 2
        prod = class_genfun(ClassSpec.congruent_distinct(4, t), max_n)
        V, W = ClassSpec.vclass(t, i), ClassSpec.wclass(t, i)
        for n in range(max_n + 1):
            v, w = count(n, V), count(n, W)
            if not prod[n] == v == w:
                res.append(CheckResult("andrews-vw", False, f"t={t}, n={n}: product {prod[n]}, V {v}, W {w}"))
                break
        else:
            res.append(CheckResult("andrews-vw", True, f"t={t} agree for n <= {max_n}"))
    return _all("andrews-vw", res)


def equinumerosity_counts(s, n, genfuns=None, tables=None):
    """Nine counts: oracle, product and recurrence for each of the three classes."""
    out = {}
    for kind in ("modular", "congruent", "duplicate"):
        c = ClassSpec(kind, s=s)
        out[(kind, "oracle")] = count(n, c)
        out[(kind, "series")] = (genfuns or {}).get(kind, class_genfun(c, n))[n]
        tab = (tables or {}).get(kind) or table_for(c, n, n)
        out[(kind, "recurrence")] = tab.row_sum(n)
    return out


def check_equinumerosity(s=4, max_n=30):
    gf = {k: class_genfun(ClassSpec(k, s=s), max_n) for k in ("modular", "congruent", "duplicate")}
    tb = {k: table_for(ClassSpec(k, s=s), max_n, max_n) for k in ("modular", "congruent", "duplicate")}
    for n in range(max_n + 1):
        counts = equinumerosity_counts(s, n, gf, tb)
        if len(set(counts.values())) != 1:
            desc = ", ".join(f"{k}/{e}={v}" for (k, e), v in counts.items())
            return CheckResult("equinumerosity", False, f"s={s}, n={n}: {desc}")
    return CheckResult("equinumerosity", True, f"M = C = D for s={s}, n <= {max_n}, three engines each")


# (argument, modulus) pairs; instances of the known D_4 = pod families
CONGRUENCE_FAMILIES = {
    "radu-sellers": [(8, 5), (143, 5), (107, 5), (242, 5), (260, 7), (647, 25)],
    "extended": [(8, 5), (143, 5), (107, 5), (242, 5), (260, 7), (827, 7), (647, 25), (1322, 25), (1997, 125)],
}


def check_congruence_spot(family="radu-sellers", order=None):
    cases = CONGRUENCE_FAMILIES[family]
    top = max(n for n, _ in cases)
    order = max(order or 700, top)
    d4 = class_genfun(ClassSpec.duplicate(4), order)
    bad = [(n, m, d4[n] % m) for n, m in cases if d4[n] % m]
    if bad:
        n, m, r = bad[0]
        return CheckResult("congruence-spot", False, f"D_4({n}) = {d4[n]} is {r} mod {m}")
    return CheckResult("congruence-spot", True,
                       ", ".join(f"D_4({n}) = 0 mod {m}" for n, m in cases))


def check_c4_triangular(max_n=200):
    g = class_genfun(ClassSpec.congruent(4), max_n)
    for n in range(max_n + 1):
        if c4_triangular(n) != g[n]:
            return CheckResult("c4-triangular", False, f"n={n}: {c4_triangular(n)} vs {g[n]}")
    return CheckResult("c4-triangular", True, f"agrees with the product to n={max_n}")


CHECKS = {
    "gauss": check_gauss,
    "pentagonal": check_pentagonal,
    "lebesgue": check_lebesgue,
    "sylvester": check_sylvester,
    "rogers-fine": check_rogers_fine,
    "jacobi": check_jacobi,
    "alladi": check_alladi,
    "generalized-expansion": check_generalized_expansion,
    "over-forms": check_over_forms,
    "merca": check_merca,
    "andrews-vw": check_andrews_vw,
    "equinumerosity": check_equinumerosity,
    "congruence-spot": check_congruence_spot,
}
