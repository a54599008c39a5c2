import pytest
from hypothesis import given, settings, strategies as st

from qpartitions.bijections import (DIRECTIONS, InternalCaseGap, NoValidChoice, PreconditionViolated,
                                    TargetClassViolation, apply_map, choose_bit_vector,
                                    forward_congruent, forward_duplicate, inverse_congruent,
                                    inverse_duplicate, sweep, two_adic_split)
from qpartitions.partitions import ClassSpec, Partition, is_member, members
from qpartitions.tables import BIJECTION_ERRATA, BIJECTION_TABLES, corrected_bijection_rows

P = Partition.parse
GRID = [4, 6, 8, 10, 16]


@pytest.mark.parametrize("key", sorted(BIJECTION_TABLES))
def test_worked_tables_row_for_row(key):
    s, n = key
    for m, d, c in corrected_bijection_rows(s, n):
        assert m.weight == d.weight == c.weight == n
        assert forward_congruent(m, s) == c
        assert forward_duplicate(m, s) == d
        assert inverse_congruent(c, s) == m
        assert inverse_duplicate(d, s) == m


def test_bijection_erratum_has_wrong_weight():
    for (s, n, row, col), (printed, fixed) in BIJECTION_ERRATA.items():
        assert P(printed).weight != n
        assert P(fixed).weight == n
        assert BIJECTION_TABLES[(s, n)][row][col] == printed


@pytest.mark.parametrize("s", GRID)
def test_exhaustive_sweep_clean_on_grid(s):
    for n in range(23):
        rep = sweep(s, n)
        assert rep.ok, [str(f) for f in rep.findings[:5]]
        assert rep.domain_sizes["to-congruent"] == rep.domain_sizes["from-congruent"] \
            == rep.domain_sizes["from-duplicate"]


def test_cli_examples():
    assert forward_duplicate(P("3,2,1^5"), 4) == P("3,2^3,1")
    assert forward_congruent(P("4,3,2,1^9"), 8) == P("3,1^15")
    assert forward_congruent(P("9,1"), 4) == P("9,1")


def test_two_adic_split():
    assert (two_adic_split(12).r, two_adic_split(12).ell) == (2, 3)
    with pytest.raises(ValueError):
        two_adic_split(0)


@given(st.integers(1, 10**6))
def test_two_adic_split_recomposes(m):
    sp = two_adic_split(m)
    assert sp.value == m and sp.ell % 2 == 1


@given(st.sampled_from([4, 8, 16, 32]), st.integers(0, 200))
def test_bit_vector_choice(s, u):
    if u % s in (0, 1):
        m, w = choose_bit_vector(u, s)
        assert m == u and w.magnitude == 0
        return
    m, w = choose_bit_vector(u, s)
    assert m >= 0 and m % s in (0, 1) and m + w.magnitude == u


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GRID), st.integers(0, 22), st.data())
def test_random_roundtrips(s, n, data):
    dom = members(n, ClassSpec.modular(s))
    lam = data.draw(st.sampled_from(dom))
    assert inverse_congruent(forward_congruent(lam, s), s) == lam
    assert inverse_duplicate(forward_duplicate(lam, s), s) == lam


def test_trace_has_one_step_per_block():
    img, steps = apply_map("to-congruent", P("4,3,2,1^9"), 8)
    assert len(steps) == 4
    assert str(steps[0]).startswith("f(4) [")
    assert str(steps[-1]).startswith("f(1^9) [")
    assert Partition.from_multiplicities(
        [e for st_ in steps for e in st_.image.entries]) == img


def test_precondition_checks():
    with pytest.raises(PreconditionViolated):
        forward_congruent(P("2^2"), 4)
    with pytest.raises(PreconditionViolated):
        inverse_congruent(P("2"), 4)
    with pytest.raises(PreconditionViolated):
        inverse_duplicate(P("3^2"), 4)
    with pytest.raises(PreconditionViolated):
        forward_congruent(P("1"), 5)
    with pytest.raises(ValueError):
        apply_map("sideways", P("1"), 4)
    assert set(DIRECTIONS) == {"to-congruent", "from-congruent", "to-duplicate", "from-duplicate"}


# -- findings: literal readings and cases outside the tested grid ----------

def test_literal_duplicate_guard_collides():
    a = forward_duplicate(P("1^18"), 6, literal=True)
    b = forward_duplicate(P("3^6"), 6, literal=True)
    assert a == b == P("3^6")
    assert forward_duplicate(P("3^6"), 6) == P("9^2")
    assert not sweep(6, 18, literal=True).ok


def test_literal_congruent_inverse_breaks_roundtrip():
    assert forward_congruent(P("12,6"), 10) == P("3^6")
    assert inverse_congruent(P("3^6"), 10, literal=True) == P("18")
    assert inverse_congruent(P("3^6"), 10) == P("12,6")
    kinds = {f.kind for f in sweep(10, 21, literal=True).findings}
    assert "roundtrip" in kinds


def test_s12_leaves_congruent_class():
    # s/2 = 6 is even, so 6*part lands on a forbidden residue
    with pytest.raises(TargetClassViolation):
        forward_congruent(P("1^12"), 12)
    img = forward_congruent(P("1^12"), 12, check_target=False)
    assert img == P("6^2") and not is_member(img, ClassSpec.congruent(12))
    assert any(f.kind == "membership" for f in sweep(12, 12).findings)


def test_power_of_two_maps_beyond_grid():
    # distinct modular partitions of 24 with the same image
    assert forward_congruent(P("4^4,2^4"), 4) == forward_congruent(P("6^4"), 4) == P("4^6")
    img = forward_duplicate(P("2^8,1^8"), 8)
    assert img == P("4^6")
    with pytest.raises(NoValidChoice):
        inverse_duplicate(img, 8)


def test_case_gap_is_reported_not_hidden():
    rep = sweep(8, 24)
    assert any(f.kind == "error" for f in rep.findings)
    assert InternalCaseGap is not NoValidChoice
