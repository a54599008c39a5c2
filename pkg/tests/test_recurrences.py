import pytest

from qpartitions.partitions import ClassSpec, count_with_length, count
from qpartitions.recurrences import (alpha_set, c4_triangular, c_table, d4_two_parts, d_table,
                                     m_table, table_for)
from qpartitions.series import class_genfun
from qpartitions.tables import CONGRUENT4_VALUES, ERRATA, GOLDEN_NK, RECURRENCE_EXAMPLES

N = 24


@pytest.fixture(scope="module", params=[4, 6, 8])
def s(request):
    return request.param


@pytest.mark.parametrize("kind", ["modular", "congruent", "duplicate"])
def test_tables_match_enumeration(kind, s):
    c = ClassSpec(kind, s=s)
    t = table_for(c, N, N)
    for n in range(N + 1):
        for k in range(N + 1):
            assert t.cell(n, k) == count_with_length(n, k, c), (kind, s, n, k)


def test_row_sums_equal_across_classes(s):
    tabs = [table_for(ClassSpec(k, s=s), N, N) for k in ("modular", "congruent", "duplicate")]
    g = class_genfun(ClassSpec.modular(s), N)
    for n in range(N + 1):
        assert {t.row_sum(n) for t in tabs} == {g[n]}


def test_cell_boundaries():
    t = m_table(4, 10, 10)
    assert t.cell(0, 0) == 1 and t.cell(-1, 3) == 0 and t.cell(3, -1) == 0
    with pytest.raises(IndexError):
        t.cell(11, 1)
    with pytest.raises(ValueError):
        m_table(5, 3, 3)
    with pytest.raises(ValueError):
        table_for(ClassSpec.pod(), 3, 3)


@pytest.mark.parametrize("name", sorted(GOLDEN_NK))
def test_golden_tables_outside_errata(name):
    g = GOLDEN_NK[name]
    t = table_for(ClassSpec(g.kind, s=g.s), g.max_n, g.max_k)
    for n in range(1, g.max_n + 1):
        for k in range(1, g.max_k + 1):
            if (name, n, k) not in ERRATA:
                assert t.cell(n, k) == g.cell(n, k), (n, k)


@pytest.mark.parametrize("key", sorted(ERRATA))
def test_each_erratum_is_a_real_misprint(key):
    name, n, k = key
    printed, fixed = ERRATA[key]
    g = GOLDEN_NK[name]
    assert g.cell(n, k) == printed != fixed
    assert count_with_length(n, k, ClassSpec(g.kind, s=g.s)) == fixed


def test_printed_modular_rows_disagree_with_value_table():
    g = GOLDEN_NK["modular4"]
    assert sum(g.rows[16]) == 65 and CONGRUENT4_VALUES[16] == 70
    assert sum(g.rows[17]) == 85 and CONGRUENT4_VALUES[17] == 86


def test_worked_examples():
    m = m_table(4, 20, 20)
    terms = [m.cell(12, 8 - ell) for ell in (0, 1, 4, 5, 8)]
    assert [x for x in terms if x] == RECURRENCE_EXAMPLES[("modular", 4, 20, 8)]
    assert m.cell(20, 8) == 13

    c = c_table(4, 20, 20)
    layers = [c.layer(ell, 20, 4) for ell in (1, 3, 4, 5)]
    assert layers == RECURRENCE_EXAMPLES[("congruent", 4, 20, 4)]
    assert sum(layers) == c.cell(20, 4)

    d = d_table(4, 20, 20)
    assert [d.cell(11, 2), d.cell(7, 3), d.cell(8, 2)] == RECURRENCE_EXAMPLES[("duplicate", 4, 13, 3)]
    assert d.cell(13, 3) == 11


def test_congruent_layers_partition_the_cell():
    c = c_table(8, 20, 20)
    for n in range(1, 21):
        for k in range(21):
            assert sum(c.layer(ell, n, k) for ell in (1, 3, 5, 7, 8, 9)) == c.cell(n, k)


def test_alpha_sets():
    assert [len(alpha_set(s)) for s in (4, 6, 8, 10)] == [2, 4, 8, 16]
    assert all(max(a.parts, default=0) < s // 2 for s in (6, 8) for a in alpha_set(s))


def test_printed_s8_first_term_differs():
    a, b = d_table(8, 24, 24), d_table(8, 24, 24, printed_s8_first_term=True)
    diff = [(n, k) for n in range(25) for k in range(25) if a.cell(n, k) != b.cell(n, k)]
    assert len(diff) == 66
    with pytest.raises(ValueError):
        d_table(6, 5, 5, printed_s8_first_term=True)


def test_c4_triangular():
    g = class_genfun(ClassSpec.congruent(4), 200)
    assert [c4_triangular(n) for n in range(201)] == list(g.coeffs)
    assert [c4_triangular(n) for n in range(25)] == CONGRUENT4_VALUES
    assert c4_triangular(21) == 196 and c4_triangular(24) == 350
    with pytest.raises(ValueError):
        c4_triangular(-1)


def test_d4_two_parts():
    t = d_table(4, 100, 2)
    assert [d4_two_parts(n) for n in range(7)] == [0, 0, 0, 1, 2, 2, 2]
    assert all(d4_two_parts(n) == t.cell(n, 2) for n in range(101))
    assert all(d4_two_parts(n) == count_with_length(n, 2, ClassSpec.duplicate(4)) for n in range(30))
