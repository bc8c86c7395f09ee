import math

import pytest

from plb.bounds import compute_bound
from plb.compare import (
    TABLE2_N_LIST,
    TABLE2_P_GRID,
    crossover_p0n,
    crossover_p1n_p3n,
    crossover_table1,
    f_n,
    find_root,
    h1_fn,
    reproduce_table1,
    thread_budget,
)
from plb.errors import BracketError
from plb.params import derive

from oracles import family_sup_oracle

# Crossings of the family bound against the Picone bound, computed from the
# closed-form expressions (see the decisions ledger for the derivation notes).
TABLE1_COMPUTED = {
    2: 37.7221,
    3: 4.3612,
    4: 2.0797,
    5: 1.7857,
    6: 1.6370,
    7: 1.5362,
    8: 1.4633,
    9: 1.4080,
}


def test_find_root_sqrt2():
    assert find_root(lambda x: x * x - 2.0, (1.0, 2.0)) == pytest.approx(
        math.sqrt(2.0), abs=1e-12
    )


def test_find_root_endpoint_zero():
    assert find_root(lambda x: x - 1.0, (1.0, 2.0)) == 1.0


def test_find_root_requires_sign_change():
    with pytest.raises(BracketError):
        find_root(lambda x: x * x + 1.0, (0.0, 1.0))


def test_h1_root_at_n9_is_three():
    assert find_root(lambda p: h1_fn(p, 9), (2.0, 5.0)) == pytest.approx(
        3.0, abs=1e-12
    )


# ---------------------------------------------------------------------------
# p0n: double singular vs Cheeger crossover.
# ---------------------------------------------------------------------------


def test_p0n_in_range_and_exact_at_n2():
    result = crossover_p0n(2)
    assert result.p_star == pytest.approx(1.5, abs=1e-10)
    assert abs(result.residual) < 1e-10
    for n in range(2, 13):
        r = crossover_p0n(n)
        assert 1.0 < r.p_star < 2.0
        assert abs(f_n(r.p_star, n)) < 1e-9


def test_p0n_unique_sign_change():
    # f_n has exactly one root on the search window (1, 2); the further
    # crossing of sign at p = n is outside it.
    for n in (2, 5, 9):
        signs = []
        p = 1.0 + 1e-6
        while p < 1.975:
            v = f_n(p, n)
            if v != 0.0:
                s = math.copysign(1.0, v)
                if not signs or signs[-1] != s:
                    signs.append(s)
            p += 0.005
        assert len(signs) == 2


def test_bound_order_flips_across_p0n():
    for n in (2, 3, 5):
        p_star = crossover_p0n(n).p_star
        below = derive(p_star - 0.05, n, 1.0)
        above = derive(p_star + 0.05, n, 1.0)
        assert (
            compute_bound(below, "double_singular").value
            < compute_bound(below, "cheeger").value
        )
        assert (
            compute_bound(above, "double_singular").value
            > compute_bound(above, "cheeger").value
        )


def test_fn_single_local_shape():
    # f_n decreases then increases on (1, 60); check monotone segments.
    for n in (2, 5, 9):
        values = [f_n(1.0 + 0.59 * i, n) for i in range(1, 101)]
        diffs = [v2 - v1 for v1, v2 in zip(values, values[1:])]
        flips = sum(
            1 for d1, d2 in zip(diffs, diffs[1:]) if (d1 < 0.0) != (d2 < 0.0)
        )
        assert flips <= 1


# ---------------------------------------------------------------------------
# p1n and p3n.
# ---------------------------------------------------------------------------


def test_p1n_p3n_at_n9():
    p1, p3 = crossover_p1n_p3n(9)
    assert p1.applicable and p3.applicable
    assert 1.0 < p1.p_star < 2.0
    assert p1.p_star == pytest.approx(1.6597, abs=1e-3)
    assert p3.p_star == pytest.approx(3.0, abs=1e-10)
    assert abs(p3.residual) < 1e-10


def test_p1n_p3n_not_applicable_below_n9():
    for n in (2, 5, 8):
        p1, p3 = crossover_p1n_p3n(n)
        assert not p1.applicable and not p3.applicable
        assert math.isnan(p1.p_star) and math.isnan(p3.p_star)


def test_p1n_below_p0n_large_n():
    p1, _ = crossover_p1n_p3n(100)
    assert p1.p_star < crossover_p0n(100).p_star


# ---------------------------------------------------------------------------
# Family-vs-Picone crossings (the eight-column comparison table).
# ---------------------------------------------------------------------------


def test_table1_computed_values():
    for n, expected in TABLE1_COMPUTED.items():
        result = crossover_table1(n)
        assert result.p_star == pytest.approx(expected, abs=5e-4), n


def test_table1_monotone_decreasing():
    stars = [crossover_table1(n).p_star for n in range(2, 10)]
    for a, b in zip(stars, stars[1:]):
        assert a > b


def test_table1_self_consistent_at_root():
    # At the crossing the two bounds agree, and the family value matches an
    # independent grid evaluation of the kernel supremum.
    for n in (3, 4):
        p_star = crossover_table1(n).p_star
        params = derive(p_star, n, 1.0)
        fam = compute_bound(params, "family_sup").value
        pic = compute_bound(params, "picone").value
        assert fam == pytest.approx(pic, rel=1e-9)
        assert fam == pytest.approx(family_sup_oracle(p_star, n), rel=1e-6)


def test_reproduce_table1_all_dims():
    results = reproduce_table1()
    assert [r.n for r in results] == list(range(2, 10))
    for r in results:
        assert r.kind == "table1_lambda3_vs_lambda2"


# ---------------------------------------------------------------------------
# Table 2 rows (session-computed fixture).
# ---------------------------------------------------------------------------


def test_table2_shape(table2_rows):
    assert len(table2_rows) == len(TABLE2_P_GRID) * len(TABLE2_N_LIST)
    keys = {(row.p, row.n) for row in table2_rows}
    assert len(keys) == len(table2_rows)


def test_table2_ordering_holds(table2_rows):
    for row in table2_rows:
        assert row.ordering == "lower_bound_holds", (row.p, row.n, row.ordering)


def test_table2_values_finite(table2_rows):
    for row in table2_rows:
        assert math.isfinite(row.values["double_singular"])
        assert math.isfinite(row.values["numeric"])
        assert row.values["double_singular"] < row.values["numeric"]


def test_thread_budget_env(monkeypatch):
    monkeypatch.setenv("PLB_THREADS", "2")
    assert thread_budget() == 2
    monkeypatch.setenv("PLB_THREADS", "0")
    assert thread_budget() == 1
    monkeypatch.delenv("PLB_THREADS")
    assert thread_budget() >= 1
