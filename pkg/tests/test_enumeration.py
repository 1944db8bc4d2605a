import json
from collections import Counter

import pytest

from weyl_eulerian import enumeration
from weyl_eulerian.enumeration import (
    DistTable,
    brute_bivariate_sgn,
    brute_distribution,
    brute_signed_gf,
    group_order,
    iter_group,
    iter_subset,
    tally,
)
from weyl_eulerian.errors import ResourceLimitError, StatisticNotApplicableError
from weyl_eulerian.group import (
    GroupId,
    SignClass,
    StatKind,
    in_sign_class,
    sign_of,
    statistic,
)
from weyl_eulerian.poly import BiPoly, UniPoly

A, B, D, BD = GroupId.A, GroupId.B, GroupId.D, GroupId.BminusD
ALL, PLUS, MINUS = SignClass.All, SignClass.Plus, SignClass.Minus


def scalar_table(n, g, s, stat):
    """Reference: apply the per-element statistic to every element."""
    counts = Counter(statistic(p, stat) for p in iter_subset(n, g, s))
    return UniPoly([counts.get(k, 0) for k in range(max(counts, default=-1) + 1)]).coeffs


@pytest.mark.parametrize("n,g,size", [(2, A, 2), (2, B, 8), (2, D, 4)])
def test_iter_group_sizes(n, g, size):
    assert len(list(iter_group(n, g))) == size


@pytest.mark.parametrize("n,g,s,size", [(3, A, PLUS, 3), (2, B, MINUS, 4), (2, D, PLUS, 2)])
def test_iter_subset_sizes(n, g, s, size):
    assert len(list(iter_subset(n, g, s))) == size


def test_d_plus_elements():
    assert [p.window for p in iter_subset(2, D, PLUS)] == [(-1, -2), (1, 2)]


def test_iter_group_is_lexicographic_and_complete():
    for n in range(1, 5):
        ws = [p.window for p in iter_group(n, B)]
        assert ws == sorted(ws)
        assert len(set(ws)) == group_order(n, B)
        d = [p.window for p in iter_group(n, D)]
        bd = [p.window for p in iter_group(n, BD)]
        assert sorted(d + bd) == ws


@pytest.mark.parametrize("n,g,s,stat,coeffs", [
    (3, A, ALL, StatKind.Exc, (1, 4, 1)),
    (3, A, PLUS, StatKind.Exc, (1, 1, 1)),
    (2, B, ALL, StatKind.DesB, (1, 6, 1)),
    (2, D, ALL, StatKind.DesD, (1, 2, 1)),
])
def test_brute_distribution_examples(n, g, s, stat, coeffs):
    assert brute_distribution(n, g, s, stat).coeffs == coeffs


@pytest.mark.parametrize("n,g,stat", [(3, A, StatKind.Exc), (2, B, StatKind.DesB), (2, D, StatKind.DesD)])
def test_brute_signed_gf_examples(n, g, stat):
    assert brute_signed_gf(n, g, stat) == UniPoly([1, -2, 1])


def test_brute_bivariate_examples():
    st = BiPoly.s_minus_t()
    assert brute_bivariate_sgn(1, D) == BiPoly.s()
    assert brute_bivariate_sgn(2, D) == st**2
    assert brute_bivariate_sgn(2, BD).is_zero()
    assert brute_bivariate_sgn(1, B) == st
    with pytest.raises(ValueError):
        brute_bivariate_sgn(2, A)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vectorized_tally_matches_scalar_statistics(n):
    for g in (A, B, D, BD):
        for stat in StatKind:
            if not stat.applicable(g) or (g is not A and stat.type_a_only):
                continue
            for s in SignClass:
                assert brute_distribution(n, g, s, stat).coeffs == scalar_table(n, g, s, stat), (n, g, s, stat)


def test_vectorized_tally_matches_scalar_at_n5_for_b():
    for stat in (StatKind.DesB, StatKind.ExcB, StatKind.DesD, StatKind.InvB):
        for g in (B, D):
            assert brute_distribution(5, g, PLUS, stat).coeffs == scalar_table(5, g, PLUS, stat)


def test_inapplicable_statistic():
    with pytest.raises(StatisticNotApplicableError):
        brute_distribution(2, B, ALL, StatKind.Des)


def test_caps(monkeypatch):
    monkeypatch.setenv("WEYL_EULERIAN_CAP_BD", "3")
    with pytest.raises(ResourceLimitError):
        brute_distribution(4, B, ALL, StatKind.DesB, workers=1)
    with pytest.raises(ResourceLimitError):
        next(iter_group(4, D))
    monkeypatch.setenv("WEYL_EULERIAN_CAP_A", "3")
    with pytest.raises(ResourceLimitError):
        list(iter_group(4, A))


@pytest.mark.parametrize("n", range(1, 7))
def test_table_totals(n):
    for g in (A, B, D, BD):
        stat = StatKind.Des if g is A else StatKind.DesB
        assert brute_distribution(n, g, ALL, stat).total == (group_order(n, g) if g is not BD else group_order(n, D))
        plus = brute_distribution(n, g, PLUS, stat).total
        minus = brute_distribution(n, g, MINUS, stat).total
        if n >= 2:
            assert plus == minus


def test_worker_counts_give_identical_tallies():
    ref = tally(6, False, workers=1)
    for workers in (2, 4):
        other = tally(6, False, workers=workers)
        assert ref.keys() == other.keys()
        for key in ref:
            assert (ref[key][0] == other[key][0]).all() and (ref[key][1] == other[key][1]).all()


def test_default_workers_setting():
    enumeration.set_default_workers(3)
    assert enumeration.default_workers() == 3
    enumeration.set_default_workers(None)
    assert enumeration.default_workers() >= 1


def test_dist_table_serialization():
    t = brute_distribution(3, A, PLUS, StatKind.Exc)
    data = t.to_json()
    assert data == {"n": 3, "group": "a", "sign": "plus", "stat": "exc", "coeffs": ["1", "1", "1"]}
    assert DistTable.from_json(json.loads(json.dumps(data))) == t
    assert t.to_csv() == "k,count\n0,1\n1,1\n2,1\n"
    assert t.poly() == UniPoly([1, 1, 1])


def test_sign_of_agrees_with_subset_split():
    for p in iter_group(3, B):
        assert in_sign_class(p, B, PLUS) == (sign_of(p, B) == 1)
