from math import comb, factorial

import pytest

from weyl_eulerian.closed_forms import (
    Family,
    eulerian_a,
    eulerian_b,
    eulerian_d,
    polynomial,
    sgn_bdes_bivariate,
    signed_gf,
    unrestricted,
)
from weyl_eulerian.enumeration import brute_distribution, brute_signed_gf
from weyl_eulerian.group import GroupId, SignClass, StatKind
from weyl_eulerian.poly import ONE_PLUS_T, T, BiPoly, UniPoly, one_minus_t_pow

ALL, PLUS, MINUS = SignClass.All, SignClass.Plus, SignClass.Minus


def eulerian_numbers(n):
    """Oracle: explicit alternating sum for the Eulerian numbers <n, k>."""
    return UniPoly([sum((-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 2)) for k in range(n)])


def type_b_numbers(n):
    """Oracle: recurrence B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)."""
    row = [1]
    for m in range(1, n + 1):
        new = []
        for k in range(m + 1):
            a = (2 * k + 1) * row[k] if k < len(row) else 0
            b = (2 * m - 2 * k + 1) * row[k - 1] if k >= 1 else 0
            new.append(a + b)
        row = new
    return UniPoly(row)


@pytest.mark.parametrize("n", range(1, 16))
def test_eulerian_a_matches_explicit_sum(n):
    assert eulerian_a(n) == eulerian_numbers(n)
    assert eulerian_a(n)(1) == factorial(n)


@pytest.mark.parametrize("n", range(1, 16))
def test_eulerian_b_matches_recurrence(n):
    assert eulerian_b(n) == type_b_numbers(n)
    assert eulerian_b(n)(1) == 2**n * factorial(n)


def test_eulerian_examples():
    assert eulerian_a(1) == UniPoly([1])
    assert eulerian_a(3) == UniPoly([1, 4, 1])
    assert eulerian_a(4) == UniPoly([1, 11, 11, 1])
    assert eulerian_b(1) == UniPoly([1, 1])
    assert eulerian_b(2) == UniPoly([1, 6, 1])
    assert eulerian_b(3) == UniPoly([1, 23, 23, 1])
    assert eulerian_d(1) == UniPoly([1])
    assert eulerian_d(2) == UniPoly([1, 2, 1])
    assert eulerian_d(3) == UniPoly([1, 11, 11, 1])
    with pytest.raises(ValueError):
        eulerian_a(0)


@pytest.mark.parametrize("n", range(2, 14))
def test_eulerian_d_shape(n):
    d = eulerian_d(n)
    assert d.degree == n
    assert d(1) == 2 ** (n - 1) * factorial(n)
    assert d.coeffs == tuple(reversed(d.coeffs))


@pytest.mark.parametrize("n", range(3, 9))
def test_eulerian_d_from_a_recurrence(n):
    # independent A_(n-1) via A_m = (1 + (m-1)t) A_(m-1) + t(1-t) A'_(m-1)
    m = n - 1
    a_prev = UniPoly([1, m - 1]) * eulerian_numbers(m - 1) + (T * one_minus_t_pow(1)) * eulerian_numbers(m - 1).derivative()
    assert a_prev == eulerian_a(m)
    assert eulerian_d(n) == type_b_numbers(n) - (n * 2 ** (n - 1)) * (T * a_prev)


def test_signed_gf_examples():
    assert signed_gf(Family.AExc, 3) == one_minus_t_pow(2)
    assert signed_gf(Family.DDes, 3) == ONE_PLUS_T * one_minus_t_pow(2)
    assert signed_gf(Family.DExc, 3) == one_minus_t_pow(2)
    assert signed_gf(Family.DDes, 1) == UniPoly([1])


def test_bivariate_examples():
    st = BiPoly.s_minus_t()
    assert sgn_bdes_bivariate(2, GroupId.D) == st**2
    assert sgn_bdes_bivariate(3, GroupId.BminusD) == BiPoly.t() * st**2
    assert sgn_bdes_bivariate(4, GroupId.BminusD).is_zero()
    with pytest.raises(ValueError):
        sgn_bdes_bivariate(3, GroupId.B)


def test_restricted_examples():
    assert polynomial(Family.AExc, 3, PLUS) == UniPoly([1, 1, 1])
    assert polynomial(Family.AExc, 3, MINUS) == UniPoly([0, 3])
    assert polynomial(Family.BDesOverD, 3, PLUS) == UniPoly([1, 4, 7])


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("n", range(1, 7))
def test_closed_equals_brute(fam, n):
    for sign in SignClass:
        assert polynomial(fam, n, sign).coeffs == brute_distribution(n, fam.group, sign, fam.stat).coeffs


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("n", range(1, 7))
def test_signed_equals_brute(fam, n):
    assert signed_gf(fam, n) == brute_signed_gf(n, fam.group, fam.stat)


@pytest.mark.parametrize("n", range(3, 9))
def test_des_and_exc_differ_on_sign_classes(n):
    # A_n^+ (descents) and AE_n^+ (excedances) are different polynomials
    assert polynomial(Family.ADes, n, PLUS) != polynomial(Family.AExc, n, PLUS)
    assert polynomial(Family.ADes, n) == polynomial(Family.AExc, n)


@pytest.mark.parametrize("n", range(1, 12))
def test_exc_b_and_des_b_equidistributed_on_d(n):
    assert unrestricted(Family.DExc, n) == unrestricted(Family.BDesOverD, n)


@pytest.mark.parametrize("n", range(1, 12))
def test_d_and_b_minus_d_split_b(n):
    assert unrestricted(Family.BDesOverD, n) + unrestricted(Family.BDesOverBminusD, n) == eulerian_b(n)


def test_lookup():
    assert Family.lookup(GroupId.D, StatKind.ExcB) is Family.DExc
    assert Family.lookup(GroupId.BminusD, StatKind.ExcB) is None
