"""Eulerian polynomials of types A, B, D built from formulas, never by enumeration.

Naming of families follows the stable CLI identifiers:

==========================  ==========  =========
family                      group       statistic
==========================  ==========  =========
a-des                       A           des
a-exc                       A           exc
b-des / b-exc               B           des_B / exc_B
d-des                       D           des_D
d-exc                       D           exc_B
bdes-over-d                 D           des_B
bdes-over-b-minus-d         B - D       des_B
==========================  ==========  =========
"""
from __future__ import annotations

import enum
from functools import lru_cache

from .errors import InconsistencyError
from .group import GroupId, SignClass, StatKind
from .poly import (
    ONE_PLUS_T,
    T,
    BiPoly,
    UniPoly,
    from_series,
    one_minus_t_pow,
)


class Family(enum.Enum):
    ADes = "a-des"
    AExc = "a-exc"
    BDes = "b-des"
    BExc = "b-exc"
    DDes = "d-des"
    DExc = "d-exc"
    BDesOverD = "bdes-over-d"
    BDesOverBminusD = "bdes-over-b-minus-d"

    @property
    def group(self) -> GroupId:
        return _FAMILY_SPACE[self][0]

    @property
    def stat(self) -> StatKind:
        return _FAMILY_SPACE[self][1]

    @classmethod
    def lookup(cls, g: GroupId, stat: StatKind) -> "Family | None":
        for fam, space in _FAMILY_SPACE.items():
            if space == (g, stat):
                return fam
        return None


_FAMILY_SPACE = {
    Family.ADes: (GroupId.A, StatKind.Des),
    Family.AExc: (GroupId.A, StatKind.Exc),
    Family.BDes: (GroupId.B, StatKind.DesB),
    Family.BExc: (GroupId.B, StatKind.ExcB),
    Family.DDes: (GroupId.D, StatKind.DesD),
    Family.DExc: (GroupId.D, StatKind.ExcB),
    Family.BDesOverD: (GroupId.D, StatKind.DesB),
    Family.BDesOverBminusD: (GroupId.BminusD, StatKind.DesB),
}


def _positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


@lru_cache(maxsize=None)
def eulerian_a(n: int) -> UniPoly:
    """A_n(t), recovered from sum_k (k+1)^n t^k = A_n(t) / (1-t)^(n+1)."""
    _positive(n)
    series = [(k + 1) ** n for k in range(n)]
    return from_series(series, n + 1, n - 1)


@lru_cache(maxsize=None)
def eulerian_b(n: int) -> UniPoly:
    """B_n(t), recovered from sum_k (2k+1)^n t^k = B_n(t) / (1-t)^(n+1)."""
    _positive(n)
    series = [(2 * k + 1) ** n for k in range(n + 1)]
    return from_series(series, n + 1, n)


@lru_cache(maxsize=None)
def eulerian_d(n: int) -> UniPoly:
    """D_n(t) = B_n(t) - n 2^(n-1) t A_(n-1)(t); D_1 = 1 by convention."""
    _positive(n)
    if n == 1:
        return UniPoly([1])
    return eulerian_b(n) - (n * 2 ** (n - 1)) * (T * eulerian_a(n - 1))


def sgn_bdes_bivariate(n: int, g: GroupId) -> BiPoly:
    """Signed (inv_D) generating function of s^asc_B t^des_B over D_n or B_n - D_n."""
    _positive(n)
    st = BiPoly.s_minus_t()
    if g is GroupId.D:
        return st**n if n % 2 == 0 else BiPoly.s() * st ** (n - 1)
    if g is GroupId.BminusD:
        return BiPoly() if n % 2 == 0 else BiPoly.t() * st ** (n - 1)
    raise ValueError(f"bivariate closed form is defined for d and b-minus-d, not {g.value}")


@lru_cache(maxsize=None)
def signed_gf(family: Family, n: int) -> UniPoly:
    """Generating function weighted by (-1)^length over the family's group."""
    _positive(n)
    if family is Family.ADes:
        # reconstructed so that the half-sums reproduce the (k+1)^ceil(n/2) Carlitz terms
        return one_minus_t_pow(n // 2) * eulerian_a((n + 1) // 2)
    if family is Family.AExc:
        return one_minus_t_pow(n - 1)
    if family in (Family.BDes, Family.BExc):
        return one_minus_t_pow(n)
    if family is Family.DDes:
        if n == 1:
            return UniPoly([1])  # trivial group with des_D = 0
        return one_minus_t_pow(n) if n % 2 == 0 else ONE_PLUS_T * one_minus_t_pow(n - 1)
    if family is Family.DExc:
        return one_minus_t_pow(n) if n % 2 == 0 else one_minus_t_pow(n - 1)
    if family is Family.BDesOverD:
        return sgn_bdes_bivariate(n, GroupId.D).eval_s1()
    if family is Family.BDesOverBminusD:
        return sgn_bdes_bivariate(n, GroupId.BminusD).eval_s1()
    raise ValueError(family)


def _half(a: UniPoly, b: UniPoly, plus: bool) -> UniPoly:
    return (a + b if plus else a - b).halve()


@lru_cache(maxsize=None)
def unrestricted(family: Family, n: int) -> UniPoly:
    """Distribution polynomial over the whole group (sign class All)."""
    _positive(n)
    if family in (Family.ADes, Family.AExc):
        return eulerian_a(n)
    if family in (Family.BDes, Family.BExc):
        return eulerian_b(n)
    if family is Family.DDes:
        return eulerian_d(n)
    if family in (Family.DExc, Family.BDesOverD):
        # exc_B and des_B agree in distribution over D_n, and both equal B_n^+
        return _half(eulerian_b(n), one_minus_t_pow(n), True)
    if family is Family.BDesOverBminusD:
        return _half(eulerian_b(n), one_minus_t_pow(n), False)
    raise ValueError(family)


@lru_cache(maxsize=None)
def restricted(family: Family, n: int, sign: SignClass) -> UniPoly:
    """Half-sum ``(P(t) +/- SgnP(t)) / 2`` over the even or odd elements."""
    if sign is SignClass.All:
        return unrestricted(family, n)
    p = _half(unrestricted(family, n), signed_gf(family, n), sign is SignClass.Plus)
    if not p.is_nonnegative():
        raise InconsistencyError(f"{family.value} n={n} {sign.value}: negative coefficient in {p}")
    return p


def polynomial(family: Family, n: int, sign: SignClass = SignClass.All) -> UniPoly:
    return restricted(family, n, sign)
