"""Exact moments, normal CDF and Kolmogorov distance for distribution polynomials.

The only floating-point code in the package lives here: ``normal_cdf`` and
``ks_distance``.  Means and variances stay exact until they are handed to
``ks_distance``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Callable, Iterable

from .closed_forms import Family, polynomial
from .errors import DegenerateDistributionError
from .group import SignClass
from .poly import UniPoly


def _mass(p: UniPoly) -> int:
    if not p.is_nonnegative():
        raise ValueError(f"distribution polynomial has a negative coefficient: {p}")
    total = p(1)
    if total <= 0:
        raise DegenerateDistributionError("distribution polynomial has zero total mass")
    return total


def factorial_moment(p: UniPoly, r: int) -> Fraction:
    """E[X(X-1)...(X-r+1)] = p^(r)(1) / p(1)."""
    total = _mass(p)
    return Fraction(p.derivative(r)(1), total)


def mean_variance(p: UniPoly) -> tuple[Fraction, Fraction]:
    m1 = factorial_moment(p, 1)
    m2 = factorial_moment(p, 2)
    return m1, m2 + m1 - m1 * m1


def normal_cdf(x: float) -> float:
    """Standard normal CDF.

    ``math.erfc`` keeps full relative accuracy in the lower tail, so the
    absolute error stays near machine epsilon for every finite x.
    """
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def ks_distance(p: UniPoly, mu: Real, sigma: Real) -> float:
    """sup_x |F(floor(x sigma + mu)) - Phi(x)| for the normalized table of ``p``.

    Both CDFs are monotone, so the supremum is attained at a jump point
    k, approached from the right (F(k)) or from the left (F(k-1)).
    """
    sigma = float(sigma)
    if not sigma > 0:
        raise DegenerateDistributionError("sigma must be positive")
    mu = float(mu)
    total = _mass(p)
    cum = 0
    worst = 0.0
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        phi = normal_cdf((k - mu) / sigma)
        below = cum / total
        cum += c
        worst = max(worst, abs(cum / total - phi), abs(below - phi))
    return worst


# Stated means and variances with the n from which they hold.
Formula = Callable[[int], Fraction]


def _a_mean(n: int) -> Fraction:
    return Fraction(n - 1, 2)


def _half_n(n: int) -> Fraction:
    return Fraction(n, 2)


def _var_n1(n: int) -> Fraction:
    return Fraction(n + 1, 12)


def _var_n2(n: int) -> Fraction:
    return Fraction(n + 2, 12)


@dataclass(frozen=True)
class Onset:
    mean: Formula
    mean_from: int
    variance: Formula
    variance_from: int


_PM = (SignClass.Plus, SignClass.Minus)

ONSETS: dict[tuple[Family, SignClass], Onset] = {}


def _register(families, signs, onset: Onset) -> None:
    for f in families:
        for s in signs:
            ONSETS[(f, s)] = onset


# The whole-group claims are stated for all positive n but fail at the
# smallest degrees (A_1 and B_1 have the wrong variance, D_1 and D_2 are too
# small), so their onsets start where exact computation confirms them.
_register((Family.ADes, Family.AExc), (SignClass.All,), Onset(_a_mean, 1, _var_n1, 2))
_register((Family.ADes,), _PM, Onset(_a_mean, 4, _var_n1, 6))
_register((Family.AExc,), _PM, Onset(_a_mean, 3, _var_n1, 4))
_register((Family.BDes, Family.BExc), (SignClass.All,), Onset(_half_n, 1, _var_n1, 2))
_register((Family.BDes, Family.BExc), _PM, Onset(_half_n, 2, _var_n1, 3))
_register((Family.DDes,), (SignClass.All,), Onset(_half_n, 2, _var_n2, 3))
_register((Family.DDes,), _PM, Onset(_half_n, 3, _var_n2, 4))
_register(
    (Family.DExc, Family.BDesOverD, Family.BDesOverBminusD),
    (SignClass.All,),
    Onset(_half_n, 2, _var_n1, 3),
)
_register((Family.DExc,), _PM, Onset(_half_n, 3, _var_n1, 4))
_register((Family.BDesOverD, Family.BDesOverBminusD), _PM, Onset(_half_n, 3, _var_n1, 4))


@dataclass(frozen=True)
class DistReport:
    family: Family
    sign: SignClass
    n: int
    table: UniPoly
    mean: Fraction | None
    variance: Fraction | None
    ks_distance: float | None
    mean_ok: bool | None = None
    variance_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return self.mean_ok is not False and self.variance_ok is not False

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "sign": self.sign.value,
            "n": self.n,
            "coeffs": [str(c) for c in self.table.coeffs],
            "mean": _fmt(self.mean) or None,
            "variance": _fmt(self.variance) or None,
            "ks": None if self.ks_distance is None else repr(self.ks_distance),
            "mean_ok": self.mean_ok,
            "variance_ok": self.variance_ok,
        }

    def csv_row(self) -> list[str]:
        ks = "" if self.ks_distance is None else repr(self.ks_distance)
        return [str(self.n), _fmt(self.mean), _fmt(self.variance), ks]


def _fmt(x: Fraction | None) -> str:
    if x is None:
        return ""
    return f"{x.numerator}/{x.denominator}"


def dist_report(family: Family, sign: SignClass, n: int) -> DistReport:
    p = polynomial(family, n, sign)
    if p.is_zero():
        # an empty sign class (e.g. the odd elements of A_1) has no moments
        return DistReport(family, sign, n, p, None, None, None)
    mu, var = mean_variance(p)
    ks = ks_distance(p, mu, math.sqrt(var)) if var > 0 else None
    onset = ONSETS.get((family, sign))
    mean_ok = var_ok = None
    if onset is not None:
        if n >= onset.mean_from:
            mean_ok = mu == onset.mean(n)
        if n >= onset.variance_from:
            var_ok = var == onset.variance(n)
    return DistReport(family, sign, n, p, mu, var, ks, mean_ok, var_ok)


def clt_report(family: Family, sign: SignClass, n_range: Iterable[int]) -> list[DistReport]:
    """One report per n; stated moments are checked from their onset on."""
    return [dist_report(family, sign, n) for n in n_range]


def failed_onsets(reports: Iterable[DistReport]) -> list[DistReport]:
    return [r for r in reports if not r.ok]
