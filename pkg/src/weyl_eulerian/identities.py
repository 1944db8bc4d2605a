"""Exact verification of Carlitz identities, signed enumerations and relations.

Every check returns a :class:`Verdict`; a failed identity is a verdict with
``passed=False``, never an exception, so campaigns can run to completion.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import closed_forms as cf
from .clt import factorial_moment
from .closed_forms import Family
from .enumeration import brute_bivariate_sgn, brute_distribution, brute_signed_gf
from .errors import InconsistencyError
from .group import GroupId, SignClass, StatKind
from .poly import (
    T,
    BiPoly,
    UniPoly,
    bernoulli_eval,
    one_minus_t_pow,
    series_quotient,
)

CORRECTED = "corrected"
LITERAL = "literal"

# Above this degree, relation checks take D_n^(+/-) from the closed forms
# instead of enumerating D_n.
BRUTE_AUTO_MAX = 6


@dataclass(frozen=True)
class Verdict:
    identity: str
    n: int
    K: int | None
    passed: bool
    first_fail_k: int | None = None
    lhs: str | None = None
    rhs: str | None = None

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "K": self.K,
            "pass": self.passed,
            "first_fail_k": self.first_fail_k,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


class CarlitzFamily(enum.Enum):
    A = "a"
    ADesPm = "a-des-pm"
    AExcPm = "a-exc-pm"
    B = "b"
    BPm = "b-pm"
    D = "d"
    DPm = "d-pm"
    BDesDPm = "bdes-d-pm"
    BDesBDPm = "bdes-b-minus-d-pm"

    @property
    def onset(self) -> int:
        return 2 if self in (CarlitzFamily.D, CarlitzFamily.DPm) else 1

    @property
    def refined(self) -> bool:
        return self.value.endswith("-pm")

    @property
    def signs(self) -> tuple[SignClass, ...]:
        return (SignClass.Plus, SignClass.Minus) if self.refined else (SignClass.All,)

    @property
    def base(self) -> Family:
        return _CARLITZ_BASE[self]


_CARLITZ_BASE = {
    CarlitzFamily.A: Family.ADes,
    CarlitzFamily.ADesPm: Family.ADes,
    CarlitzFamily.AExcPm: Family.AExc,
    CarlitzFamily.B: Family.BDes,
    CarlitzFamily.BPm: Family.BDes,
    CarlitzFamily.D: Family.DDes,
    CarlitzFamily.DPm: Family.DDes,
    CarlitzFamily.BDesDPm: Family.BDesOverD,
    CarlitzFamily.BDesBDPm: Family.BDesOverBminusD,
}


def type_d_term(n: int, k: int, reading: str = CORRECTED) -> Fraction:
    """(2k+1)^n - 2^(n-1) (Bern_n(k+1) - Bern_n(x0)).

    The corrected reading uses x0 = 1, which equals n * sum_{j<=k} j^(n-1)
    and is what B_n = D_n + n 2^(n-1) t A_(n-1) forces.  The literal reading
    uses x0 = k as printed; it gives n k^(n-1) and does not match D_n.
    """
    x0 = 1 if reading == CORRECTED else k
    if reading not in (CORRECTED, LITERAL):
        raise ValueError(f"unknown reading {reading!r}")
    return (2 * k + 1) ** n - 2 ** (n - 1) * (bernoulli_eval(n, k + 1) - bernoulli_eval(n, x0))


def _pm(sign: SignClass) -> int:
    return {SignClass.Plus: 1, SignClass.Minus: -1}[sign]


def _rhs_exact(fam: CarlitzFamily, n: int, k: int, sign: SignClass, reading: str) -> Fraction:
    half = Fraction(1, 2)
    if fam.refined and sign is SignClass.All:
        # the unrefined identity the two signed ones add up to
        if fam in (CarlitzFamily.ADesPm, CarlitzFamily.AExcPm):
            return Fraction((k + 1) ** n)
        if fam is CarlitzFamily.BPm:
            return Fraction((2 * k + 1) ** n)
        if fam is CarlitzFamily.DPm:
            return type_d_term(n, k, reading)
        if fam is CarlitzFamily.BDesDPm:
            return half * ((2 * k + 1) ** n + 1)
        return half * ((2 * k + 1) ** n - 1)
    if fam is CarlitzFamily.A:
        return Fraction((k + 1) ** n)
    if fam is CarlitzFamily.B:
        return Fraction((2 * k + 1) ** n)
    if fam is CarlitzFamily.D:
        return type_d_term(n, k, reading)
    e = _pm(sign)
    odd = n % 2 == 1
    if fam is CarlitzFamily.ADesPm:
        return half * ((k + 1) ** n + e * (k + 1) ** ((n + 1) // 2))
    if fam is CarlitzFamily.AExcPm:
        return half * ((k + 1) ** n + e * (k + 1))
    if fam is CarlitzFamily.BPm:
        return half * ((2 * k + 1) ** n + e)
    if fam is CarlitzFamily.DPm:
        return half * (type_d_term(n, k, reading) + e * ((2 * k + 1) if odd else 1))
    if fam is CarlitzFamily.BDesDPm:
        return half * (half * ((2 * k + 1) ** n + 1) + e * ((k + 1) if odd else 1))
    if fam is CarlitzFamily.BDesBDPm:
        return half * (half * ((2 * k + 1) ** n - 1) + (e * k if odd else 0))
    raise ValueError(fam)


def rhs_coefficient(
    fam: CarlitzFamily,
    n: int,
    k: int,
    sign: SignClass = SignClass.All,
    reading: str = CORRECTED,
) -> Fraction:
    """Coefficient of t^k on the right-hand side of the family's identity."""
    if n < fam.onset:
        raise ValueError(f"{fam.value} holds for n >= {fam.onset}, got n={n}")
    if fam.refined is False and sign is not SignClass.All:
        raise ValueError(f"{fam.value} has no signed refinement")
    v = _rhs_exact(fam, n, k, sign, reading)
    if v.denominator != 1:
        raise InconsistencyError(f"{fam.value} n={n} k={k} {sign.value}: non-integer coefficient {v}")
    return v


def carlitz_lhs(fam: CarlitzFamily, n: int, sign: SignClass = SignClass.All, source: str = "closed") -> UniPoly:
    base = fam.base
    if source == "closed":
        return cf.polynomial(base, n, sign)
    if source == "brute":
        return brute_distribution(n, base.group, sign, base.stat).poly()
    raise ValueError(f"unknown lhs source {source!r}")


def default_order(n: int) -> int:
    return max(n + 2, 50)


def verify_carlitz(
    fam: CarlitzFamily,
    n: int,
    K: int | None = None,
    sign: SignClass = SignClass.All,
    reading: str = CORRECTED,
    source: str = "closed",
) -> Verdict:
    """Compare the series of lhs/(1-t)^(n+1) with the closed right-hand side up to t^K."""
    K = default_order(n) if K is None else K
    name = f"carlitz:{fam.value}" + ("" if sign is SignClass.All else f":{sign.value}")
    if reading != CORRECTED:
        name += f":{reading}"
    lhs = carlitz_lhs(fam, n, sign, source)
    series = series_quotient(lhs, n + 1, K)
    for k, left in enumerate(series):
        right = _rhs_exact(fam, n, k, sign, reading)
        if left != right:
            return Verdict(name, n, K, False, k, str(left), str(right))
    return Verdict(name, n, K, True)


def _poly_verdict(name: str, n: int, lhs, rhs) -> Verdict:
    if lhs == rhs:
        return Verdict(name, n, None, True)
    first = None
    if isinstance(lhs, UniPoly) and isinstance(rhs, UniPoly):
        top = max(lhs.degree, rhs.degree)
        first = next(k for k in range(top + 1) if lhs.coeff(k) != rhs.coeff(k))
    return Verdict(name, n, None, False, first, str(lhs), str(rhs))


def divisible_by_one_minus_t(p: UniPoly, ell: int) -> bool:
    """True iff (1-t)^ell divides p, i.e. p and its first ell-1 derivatives vanish at 1."""
    return all(p.derivative(r)(1) == 0 for r in range(ell))


def verify_moment_lemma(
    F: UniPoly, G: UniPoly, lam: Fraction, ell: int, name: str = "moment-lemma", n: int = 0
) -> Verdict:
    """Factorial moments of orders 1..ell-1 of F and G agree exactly.

    ``lam`` is recorded for the decomposition F = lam G +/- (1-t)^ell H but
    does not enter the comparison; normalisation removes it.
    """
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    for r in range(1, ell):
        mf, mg = factorial_moment(F, r), factorial_moment(G, r)
        if mf != mg:
            return Verdict(name, n, None, False, r, str(mf), str(mg))
    return Verdict(name, n, None, True)


@dataclass(frozen=True)
class MomentInstance:
    name: str
    n: int
    sign: SignClass
    F: UniPoly
    G: UniPoly
    lam: Fraction
    ell: int


def moment_lemma_instances(n: int) -> list[MomentInstance]:
    """(F, G, 1/2, ell) pairs from the half-sum decompositions of each +/- family."""
    half = Fraction(1, 2)
    even = n % 2 == 0
    b_plus = cf.polynomial(Family.BDes, n, SignClass.Plus)
    b_minus = cf.polynomial(Family.BDes, n, SignClass.Minus)
    specs = [
        ("moment-lemma:a-des", Family.ADes, lambda s: cf.eulerian_a(n), n // 2),
        ("moment-lemma:a-exc", Family.AExc, lambda s: cf.eulerian_a(n), n - 1),
        ("moment-lemma:b-exc", Family.BExc, lambda s: cf.eulerian_b(n), n),
        ("moment-lemma:d-des", Family.DDes, lambda s: cf.eulerian_d(n), n - 1),
        ("moment-lemma:d-exc", Family.DExc, lambda s: cf.unrestricted(Family.DExc, n), n if even else n - 1),
        ("moment-lemma:bdes-over-d", Family.BDesOverD, lambda s: b_plus, n if even else n - 1),
        ("moment-lemma:bdes-over-b-minus-d", Family.BDesOverBminusD, lambda s: b_minus, n if even else n - 1),
    ]
    out = []
    for name, fam, g_of, ell in specs:
        for sign in (SignClass.Plus, SignClass.Minus):
            F, G = cf.polynomial(fam, n, sign), g_of(sign)
            if ell < 1 or F.is_zero() or G.is_zero():
                continue
            out.append(MomentInstance(f"{name}:{sign.value}", n, sign, F, G, half, ell))
    return out


def _d_pm(n: int, sign: SignClass, source: str) -> UniPoly:
    if source == "auto":
        source = "brute" if n <= BRUTE_AUTO_MAX else "carlitz"
    if source == "brute":
        return brute_distribution(n, GroupId.D, sign, StatKind.DesD).poly()
    if source == "carlitz":
        # rebuild D_n^(+/-) from its own series, independent of the B/A relation
        from .poly import from_series

        fam = CarlitzFamily.DPm if sign is not SignClass.All else CarlitzFamily.D
        series = [_rhs_exact(fam, n, k, sign, CORRECTED) for k in range(n + 1)]
        return from_series(series, n + 1, n)
    raise ValueError(f"unknown source {source!r}")


def verify_brenti_relation(n: int, source: str = "auto") -> Verdict:
    """B_n(t) = D_n(t) + n 2^(n-1) t A_(n-1)(t)."""
    lhs = cf.eulerian_b(n)
    rhs = _d_pm(n, SignClass.All, source) + (n * 2 ** (n - 1)) * (T * cf.eulerian_a(n - 1))
    return _poly_verdict("brenti-relation", n, lhs, rhs)


def verify_stembridge_refined(n: int, sign: SignClass, source: str = "auto") -> Verdict:
    """B_n^(+/-) = D_n^(+/-) + (n 2^(n-1) / 2) t A_(n-1), with -/+ t(1-t)^(n-1) for odd n."""
    lhs = cf.polynomial(Family.BDes, n, sign)
    rhs = _d_pm(n, sign, source) + (n * 2 ** (n - 2)) * (T * cf.eulerian_a(n - 1))
    if n % 2 == 1:
        rhs = rhs - _pm(sign) * (T * one_minus_t_pow(n - 1))
    return _poly_verdict(f"stembridge-pm:{sign.value}", n, lhs, rhs)


def verify_equidistribution(n: int) -> Verdict:
    """des_B and exc_B agree in distribution over D_n^(+/-) and (B_n - D_n)^(+/-)."""
    for g in (GroupId.D, GroupId.BminusD):
        for s in (SignClass.Plus, SignClass.Minus):
            a = brute_distribution(n, g, s, StatKind.DesB).poly()
            b = brute_distribution(n, g, s, StatKind.ExcB).poly()
            if a != b:
                v = _poly_verdict(f"equidistribution:{g.value}:{s.value}", n, a, b)
                return Verdict("equidistribution", n, None, False, v.first_fail_k, v.lhs, v.rhs)
    return Verdict("equidistribution", n, None, True)


def verify_reiner_bivariate(n: int) -> Verdict:
    """Sum over B_n of (-1)^inv_B s^asc_B t^des_B equals (s-t)^n."""
    return _poly_verdict("reiner-bivariate", n, brute_bivariate_sgn(n, GroupId.B), BiPoly.s_minus_t() ** n)


def _signed_check(name: str, g: GroupId, stat: StatKind, family: Family) -> Callable[[int], list[Verdict]]:
    def run(n: int) -> list[Verdict]:
        return [_poly_verdict(name, n, brute_signed_gf(n, g, stat), cf.signed_gf(family, n))]

    return run


def _sgnbdes(n: int) -> list[Verdict]:
    return [
        _poly_verdict(f"sgnbdes:{g.value}", n, brute_bivariate_sgn(n, g), cf.sgn_bdes_bivariate(n, g))
        for g in (GroupId.D, GroupId.BminusD)
    ]


def _moment_lemma(n: int) -> list[Verdict]:
    return [
        verify_moment_lemma(m.F, m.G, m.lam, m.ell, m.name, n) for m in moment_lemma_instances(n)
    ]


@dataclass(frozen=True)
class NamedIdentity:
    name: str
    onset: int
    brute: bool
    run: Callable[[int], list[Verdict]]


NAMED_IDENTITIES: dict[str, NamedIdentity] = {
    i.name: i
    for i in (
        NamedIdentity("mantaci", 1, True, _signed_check("mantaci", GroupId.A, StatKind.Exc, Family.AExc)),
        NamedIdentity("sgn-a-des", 1, True, _signed_check("sgn-a-des", GroupId.A, StatKind.Des, Family.ADes)),
        NamedIdentity("reiner-b", 1, True, _signed_check("reiner-b", GroupId.B, StatKind.DesB, Family.BDes)),
        NamedIdentity("sgn-b-exc", 1, True, _signed_check("sgn-b-exc", GroupId.B, StatKind.ExcB, Family.BExc)),
        NamedIdentity("reiner-d", 2, True, _signed_check("reiner-d", GroupId.D, StatKind.DesD, Family.DDes)),
        NamedIdentity("sgn-d-exc", 1, True, _signed_check("sgn-d-exc", GroupId.D, StatKind.ExcB, Family.DExc)),
        NamedIdentity("reiner-bivariate", 1, True, lambda n: [verify_reiner_bivariate(n)]),
        NamedIdentity("sgnbdes", 1, True, _sgnbdes),
        NamedIdentity("brenti-relation", 2, False, lambda n: [verify_brenti_relation(n)]),
        NamedIdentity(
            "stembridge-pm",
            2,
            False,
            lambda n: [verify_stembridge_refined(n, s) for s in (SignClass.Plus, SignClass.Minus)],
        ),
        NamedIdentity("equidistribution", 1, True, lambda n: [verify_equidistribution(n)]),
        NamedIdentity("moment-lemma", 2, False, _moment_lemma),
    )
}


def carlitz_campaign(fam: CarlitzFamily, n_values, K: int | None = None) -> Iterator[Verdict]:
    for n in n_values:
        for sign in fam.signs:
            yield verify_carlitz(fam, n, K, sign)
