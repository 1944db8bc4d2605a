"""Exact univariate/bivariate integer polynomials and rational sequences.

Everything here is arbitrary precision; there is no floating point.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from .config import caps
from .errors import InconsistencyError, ResourceLimitError

RatSeq = tuple  # tuple[Fraction, ...], lowest terms with positive denominators

Number = Union[int, Fraction]


class UniPoly:
    """Dense polynomial in ``t`` with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``.  Trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "UniPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return to_text(self)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.coeff(k) + o.coeff(k) for k in range(m))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.is_zero() or o.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``t**k``."""
        if self.is_zero():
            return self
        return UniPoly([0] * k + list(self.coeffs))

    def derivative(self, r: int = 1) -> "UniPoly":
        c = list(self.coeffs)
        for _ in range(r):
            c = [k * c[k] for k in range(1, len(c))]
        return UniPoly(c)

    def truncate(self, k: int) -> "UniPoly":
        """Keep the terms of degree <= k."""
        return UniPoly(self.coeffs[: k + 1])

    def halve(self) -> "UniPoly":
        odd = [k for k, c in enumerate(self.coeffs) if c % 2]
        if odd:
            raise InconsistencyError(f"cannot halve {self}: odd coefficient at t^{odd[0]}")
        return UniPoly(c // 2 for c in self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "UniPoly":
        return cls(int(x) for x in data)


ONE = UniPoly([1])
T = UniPoly([0, 1])
ONE_MINUS_T = UniPoly([1, -1])
ONE_PLUS_T = UniPoly([1, 1])


def poly_arith(a: UniPoly, b: UniPoly, op: str) -> UniPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


@lru_cache(maxsize=None)
def one_minus_t_pow(m: int) -> UniPoly:
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    return UniPoly((-1) ** k * comb(m, k) for k in range(m + 1))


def to_text(p: UniPoly, var: str = "t") -> str:
    """Render as ``"c0 + c1*t + c2*t^2"``; zero terms are omitted."""
    if p.is_zero():
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        elif k == 1:
            body = f"{abs(c)}*{var}"
        else:
            body = f"{abs(c)}*{var}^{k}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms)


_TERM = re.compile(r"^([+-]?\d+)(?:\*([a-z])(?:\^(\d+))?)?$")


def from_text(text: str) -> UniPoly:
    """Inverse of :func:`to_text`; every term must carry an explicit coefficient."""
    s = text.replace(" ", "")
    if s == "0":
        return UniPoly()
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in filter(None, s.split("+")):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        c, var, e = m.groups()
        k = 0 if var is None else int(e or 1)
        coeffs[k] = coeffs.get(k, 0) + int(c)
    top = max(coeffs) if coeffs else -1
    return UniPoly(coeffs.get(k, 0) for k in range(top + 1))


def series_quotient(p: UniPoly, m: int, K: int) -> RatSeq:
    """First ``K+1`` coefficients of ``p(t) / (1-t)**m``."""
    if m < 0 or K < 0:
        raise ValueError("m and K must be nonnegative")
    out = []
    for k in range(K + 1):
        acc = 0
        for j in range(min(k, p.degree) + 1):
            c = p.coeffs[j]
            if c:
                acc += c * (comb(k - j + m - 1, m - 1) if m > 0 else int(k == j))
        out.append(Fraction(acc))
    return tuple(out)


def from_series(coeffs: Sequence[Number], m: int, degree: int) -> UniPoly:
    """Recover ``p`` of degree <= ``degree`` from the series of ``p/(1-t)**m``.

    This is the Carlitz inversion: multiply the truncated series by
    ``(1-t)**m`` and keep terms up to ``degree``.
    """
    if len(coeffs) <= degree:
        raise ValueError("need at least degree+1 series coefficients")
    f = one_minus_t_pow(m)
    out = []
    for k in range(degree + 1):
        acc = sum(Fraction(f.coeff(j)) * Fraction(coeffs[k - j]) for j in range(min(k, f.degree) + 1))
        if acc.denominator != 1:
            raise InconsistencyError(f"non-integer coefficient {acc} at t^{k} in Carlitz inversion")
        out.append(int(acc))
    return UniPoly(out)


# Bernoulli polynomials, convention B_1(x) = x - 1/2.

@lru_cache(maxsize=None)
def _bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, n + 1):
        # sum_{k=0}^{m} C(m+1, k) b_k = 0
        s = sum(comb(m + 1, k) * b[k] for k in range(m))
        b.append(-s / (m + 1))
    return tuple(b)


def bernoulli_poly(n: int) -> RatSeq:
    """Coefficients (by power of x) of the n-th Bernoulli polynomial."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > caps().bernoulli:
        raise ResourceLimitError(f"Bernoulli degree {n} exceeds cap {caps().bernoulli}")
    b = _bernoulli_numbers(n)
    return tuple(Fraction(comb(n, j)) * b[n - j] for j in range(n + 1))


def eval_ratseq(coeffs: Sequence[Number], x: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def bernoulli_eval(n: int, x: Number) -> Fraction:
    return eval_ratseq(bernoulli_poly(n), x)


def power_sum(m: int, k: int, method: str = "direct") -> int:
    """``sum_{j=1}^{k} j**m``, directly or through Bernoulli polynomials."""
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    if method == "direct":
        return sum(j**m for j in range(1, k + 1))
    if method == "bernoulli":
        v = (bernoulli_eval(m + 1, k + 1) - bernoulli_eval(m + 1, 1)) / (m + 1)
        if v.denominator != 1:
            raise InconsistencyError(f"power sum ({m}, {k}) came out non-integral: {v}")
        return int(v)
    raise ValueError(f"unknown method {method!r}")


class BiPoly:
    """Sparse polynomial in ``(s, t)``: ``{(i, j): c}`` means ``c * s**i * t**j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {
            (int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c
        }

    @classmethod
    def s_minus_t(cls) -> "BiPoly":
        return cls({(1, 0): 1, (0, 1): -1})

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def s(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            mono = "*".join(
                x for x in (
                    "" if i == 0 else ("s" if i == 1 else f"s^{i}"),
                    "" if j == 0 else ("t" if j == 1 else f"t^{j}"),
                ) if x
            )
            body = f"{abs(c)}*{mono}" if mono else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}" if parts else ("-" if c < 0 else "") + body)
        return " ".join(parts)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    def __pow__(self, e: int) -> "BiPoly":
        result = BiPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def is_homogeneous(self, degree: int) -> bool:
        return all(i + j == degree for i, j in self.terms)

    def eval_s1(self) -> UniPoly:
        top = max((j for _, j in self.terms), default=-1)
        c = [0] * (top + 1)
        for (_, j), v in self.terms.items():
            c[j] += v
        return UniPoly(c)

    def to_json(self) -> list[list[str]]:
        return [[str(i), str(j), str(c)] for (i, j), c in sorted(self.terms.items())]


def bipoly_arith(a: BiPoly, b: BiPoly, op: str) -> BiPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown bivariate operation {op!r}")


def bipoly_eval_s1(a: BiPoly) -> UniPoly:
    return a.eval_s1()


def ratseq_to_json(seq: Sequence[Fraction]) -> str:
    return json.dumps([str(x) for x in seq])
