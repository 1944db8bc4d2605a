"""The sign-reversing involution behind the bivariate des_B enumeration.

Elements of D_n (or of B_n - D_n) with n >= 3 fall into six classes
according to where the letters of absolute value n and n-1 sit.  Classes
2..6 are paired off by maps that keep des_B and flip the parity of inv_D;
class 1 carries the whole signed sum, and the surviving fixed points form
the families L_n (in D_n) and M_n (in B_n - D_n).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .enumeration import iter_group
from .errors import MembershipError, WeylEulerianError
from .group import GroupId, SignedPermutation, des_b, inv_d, negs
from .poly import BiPoly

AMBIENTS = (GroupId.D, GroupId.BminusD)


class ClassificationError(WeylEulerianError):
    pass


@dataclass(frozen=True)
class ClassId:
    index: int
    ambient: GroupId

    def __str__(self) -> str:
        return f"{self.ambient.value}^{self.index}"


def pos_of(p: SignedPermutation, r: int) -> int:
    """1-based position of the signed value ``r`` in the window."""
    try:
        return p.window.index(r) + 1
    except ValueError:
        raise ValueError(f"value {r} does not occur in {p}") from None


def pos_abs(p: SignedPermutation, r: int) -> int:
    """1-based position of the entry with absolute value ``|r|``."""
    for i, x in enumerate(p.window, start=1):
        if abs(x) == abs(r):
            return i
    raise ValueError(f"no entry of absolute value {abs(r)} in {p}")


def _pos(w: tuple[int, ...], r: int) -> int | None:
    try:
        return w.index(r) + 1
    except ValueError:
        return None


def strip_two_largest(p: SignedPermutation) -> SignedPermutation:
    """Delete the letters of absolute value n and n-1."""
    n = p.n
    return SignedPermutation(tuple(x for x in p.window if abs(x) < n - 1))


def _check_ambient(p: SignedPermutation, ambient: GroupId) -> None:
    if ambient not in AMBIENTS:
        raise ValueError(f"ambient set must be d or b-minus-d, got {ambient.value}")
    if not ambient.contains(p):
        raise MembershipError(f"{p} is not in {ambient.value}_{p.n}")


def classify(p: SignedPermutation, ambient: GroupId = GroupId.D) -> ClassId:
    """Return the class (1..6) of ``p`` within D_n or B_n - D_n.

    Classes 1-5 require the reduced word to lie in the same kind of set as
    ``p`` (D_(n-2) for ambient D, B_(n-2) - D_(n-2) for ambient B - D); class
    6 collects the rest.  Conditions are tested in order and a double match
    is reported rather than resolved.
    """
    n = p.n
    if n < 3:
        raise ClassificationError(f"the six-class partition needs n >= 3, got n={n}")
    _check_ambient(p, ambient)
    w = p.window
    reduced_even = negs(strip_two_largest(p).window) % 2 == 0
    same_kind = reduced_even == (ambient is GroupId.D)
    pos_n, pos_n1 = _pos(w, n), _pos(w, n - 1)
    neg_n, neg_n1 = _pos(w, -n), _pos(w, -(n - 1))
    abs_n, abs_n1 = pos_abs(p, n), pos_abs(p, n - 1)
    last = w[-1]

    conditions = {
        1: same_kind and abs(abs_n - abs_n1) == 1 and abs(last) in (n - 1, n),
        2: same_kind and pos_n is not None and pos_n1 is not None
        and abs(pos_n - pos_n1) == 1 and last not in (n - 1, n),
        3: same_kind and neg_n is not None and neg_n1 is not None
        and abs(neg_n - neg_n1) == 1 and last not in (-(n - 1), -n),
        4: same_kind and pos_n is not None and pos_n1 is not None and abs(pos_n - pos_n1) > 1,
        5: same_kind and neg_n is not None and neg_n1 is not None and abs(neg_n - neg_n1) > 1,
        6: not same_kind,
    }
    hits = [k for k, ok in conditions.items() if ok]
    if len(hits) != 1:
        raise ClassificationError(f"{p} in {ambient.value}_{n} matches classes {hits}")
    return ClassId(hits[0], ambient)


def _replace(w: tuple[int, ...], mapping: dict[int, int]) -> SignedPermutation:
    return SignedPermutation(tuple(mapping.get(x, x) for x in w))


def involution_map(p: SignedPermutation, ambient: GroupId = GroupId.D) -> SignedPermutation:
    """Partner of ``p`` under the cancelling involution (classes 2-6).

    Classes 2 and 3 are exchanged by turning an adjacent pair ``n, n-1``
    into ``-(n-1), -n`` (and ``n-1, n`` into ``-n, -(n-1)``).  Classes 4, 5
    and 6 are mapped to themselves by swapping the absolute values n and
    n-1 while keeping the signs in place.
    """
    cls = classify(p, ambient).index
    n = p.n
    w = p.window
    if cls == 1:
        raise ClassificationError(f"{p} is in class 1, where no partner is defined")
    if cls == 2:
        return _replace(w, {n: -(n - 1), n - 1: -n})
    if cls == 3:
        return _replace(w, {-(n - 1): n, -n: n - 1})
    return _replace(w, {n: n - 1, n - 1: n, -n: -(n - 1), -(n - 1): -n})


def signed_weight(p: SignedPermutation) -> BiPoly:
    """``(-1)^inv_D s^asc_B t^des_B`` for a single element."""
    d = des_b(p.window)
    return BiPoly({(p.n - d, d): -1 if inv_d(p.window) % 2 else 1})


def signed_sum(elements: Iterable[SignedPermutation]) -> BiPoly:
    terms: dict[tuple[int, int], int] = {}
    for p in elements:
        d = des_b(p.window)
        key = (p.n - d, d)
        terms[key] = terms.get(key, 0) + (-1 if inv_d(p.window) % 2 else 1)
    return BiPoly(terms)


def partition(n: int, ambient: GroupId = GroupId.D) -> dict[int, list[SignedPermutation]]:
    """All elements of the ambient set grouped by class."""
    classes: dict[int, list[SignedPermutation]] = {k: [] for k in range(1, 7)}
    for p in iter_group(n, ambient):
        classes[classify(p, ambient).index].append(p)
    return classes


def _cancellation_classes(cls: int) -> tuple[int, ...]:
    if cls in (2, 3):
        return (2, 3)
    if cls in (4, 5, 6):
        return (cls,)
    raise ValueError(f"class must be in 2..6, got {cls}")


def verify_cancellation(n: int, ambient: GroupId, cls: int) -> bool:
    """True iff the signed bivariate sum over the class (2 and 3 jointly) vanishes."""
    parts = partition(n, ambient)
    members = [p for k in _cancellation_classes(cls) for p in parts[k]]
    return signed_sum(members).is_zero()


def build_fixed_points(n: int, which: str) -> list[SignedPermutation]:
    """The fixed-point families: ``"L"`` inside D_n, ``"M"`` inside B_n - D_n."""
    if n < 1:
        raise ValueError("n must be positive")
    if which == "L":
        if n == 1:
            return [SignedPermutation((1,))]
        if n == 2:
            return list(iter_group(2, GroupId.D))
    elif which == "M":
        if n % 2 == 0:
            return []
        if n == 1:
            return [SignedPermutation((-1,))]
    else:
        raise ValueError(f"which must be 'L' or 'M', got {which!r}")
    out = []
    for p in build_fixed_points(n - 2, which):
        w = p.window
        out.extend(
            SignedPermutation(w + tail)
            for tail in ((n - 1, n), (n, n - 1), (-n, -(n - 1)), (-(n - 1), -n))
        )
    return sorted(out)


def fixed_point_gf(n: int, which: str) -> BiPoly:
    return signed_sum(build_fixed_points(n, which))


@dataclass(frozen=True)
class ClassReport:
    n: int
    ambient: GroupId
    cls: int
    size: int
    signed_sum: BiPoly

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.value,
            "n": self.n,
            "class": self.cls,
            "size": self.size,
            "signed_sum": str(self.signed_sum),
            "signed_sum_is_zero": self.signed_sum.is_zero(),
        }


def class_reports(n: int, ambient: GroupId) -> list[ClassReport]:
    parts = partition(n, ambient)
    return [
        ClassReport(n, ambient, k, len(parts[k]), signed_sum(parts[k]))
        for k in range(1, 7)
    ]
