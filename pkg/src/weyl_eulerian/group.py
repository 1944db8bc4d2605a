"""Signed permutations and their statistics for types A, B and D.

A signed permutation is stored by its window ``(w_1, ..., w_n)``: the images
of ``1..n``.  Type A elements have an all-positive window, elements of
``D_n`` an even number of negative entries.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import caps
from .errors import InvalidWindowError, MembershipError, StatisticNotApplicableError


class GroupId(enum.Enum):
    A = "a"
    B = "b"
    D = "d"
    BminusD = "b-minus-d"

    def contains(self, p: "SignedPermutation") -> bool:
        k = negs(p.window)
        if self is GroupId.A:
            return k == 0
        if self is GroupId.B:
            return True
        if self is GroupId.D:
            return k % 2 == 0
        return k % 2 == 1


class SignClass(enum.Enum):
    All = "all"
    Plus = "plus"
    Minus = "minus"


class StatKind(enum.Enum):
    Des = "des"
    Exc = "exc"
    Inv = "inv"
    DesB = "des-b"
    AscB = "asc-b"
    ExcB = "exc-b"
    InvB = "inv-b"
    InvD = "inv-d"
    Negs = "negs"
    DesD = "des-d"

    @property
    def type_a_only(self) -> bool:
        return self in (StatKind.Des, StatKind.Exc, StatKind.Inv)

    def applicable(self, g: GroupId) -> bool:
        return g is GroupId.A or not self.type_a_only


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", w)
        problem = window_problem(w)
        if problem is not None:
            raise InvalidWindowError(problem)

    @classmethod
    def of(cls, *entries: int) -> "SignedPermutation":
        return cls(tuple(entries))

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, i: int) -> int:
        return self.window[i]

    def __str__(self) -> str:
        return format_window(self.window)


def window_problem(w: Sequence[int]) -> str | None:
    """Describe the first violated window invariant, or return None."""
    n = len(w)
    if n == 0:
        return "window is empty (degree must be positive)"
    limit = caps().max_degree
    if n > limit:
        return f"degree {n} exceeds the configured maximum {limit}"
    seen = set()
    for i, x in enumerate(w, start=1):
        if x == 0:
            return f"entry {i} is zero"
        if abs(x) > n:
            return f"entry {i} has |{x}| > n = {n}"
        if abs(x) in seen:
            return f"entry {i} repeats absolute value {abs(x)}"
        seen.add(abs(x))
    return None


def parse_window(text: str) -> SignedPermutation:
    """Parse one-line notation such as ``"-2,1"``."""
    parts = [s.strip() for s in text.strip().strip("()[]").split(",")]
    if parts == [""]:
        raise InvalidWindowError("window is empty (degree must be positive)")
    try:
        entries = tuple(int(s) for s in parts)
    except ValueError:
        raise InvalidWindowError(f"not a comma-separated list of integers: {text!r}") from None
    return SignedPermutation(entries)


def format_window(w: Iterable[int]) -> str:
    return ",".join(str(x) for x in w)


# Tuple-level statistics.  These take a raw window and do no validation;
# the enumeration oracle and the involution code call them in tight loops.

def negs(w: Sequence[int]) -> int:
    return sum(1 for x in w if x < 0)


def inv_a(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def neg_sum_pairs(w: Sequence[int]) -> int:
    """Pairs ``i < j`` with ``-w_i > w_j``."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if -w[i] > w[j])


def inv_d(w: Sequence[int]) -> int:
    return inv_a(w) + neg_sum_pairs(w)


def inv_b(w: Sequence[int]) -> int:
    return inv_a(w) + neg_sum_pairs(w) + negs(w)


def des_a(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def exc_a(w: Sequence[int]) -> int:
    # index set is [n-1]; position n can never exceed anyway
    return sum(1 for i in range(1, len(w)) if w[i - 1] > i)


def des_b(w: Sequence[int]) -> int:
    prev, count = 0, 0
    for x in w:
        if prev > x:
            count += 1
        prev = x
    return count


def des_d(w: Sequence[int]) -> int:
    if len(w) < 2:
        return 0  # D_1 is trivial; keeps D_1(t) = 1
    prev, count = -w[1], 0
    for x in w:
        if prev > x:
            count += 1
        prev = x
    return count


def exc_b(w: Sequence[int]) -> int:
    count = 0
    for i, x in enumerate(w, start=1):
        if w[abs(x) - 1] > x or x == -i:
            count += 1
    return count


def _require_positive(p: SignedPermutation, name: str) -> tuple[int, ...]:
    if any(x < 0 for x in p.window):
        raise StatisticNotApplicableError(f"{name} is defined only on type A windows, got {p}")
    return p.window


def stat_des(p: SignedPermutation) -> int:
    return des_a(_require_positive(p, "des"))


def stat_exc(p: SignedPermutation) -> int:
    return exc_a(_require_positive(p, "exc"))


def stat_inv(p: SignedPermutation) -> int:
    return inv_a(_require_positive(p, "inv"))


def stat_des_b(p: SignedPermutation) -> int:
    return des_b(p.window)


def stat_asc_b(p: SignedPermutation) -> int:
    return p.n - des_b(p.window)


def stat_exc_b(p: SignedPermutation) -> int:
    return exc_b(p.window)


def stat_inv_b(p: SignedPermutation) -> int:
    return inv_b(p.window)


def stat_inv_d(p: SignedPermutation) -> int:
    return inv_d(p.window)


def stat_negs(p: SignedPermutation) -> int:
    return negs(p.window)


def stat_des_d(p: SignedPermutation) -> int:
    return des_d(p.window)


STAT_FUNCTIONS = {
    StatKind.Des: stat_des,
    StatKind.Exc: stat_exc,
    StatKind.Inv: stat_inv,
    StatKind.DesB: stat_des_b,
    StatKind.AscB: stat_asc_b,
    StatKind.ExcB: stat_exc_b,
    StatKind.InvB: stat_inv_b,
    StatKind.InvD: stat_inv_d,
    StatKind.Negs: stat_negs,
    StatKind.DesD: stat_des_d,
}


def statistic(p: SignedPermutation, kind: StatKind) -> int:
    return STAT_FUNCTIONS[kind](p)


def length_parity(w: Sequence[int], g: GroupId) -> int:
    """Parity of the length statistic that defines the sign on ``g``."""
    if g is GroupId.A:
        return inv_a(w) & 1
    if g is GroupId.B:
        return inv_b(w) & 1
    return inv_d(w) & 1


def sign_of(p: SignedPermutation, g: GroupId) -> int:
    """``(-1)`` to the length of ``p``: inv for A, inv_B for B, inv_D otherwise."""
    if not g.contains(p):
        raise MembershipError(f"{p} is not an element of {g.name}_{p.n}")
    return -1 if length_parity(p.window, g) else 1


def in_sign_class(p: SignedPermutation, g: GroupId, s: SignClass) -> bool:
    if s is SignClass.All:
        return g.contains(p)
    return sign_of(p, g) == (1 if s is SignClass.Plus else -1)
