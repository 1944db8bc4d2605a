"""Exhaustive enumeration of A_n, B_n, D_n and B_n - D_n.

The tables built here are the brute-force oracle for every closed form.
Element streams are produced in lexicographic order of windows.  Table
construction evaluates each statistic's definition on whole batches of
windows with numpy; the work is split by the (signed) first entry of the
window and partial count vectors are summed, so the result does not depend
on how many worker processes are used.
"""
from __future__ import annotations

import csv
import io
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .config import check_brute_cap
from .errors import StatisticNotApplicableError
from .group import GroupId, SignClass, SignedPermutation, StatKind
from .poly import BiPoly, UniPoly

_default_workers: int | None = None


def set_default_workers(workers: int | None) -> None:
    global _default_workers
    _default_workers = workers


def default_workers() -> int:
    if _default_workers is not None:
        return max(1, _default_workers)
    return os.cpu_count() or 1


def _check_degree(n: int, g: GroupId) -> None:
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    check_brute_cap(n, g is GroupId.A)


def _signed_windows(n: int) -> Iterator[tuple[int, ...]]:
    values = [v for v in range(-n, n + 1) if v != 0]
    used = [False] * (n + 1)
    window: list[int] = []

    def extend():
        if len(window) == n:
            yield tuple(window)
            return
        for v in values:
            if not used[abs(v)]:
                used[abs(v)] = True
                window.append(v)
                yield from extend()
                window.pop()
                used[abs(v)] = False

    yield from extend()


def iter_group(n: int, g: GroupId) -> Iterator[SignedPermutation]:
    """Every element of the group, once each, lexicographic on windows."""
    _check_degree(n, g)
    if g is GroupId.A:
        for w in itertools.permutations(range(1, n + 1)):
            yield SignedPermutation(w)
        return
    for w in _signed_windows(n):
        k = sum(1 for x in w if x < 0)
        if g is GroupId.D and k % 2:
            continue
        if g is GroupId.BminusD and k % 2 == 0:
            continue
        yield SignedPermutation(w)


def iter_subset(n: int, g: GroupId, s: SignClass) -> Iterator[SignedPermutation]:
    from .group import in_sign_class

    for p in iter_group(n, g):
        if s is SignClass.All or in_sign_class(p, g, s):
            yield p


# --- batch tally -----------------------------------------------------------

_SIGNED_STATS = (
    StatKind.DesB, StatKind.AscB, StatKind.ExcB, StatKind.InvB,
    StatKind.InvD, StatKind.Negs, StatKind.DesD,
)
_A_STATS = (StatKind.Des, StatKind.Exc, StatKind.Inv) + _SIGNED_STATS


def _table_length(n: int) -> int:
    # inv_B is the largest statistic, at most n^2
    return n * n + 1


def _batch_windows(n: int, type_a: bool, first: int) -> np.ndarray:
    perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    perms = perms[perms[:, 0] == abs(first)]
    if type_a:
        return perms
    signs = np.array(list(itertools.product((1, -1), repeat=n)), dtype=np.int64)
    signs = signs[signs[:, 0] == (1 if first > 0 else -1)]
    return (perms[:, None, :] * signs[None, :, :]).reshape(-1, n)


def _batch_stats(w: np.ndarray) -> dict[StatKind, np.ndarray]:
    n_el, n = w.shape
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    inv_a = ((w[:, :, None] > w[:, None, :]) & upper).sum(axis=(1, 2))
    cross = ((-w[:, :, None] > w[:, None, :]) & upper).sum(axis=(1, 2))
    negs = (w < 0).sum(axis=1)

    padded = np.concatenate([np.zeros((n_el, 1), dtype=w.dtype), w], axis=1)
    des_b = (padded[:, :-1] > padded[:, 1:]).sum(axis=1)
    if n >= 2:
        padded_d = np.concatenate([-w[:, 1:2], w], axis=1)
        des_d = (padded_d[:, :-1] > padded_d[:, 1:]).sum(axis=1)
    else:
        des_d = np.zeros(n_el, dtype=np.int64)

    idx = np.arange(1, n + 1)
    target = np.take_along_axis(w, np.abs(w) - 1, axis=1)
    exc_b = ((target > w) | (w == -idx)).sum(axis=1)

    out = {
        StatKind.DesB: des_b,
        StatKind.AscB: n - des_b,
        StatKind.ExcB: exc_b,
        StatKind.InvB: inv_a + cross + negs,
        StatKind.InvD: inv_a + cross,
        StatKind.Negs: negs,
        StatKind.DesD: des_d,
        StatKind.Inv: inv_a,
        StatKind.Des: (w[:, :-1] > w[:, 1:]).sum(axis=1),
        StatKind.Exc: (w[:, : n - 1] > idx[: n - 1]).sum(axis=1),
    }
    return out


Tally = dict  # (GroupId, StatKind) -> (plus counts, minus counts) as int64 arrays


def _tally_task(n: int, type_a: bool, first: int) -> Tally:
    w = _batch_windows(n, type_a, first)
    stats = _batch_stats(w)
    length = _table_length(n)
    if type_a:
        parts = [(GroupId.A, np.ones(len(w), dtype=bool), stats[StatKind.Inv] & 1, _A_STATS)]
    else:
        even = stats[StatKind.Negs] % 2 == 0
        parity_d = stats[StatKind.InvD] & 1
        parts = [
            (GroupId.B, np.ones(len(w), dtype=bool), stats[StatKind.InvB] & 1, _SIGNED_STATS),
            (GroupId.D, even, parity_d, _SIGNED_STATS),
            (GroupId.BminusD, ~even, parity_d, _SIGNED_STATS),
        ]
    out: Tally = {}
    for g, mask, parity, kinds in parts:
        plus = mask & (parity == 0)
        minus = mask & (parity == 1)
        for kind in kinds:
            v = stats[kind]
            out[(g, kind)] = (
                np.bincount(v[plus], minlength=length)[:length],
                np.bincount(v[minus], minlength=length)[:length],
            )
    return out


def _first_entries(n: int, type_a: bool) -> list[int]:
    if type_a:
        return list(range(1, n + 1))
    return [v for v in range(-n, n + 1) if v != 0]


def tally(n: int, type_a: bool, workers: int | None = None) -> Tally:
    """Count every statistic by value and sign over the whole group.

    For ``type_a=False`` one pass over B_n fills the tables for B, D and
    B - D together.
    """
    check_brute_cap(n, type_a)
    workers = default_workers() if workers is None else max(1, workers)
    firsts = _first_entries(n, type_a)
    if workers == 1 or len(firsts) == 1:
        partials = [_tally_task(n, type_a, f) for f in firsts]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(firsts))) as ex:
            partials = list(ex.map(_tally_task, [n] * len(firsts), [type_a] * len(firsts), firsts))
    merged: Tally = {}
    for part in partials:  # canonical order: increasing first entry
        for key, (p, m) in part.items():
            if key in merged:
                mp, mm = merged[key]
                merged[key] = (mp + p, mm + m)
            else:
                merged[key] = (p.copy(), m.copy())
    return merged


@lru_cache(maxsize=32)
def _cached_tally(n: int, type_a: bool) -> Tally:
    return tally(n, type_a)


def clear_cache() -> None:
    _cached_tally.cache_clear()


# --- tables ----------------------------------------------------------------

@dataclass(frozen=True)
class DistTable:
    n: int
    group: GroupId
    sign: SignClass
    stat: StatKind
    coeffs: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def poly(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "group": self.group.value,
            "sign": self.sign.value,
            "stat": self.stat.value,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DistTable":
        return cls(
            n=int(data["n"]),
            group=GroupId(data["group"]),
            sign=SignClass(data["sign"]),
            stat=StatKind(data["stat"]),
            coeffs=tuple(int(c) for c in data["coeffs"]),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "count"])
        for k, c in enumerate(self.coeffs):
            writer.writerow([k, c])
        return buf.getvalue()


def _signed_counts(n: int, g: GroupId, stat: StatKind, workers: int | None):
    if not stat.applicable(g):
        raise StatisticNotApplicableError(f"{stat.value} is not defined on group {g.value}")
    _check_degree(n, g)
    type_a = g is GroupId.A
    t = _cached_tally(n, type_a) if workers is None else tally(n, type_a, workers)
    plus, minus = t[(g, stat)]
    return [int(x) for x in plus], [int(x) for x in minus]


def brute_distribution(
    n: int, g: GroupId, s: SignClass, stat: StatKind, workers: int | None = None
) -> DistTable:
    """Coefficient k counts the elements of the subset with statistic value k.

    ``workers=None`` uses a process-wide cache; an explicit worker count
    always recomputes.
    """
    plus, minus = _signed_counts(n, g, stat, workers)
    if s is SignClass.All:
        counts = [a + b for a, b in zip(plus, minus)]
    elif s is SignClass.Plus:
        counts = plus
    else:
        counts = minus
    return DistTable(n, g, s, stat, UniPoly(counts).coeffs)


def brute_signed_gf(n: int, g: GroupId, stat: StatKind, workers: int | None = None) -> UniPoly:
    """Sum of sign_of(p, g) * t**stat(p) over the group."""
    plus, minus = _signed_counts(n, g, stat, workers)
    return UniPoly(a - b for a, b in zip(plus, minus))


def brute_bivariate_sgn(n: int, g: GroupId, workers: int | None = None) -> BiPoly:
    """Signed sum of s**asc_B * t**des_B over D_n, B_n - D_n (sign inv_D) or B_n (sign inv_B)."""
    if g is GroupId.A:
        raise ValueError("bivariate signed enumeration needs group d, b-minus-d or b")
    signed = brute_signed_gf(n, g, StatKind.DesB, workers)
    return BiPoly({(n - k, k): c for k, c in enumerate(signed.coeffs)})


def group_order(n: int, g: GroupId) -> int:
    from math import factorial

    if g is GroupId.A:
        return factorial(n)
    if g is GroupId.B:
        return 2**n * factorial(n)
    return 2 ** (n - 1) * factorial(n)
