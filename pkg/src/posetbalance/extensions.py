"""Exact linear-extension counts and order probabilities.

Everything here is integer or :class:`fractions.Fraction` arithmetic; the
only floats ever produced are in :func:`format_ratio`'s optional decimal.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .poset import MAX_ELEMENTS, Poset, add_relation, bits

ENUMERATION_LIMIT = 1_000_000

ONE_THIRD = Fraction(1, 3)
ONE_HALF = Fraction(1, 2)


def format_ratio(r: Fraction) -> str:
    """Always ``p/q``, including ``0/1`` and ``1/1``."""
    return f"{r.numerator}/{r.denominator}"


def parse_ratio(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class ExtensionStats:
    """``total`` is e(P); ``pair_counts[x-1][y-1]`` is e(P + xy), 0 on the diagonal."""

    total: int
    pair_counts: tuple[tuple[int, ...], ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.pair_counts)
        return buf.getvalue()


@dataclass(frozen=True)
class BalanceReport:
    delta: Fraction
    witness: tuple[int, int] | None
    all_balanced_pairs: list[tuple[int, int]] = field(default_factory=list)


def _check_size(P: Poset) -> None:
    if P.n > MAX_ELEMENTS:
        raise ValueError(f"posets are limited to {MAX_ELEMENTS} elements")


def _levels(P: Poset) -> list[dict[int, int]]:
    """Forward DP: ``levels[k][S]`` = number of ways to build the size-k down-set S
    one element at a time, i.e. e(P restricted to S)."""
    _check_size(P)
    levels = [{0: 1}]
    for _ in range(P.n):
        nxt: dict[int, int] = {}
        for S, ways in levels[-1].items():
            for x in range(P.n):
                if not S >> x & 1 and P.down[x] & ~S == 0:
                    T = S | 1 << x
                    nxt[T] = nxt.get(T, 0) + ways
        levels.append(nxt)
    return levels


def count_extensions(P: Poset) -> int:
    """e(P), by dynamic programming over down-set bitmasks."""
    if P.n == 0:
        return 1
    return _levels(P)[-1][P.full_mask]


def enumerate_extensions(P: Poset, limit: int = ENUMERATION_LIMIT) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension as a 1-based word, in lexicographic order.

    Refuses up front when e(P) exceeds ``limit``.
    """
    total = count_extensions(P)
    if total > limit:
        raise ValueError(f"e(P) = {total} exceeds the enumeration limit {limit}")
    word: list[int] = []

    def walk(S: int) -> Iterator[tuple[int, ...]]:
        if S == P.full_mask:
            yield tuple(word)
            return
        for x in range(P.n):
            if not S >> x & 1 and P.down[x] & ~S == 0:
                word.append(x + 1)
                yield from walk(S | 1 << x)
                word.pop()

    yield from walk(0)


def _sweep_matrix(P: Poset) -> ExtensionStats:
    # x precedes y exactly when x is already placed at the step y is added:
    # sum over down-sets S with y addable of (ways to reach S) * (ways to finish from S+y).
    levels = _levels(P)
    after: dict[int, int] = {P.full_mask: 1}
    for level in reversed(levels[:-1]):
        for S in level:
            after[S] = sum(after[S | 1 << x] for x in range(P.n)
                           if not S >> x & 1 and P.down[x] & ~S == 0)
    counts = [[0] * P.n for _ in range(P.n)]
    for level in levels[:-1]:
        for S, ways in level.items():
            for y in range(P.n):
                if not S >> y & 1 and P.down[y] & ~S == 0:
                    w = ways * after[S | 1 << y]
                    for x in bits(S):
                        counts[x][y] += w
    total = levels[-1][P.full_mask] if P.n else 1
    return ExtensionStats(total, tuple(tuple(r) for r in counts))


def _augment_matrix(P: Poset) -> ExtensionStats:
    total = count_extensions(P)
    counts = [[0] * P.n for _ in range(P.n)]
    for x in range(P.n):
        for y in range(P.n):
            if x == y:
                continue
            if P.up[x] >> y & 1:
                counts[x][y] = total
            elif not P.down[x] >> y & 1:
                counts[x][y] = count_extensions(add_relation(P, x + 1, y + 1))
    return ExtensionStats(total, tuple(tuple(r) for r in counts))


def pair_matrix(P: Poset, method: str = "sweep") -> ExtensionStats:
    """All e(P + xy) at once.

    ``method="sweep"`` uses one forward and one backward pass over the down-set
    lattice.  ``method="augment"`` recounts ``P + xy`` separately for every
    incomparable pair; slower, kept as an independent cross-check.
    """
    if method == "sweep":
        return _sweep_matrix(P)
    if method == "augment":
        return _augment_matrix(P)
    raise ValueError(f"unknown method {method!r}")


def prob_before(P: Poset, x: int, y: int) -> Fraction:
    """P(x before y) = e(P + xy) / e(P)."""
    if x == y:
        raise ValueError("x and y must be distinct")
    if P.less(x, y):
        return Fraction(1)
    if P.less(y, x):
        return Fraction(0)
    return Fraction(count_extensions(add_relation(P, x, y)), count_extensions(P))


def balance_from_stats(stats: ExtensionStats) -> BalanceReport:
    n = len(stats.pair_counts)
    best = Fraction(0)
    witness = None
    balanced = []
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            p = Fraction(stats.pair_counts[x][y], stats.total)
            m = min(p, 1 - p)
            if m > best:
                best, witness = m, (x + 1, y + 1)
            if x < y and m >= ONE_THIRD:
                balanced.append((x + 1, y + 1))
    return BalanceReport(best, witness, balanced)


def balance_constant(P: Poset) -> BalanceReport:
    """delta(P) = max over pairs of min(P(x<y), P(y<x)); 0 with no witness for chains."""
    return balance_from_stats(pair_matrix(P))


def is_alpha_balanced(P: Poset, x: int, y: int, alpha: Fraction) -> bool:
    alpha = Fraction(alpha)
    if not 0 <= alpha <= ONE_HALF:
        raise ValueError(f"alpha must lie in [0, 1/2], got {alpha}")
    p = prob_before(P, x, y)
    return alpha <= p <= 1 - alpha
