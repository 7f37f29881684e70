"""Exhaustive search over small posets up to isomorphism."""
from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .extensions import ONE_THIRD, balance_constant, format_ratio
from .poset import Poset, bits, down_sets, from_down_masks, is_chain, width

MAX_SEARCH_N = 8


@dataclass(frozen=True, order=True)
class CanonicalPoset:
    """Canonical representative of an isomorphism class.

    ``down[j]`` is the strict down-set of element ``j + 1`` in the canonical
    labelling, which is always a natural labelling (``x < y`` implies
    ``x < y`` as integers).
    """

    n: int
    down: tuple[int, ...]

    def to_poset(self) -> Poset:
        return Poset(self.n, self.down)

    def matrix(self) -> list[list[int]]:
        return [[self.down[y] >> x & 1 for y in range(self.n)] for x in range(self.n)]

    @property
    def key(self) -> str:
        return f"{self.n}:" + ",".join(map(str, self.down))


def _refined_colors(P: Poset) -> list[int]:
    """Isomorphism-invariant vertex colours: (height, |L|, |U|) refined by the
    multisets of colours below and above until stable."""
    heights = P.heights()
    colors = [(heights[i], bin(P.down[i]).count("1"), bin(P.up[i]).count("1")) for i in range(P.n)]
    ranks = _rank(colors)
    while True:
        sig = [(ranks[i],
                tuple(sorted(ranks[x] for x in bits(P.down[i]))),
                tuple(sorted(ranks[x] for x in bits(P.up[i]))))
               for i in range(P.n)]
        new = _rank(sig)
        if len(set(new)) == len(set(ranks)):
            return new
        ranks = new


def _rank(values: list) -> list[int]:
    order = {v: r for r, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def canonical_form(P: Poset) -> CanonicalPoset:
    """Lexicographically least down-mask sequence over the relabellings that
    list refined colour classes in increasing order.

    Placing positions one at a time, each new element's down-mask only
    refers to already placed positions, so the search keeps just the
    candidates giving the least mask at each step.  Twins are interchangeable
    and only one of them is tried.
    """
    colors = _refined_colors(P)
    slots = sorted(range(P.n), key=lambda i: colors[i])
    slot_colors = [colors[i] for i in slots]
    best: list[int] | None = None

    def place(order: list[int], pos_of: dict[int, int], codes: list[int]) -> None:
        nonlocal best
        k = len(order)
        if k == P.n:
            if best is None or codes < best:
                best = list(codes)
            return
        options: dict[int, int] = {}
        seen_twins = set()
        for v in range(P.n):
            if v in pos_of or colors[v] != slot_colors[k]:
                continue
            twin_key = (P.down[v], P.up[v])
            if twin_key in seen_twins:
                continue
            seen_twins.add(twin_key)
            if any(x not in pos_of for x in bits(P.down[v])):
                continue
            options[v] = sum(1 << pos_of[x] for x in bits(P.down[v]))
        if not options:
            return
        low = min(options.values())
        if best is not None:
            prefix = best[:k] + [best[k]]
            if codes + [low] > prefix:
                return
        for v, code in options.items():
            if code != low:
                continue
            pos_of[v] = k
            order.append(v)
            codes.append(code)
            place(order, pos_of, codes)
            codes.pop()
            order.pop()
            del pos_of[v]

    place([], {}, [])
    assert best is not None
    return CanonicalPoset(P.n, tuple(best))


def is_linear_sum_of_singletons_and_T(P: Poset) -> bool:
    """True iff ``P`` splits as an ordinal sum whose summands are single
    points or copies of T (a 2-chain beside an isolated point)."""
    order = sorted(range(P.n), key=lambda i: bin(P.down[i]).count("1"))
    start = 0
    placed = 0
    for k, v in enumerate(order, 1):
        placed |= 1 << v
        # a cut after k elements: everything placed is below everything left
        rest = P.full_mask & ~placed
        if all(P.up[x] & rest == rest for x in bits(placed)):
            block = order[start:k]
            if not _is_point_or_T(P, block):
                return False
            start = k
    return start == P.n


def _is_point_or_T(P: Poset, block: list[int]) -> bool:
    if len(block) == 1:
        return True
    if len(block) != 3:
        return False
    mask = sum(1 << v for v in block)
    relations = sum(bin(P.up[v] & mask).count("1") for v in block)
    return relations == 1


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[CanonicalPoset, ...]:
    if n == 0:
        return (CanonicalPoset(0, ()),)
    found = set()
    for Q in _classes(n - 1):
        base = Q.to_poset()
        for D in down_sets(base):
            found.add(canonical_form(Poset(n, Q.down + (D,))))
    return tuple(sorted(found))


def enumerate_posets(n: int, max_n: int = MAX_SEARCH_N) -> Iterator[CanonicalPoset]:
    """Every isomorphism class on ``n`` elements exactly once.

    Classes are grown from the ``n - 1`` classes by adding a new maximal
    element above each down-set, then canonicalized and deduplicated.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the search cap {max_n}; raise max_n explicitly if you mean it")
    yield from _classes(n)


@dataclass
class ClassRecord:
    poset: CanonicalPoset
    delta: Fraction
    width: int
    chain: bool

    def to_json(self) -> str:
        P = self.poset.to_poset()
        return json.dumps({"key": self.poset.key, "n": self.poset.n,
                           "covers": [list(c) for c in P.covers],
                           "delta": format_ratio(self.delta), "width": self.width})

    @classmethod
    def from_json(cls, line: str) -> "ClassRecord":
        data = json.loads(line)
        n, _, masks = data["key"].partition(":")
        down = tuple(int(m) for m in masks.split(",")) if masks else ()
        cp = CanonicalPoset(int(n), down)
        return cls(cp, Fraction(data["delta"]), data["width"], data["width"] == 1)


def analyze_class(cp: CanonicalPoset) -> ClassRecord:
    P = cp.to_poset()
    return ClassRecord(cp, balance_constant(P).delta, width(P), is_chain(P))


@dataclass
class ScanReport:
    n: int
    total: int = 0
    chains: int = 0
    min_delta: Fraction | None = None
    min_delta_witness: CanonicalPoset | None = None
    min_delta_width3: Fraction | None = None
    min_delta_width3_witness: CanonicalPoset | None = None
    histogram: Counter = field(default_factory=Counter)
    below_one_third: list[CanonicalPoset] = field(default_factory=list)
    at_one_third: list[CanonicalPoset] = field(default_factory=list)
    one_third_not_T_sums: list[CanonicalPoset] = field(default_factory=list)

    def add(self, rec: ClassRecord) -> None:
        self.total += 1
        self.histogram[rec.delta] += 1
        if rec.chain:
            self.chains += 1
            return
        if self.min_delta is None or (rec.delta, rec.poset) < (self.min_delta, self.min_delta_witness):
            self.min_delta, self.min_delta_witness = rec.delta, rec.poset
        if rec.width >= 3 and (self.min_delta_width3 is None or
                               (rec.delta, rec.poset) < (self.min_delta_width3, self.min_delta_width3_witness)):
            self.min_delta_width3, self.min_delta_width3_witness = rec.delta, rec.poset
        if rec.delta < ONE_THIRD:
            self.below_one_third.append(rec.poset)
        elif rec.delta == ONE_THIRD:
            self.at_one_third.append(rec.poset)
            if not is_linear_sum_of_singletons_and_T(rec.poset.to_poset()):
                self.one_third_not_T_sums.append(rec.poset)

    def summary(self) -> dict:
        fmt = lambda r: None if r is None else format_ratio(r)
        key = lambda c: None if c is None else c.key
        return {
            "n": self.n, "total": self.total, "chains": self.chains,
            "min_delta": fmt(self.min_delta), "min_delta_witness": key(self.min_delta_witness),
            "min_delta_width3": fmt(self.min_delta_width3),
            "min_delta_width3_witness": key(self.min_delta_width3_witness),
            "histogram": {format_ratio(d): c for d, c in sorted(self.histogram.items())},
            "below_one_third": [c.key for c in self.below_one_third],
            "at_one_third": [c.key for c in self.at_one_third],
            "one_third_not_T_sums": [c.key for c in self.one_third_not_T_sums],
        }


def conjecture_scan(n: int, records_path: str | None = None, checkpoint_path: str | None = None,
                    max_n: int = MAX_SEARCH_N) -> ScanReport:
    """delta(P) and width for every class on ``n`` elements.

    With ``records_path`` each class is appended as one JSON line.  With
    ``checkpoint_path`` too, classes whose keys are already listed in the
    checkpoint are read back from the records file instead of recomputed, so
    an interrupted scan resumes where it stopped.
    """
    report = ScanReport(n)
    done: dict[str, ClassRecord] = {}
    if checkpoint_path and records_path and os.path.exists(checkpoint_path) and os.path.exists(records_path):
        with open(checkpoint_path) as fh:
            keys = {line.strip() for line in fh if line.strip()}
        with open(records_path) as fh:
            for line in fh:
                if line.strip():
                    rec = ClassRecord.from_json(line)
                    if rec.poset.key in keys:
                        done[rec.poset.key] = rec
    out = open(records_path, "a") if records_path else None
    ckpt = open(checkpoint_path, "a") if checkpoint_path else None
    try:
        for cp in enumerate_posets(n, max_n):
            rec = done.get(cp.key)
            if rec is None:
                rec = analyze_class(cp)
                if out:
                    out.write(rec.to_json() + "\n")
                    out.flush()
                if ckpt:
                    ckpt.write(cp.key + "\n")
                    ckpt.flush()
            report.add(rec)
    finally:
        for fh in (out, ckpt):
            if fh:
                fh.close()
    return report


def min_delta_by_width(n: int, min_width: int, max_n: int = MAX_SEARCH_N) -> tuple[Fraction | None, CanonicalPoset | None]:
    """Least delta over non-chain classes on ``n`` elements with width >= ``min_width``."""
    best: tuple[Fraction, CanonicalPoset] | None = None
    for cp in enumerate_posets(n, max_n):
        P = cp.to_poset()
        if is_chain(P) or width(P) < min_width:
            continue
        d = balance_constant(P).delta
        if best is None or (d, cp) < best:
            best = (d, cp)
    return best if best else (None, None)


def class_counts(max_n: int) -> list[int]:
    return [sum(1 for _ in enumerate_posets(k, max(max_n, MAX_SEARCH_N))) for k in range(1, max_n + 1)]


def from_key(key: str) -> CanonicalPoset:
    n, _, masks = key.partition(":")
    return CanonicalPoset(int(n), tuple(int(m) for m in masks.split(",")) if masks else ())


def merge_reports(reports: Iterable[ScanReport]) -> dict:
    """Totals across several scans, keyed by n."""
    return {r.n: r.summary() for r in reports}
