"""Structural certificates for balanced pairs: twins, almost twins,
automorphisms, anti-automorphisms and the 312/231 inversion criterion."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .extensions import format_ratio
from .poset import Poset, bits, dual, from_permutation, is_chain_mask

MORPHISM_LIMIT = 24

AUTOMORPHISM = "automorphism"
ANTI_AUTOMORPHISM = "anti_automorphism"

BOUNDS = {
    "twin": Fraction(1, 2),
    "almost_twin": Fraction(1, 3),
    "auto_2cycle": Fraction(1, 2),
    "anti_auto_fixed_pair": Fraction(1, 2),
    "inversion_pattern_pair": Fraction(1, 2),
}


@dataclass(frozen=True)
class Morphism:
    """A bijection of ``1..n``; ``images[x-1]`` is the image of ``x``."""

    images: tuple[int, ...]
    kind: str = AUTOMORPHISM

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: "Morphism") -> tuple[int, ...]:
        """Images of ``self after other``."""
        return tuple(self(other(x)) for x in range(1, len(self.images) + 1))

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return tuple(inv)

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x, y in enumerate(self.images, 1) if x == y)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class CertificateReport:
    """``bound`` is the balance the certificate guarantees.  For ``almost_twin``
    it bounds delta(P), since the pair itself can be unbalanced."""

    kind: str
    pair: tuple[int, int]
    bound: Fraction

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "pair": list(self.pair), "bound": format_ratio(self.bound)})


def strict_down_up(P: Poset, x: int) -> tuple[frozenset[int], frozenset[int]]:
    """``(L_x, U_x)`` as sets of 1-based elements."""
    return (frozenset(i + 1 for i in bits(P.down[x - 1])),
            frozenset(i + 1 for i in bits(P.up[x - 1])))


def twin_pairs(P: Poset) -> list[tuple[int, int]]:
    return [(x + 1, y + 1) for x, y in combinations(range(P.n), 2)
            if P.down[x] == P.down[y] and P.up[x] == P.up[y]]


def _almost_twin_primal(P: Poset, x: int, y: int) -> bool:
    if P.down[x] != P.down[y]:
        return False
    ux, uy = P.up[x], P.up[y]
    return is_chain_mask(P, ux & ~uy) and is_chain_mask(P, uy & ~ux)


def is_almost_twin(P: Poset, x: int, y: int) -> bool:
    """Equal strict lower sets and chain-shaped upper differences, both in ``P``
    or both in its dual."""
    if x == y:
        return False
    return _almost_twin_primal(P, x - 1, y - 1) or _almost_twin_primal(dual(P), x - 1, y - 1)


def almost_twin_pairs(P: Poset) -> list[tuple[int, int]]:
    D = dual(P)
    return [(x + 1, y + 1) for x, y in combinations(range(P.n), 2)
            if _almost_twin_primal(P, x, y) or _almost_twin_primal(D, x, y)]


def _search(P: Poset, target: Poset, kind: str) -> list[Morphism]:
    # maps phi with x < y in P  iff  phi(x) < phi(y) in target
    if P.n > MORPHISM_LIMIT:
        raise ValueError(f"morphism search is limited to {MORPHISM_LIMIT} elements, got {P.n}")
    n = P.n
    key = lambda Q, i: (bin(Q.down[i]).count("1"), bin(Q.up[i]).count("1"))
    candidates = [[j for j in range(n) if key(target, j) == key(P, i)] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    image = [-1] * n
    used = [False] * n
    out = []

    def extend(k: int) -> None:
        if k == n:
            out.append(Morphism(tuple(v + 1 for v in image), kind))
            return
        x = order[k]
        for c in candidates[x]:
            if used[c]:
                continue
            ok = True
            for prev in order[:k]:
                pc = image[prev]
                if (P.up[x] >> prev & 1) != (target.up[c] >> pc & 1) or \
                        (P.down[x] >> prev & 1) != (target.down[c] >> pc & 1):
                    ok = False
                    break
            if ok:
                image[x] = c
                used[c] = True
                extend(k + 1)
                used[c] = False
                image[x] = -1

    extend(0)
    return sorted(out, key=lambda m: m.images)


def automorphisms(P: Poset) -> list[Morphism]:
    """Every order automorphism (full group, sorted by image tuple)."""
    return _search(P, P, AUTOMORPHISM)


def anti_automorphisms(P: Poset) -> list[Morphism]:
    """Every order-reversing bijection, i.e. isomorphisms onto the dual."""
    return _search(P, dual(P), ANTI_AUTOMORPHISM)


def two_cycle_automorphism_pairs(P: Poset) -> list[tuple[int, int]]:
    pairs = set()
    for phi in automorphisms(P):
        for cyc in phi.cycles():
            if len(cyc) == 2:
                pairs.add(tuple(sorted(cyc)))
    return sorted(pairs)


def anti_automorphism_fixed_pairs(P: Poset) -> list[tuple[int, int]]:
    pairs = set()
    for sigma in anti_automorphisms(P):
        pairs.update(combinations(sigma.fixed_points, 2))
    return sorted(pairs)


def inversion_pattern_pairs(pi: Sequence[int]) -> list[tuple[int, int]]:
    """Inversions ``(pi_i, pi_j)`` lying in no copy of 312 or 231.

    Uses the positional characterization: the entries strictly between the
    two positions are exactly the values strictly between the two entries.
    """
    out = []
    n = len(pi)
    for i in range(n):
        for j in range(i + 1, n):
            hi, lo = pi[i], pi[j]
            if hi > lo and sorted(pi[i + 1:j]) == list(range(lo + 1, hi)):
                out.append((hi, lo))
    return sorted(out)


def pattern_of(values: Sequence[int]) -> tuple[int, ...]:
    """Standardize a sequence of distinct numbers, e.g. ``(5, 1, 3) -> (3, 1, 2)``."""
    ranks = {v: r for r, v in enumerate(sorted(values), 1)}
    return tuple(ranks[v] for v in values)


def pair_in_pattern_copy(pi: Sequence[int], i: int, j: int, pattern: Sequence[int]) -> bool:
    """Is the subsequence at positions ``i < j`` (0-based) used by some copy of a
    length-3 ``pattern`` in ``pi``?"""
    pattern = tuple(pattern)
    for t in range(len(pi)):
        if t in (i, j):
            continue
        idx = sorted((i, j, t))
        if pattern_of([pi[k] for k in idx]) == pattern:
            return True
    return False


def inversion_pattern_pairs_scan(pi: Sequence[int]) -> list[tuple[int, int]]:
    """Same result as :func:`inversion_pattern_pairs`, by scanning all pattern copies."""
    out = []
    for i, j in combinations(range(len(pi)), 2):
        if pi[i] > pi[j] and not any(pair_in_pattern_copy(pi, i, j, p) for p in ((3, 1, 2), (2, 3, 1))):
            out.append((pi[i], pi[j]))
    return sorted(out)


def certificates(P: Poset, pi: Sequence[int] | None = None) -> list[CertificateReport]:
    """Every certificate found, one report per (kind, pair).

    Pass ``pi`` when ``P`` is ``from_permutation(pi)`` to include the
    inversion-pattern pairs.
    """
    reports = [CertificateReport("twin", p, BOUNDS["twin"]) for p in twin_pairs(P)]
    twins = set(twin_pairs(P))
    reports += [CertificateReport("almost_twin", p, BOUNDS["almost_twin"])
                for p in almost_twin_pairs(P) if p not in twins]
    if P.n <= MORPHISM_LIMIT:
        reports += [CertificateReport("auto_2cycle", p, BOUNDS["auto_2cycle"])
                    for p in two_cycle_automorphism_pairs(P)]
        reports += [CertificateReport("anti_auto_fixed_pair", p, BOUNDS["anti_auto_fixed_pair"])
                    for p in anti_automorphism_fixed_pairs(P)]
    if pi is not None:
        if from_permutation(pi) != P:
            raise ValueError("pi does not generate this poset")
        reports += [CertificateReport("inversion_pattern_pair", p, BOUNDS["inversion_pattern_pair"])
                    for p in inversion_pattern_pairs(pi)]
    return reports
