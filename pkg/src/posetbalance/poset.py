"""Finite posets stored as transitively closed bitset rows.

Elements are numbered ``1..n`` in every public function (pairs, covers,
labels lookups).  Internally element ``x`` is bit ``x - 1`` of the
``down``/``up`` masks.  Matrices returned to callers are ordinary nested
lists indexed from 0, so entry ``(x, y)`` lives at ``[x - 1][y - 1]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

MAX_ELEMENTS = 64


class PosetError(ValueError):
    """Raised for malformed poset input (cycles, bad element numbers)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the 0-based indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """A strict partial order on ``1..n``.

    ``down[i]`` is the bitmask of elements strictly below element ``i + 1``.
    Construct through :func:`from_covers`, :func:`from_down_masks` or one of
    the lattice builders rather than directly.
    """

    n: int
    down: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [0] * self.n
        for y, mask in enumerate(self.down):
            for x in bits(mask):
                up[x] |= 1 << y
        return tuple(up)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(x, y)``, 1-based, sorted; the transitive reduction."""
        out = []
        for y, below in enumerate(self.down):
            for x in bits(below):
                if not self.up[x] & below:
                    out.append((x + 1, y + 1))
        return tuple(sorted(out))

    @property
    def rel(self) -> list[list[bool]]:
        """Strict order matrix: ``rel[x-1][y-1]`` is true iff ``x < y``."""
        return [[bool(self.up[x] >> y & 1) for y in range(self.n)] for x in range(self.n)]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def less(self, x: int, y: int) -> bool:
        return bool(self.down[y - 1] >> (x - 1) & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.less(x, y) or self.less(y, x)

    def relations(self) -> set[tuple[int, int]]:
        return {(x + 1, y + 1) for y, m in enumerate(self.down) for x in bits(m)}

    def index_of(self, label: str) -> int:
        """1-based element carrying ``label``."""
        if self.labels is None:
            raise KeyError(label)
        return self.labels.index(label) + 1

    def label(self, x: int) -> str:
        return self.labels[x - 1] if self.labels else str(x)

    def heights(self) -> list[int]:
        """Length of the longest chain ending at each element (minimal elements have 0)."""
        h = [0] * self.n
        for i in topological_order(self):
            for x in bits(self.down[i]):
                h[i] = max(h[i], h[x] + 1)
        return h

    def to_json(self) -> str:
        data: dict = {"n": self.n, "covers": [list(c) for c in self.covers]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return json.dumps(data)


def topological_order(P: Poset) -> list[int]:
    """0-based elements sorted so every element follows everything below it."""
    return sorted(range(P.n), key=lambda i: (bin(P.down[i]).count("1"), i))


def from_down_masks(down: Sequence[int], labels: Sequence[str] | None = None) -> Poset:
    """Build a poset from already transitively closed strict down-set masks."""
    n = len(down)
    if n > MAX_ELEMENTS:
        raise PosetError(f"at most {MAX_ELEMENTS} elements are supported, got {n}")
    for i, m in enumerate(down):
        if m >> i & 1 or m >> n:
            raise PosetError(f"bad down mask for element {i + 1}")
        for x in bits(m):
            if down[x] & ~m:
                raise PosetError("down masks are not transitively closed")
            if down[x] >> i & 1:
                raise PosetError(f"elements {x + 1} and {i + 1} are below each other")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise PosetError("labels must have one entry per element")
    return Poset(n, tuple(down), labels)


def from_covers(n: int, covers: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Poset:
    """Transitive closure of the given relation pairs on ``1..n``.

    Redundant pairs are fine; the resulting ``covers`` attribute is the
    transitive reduction.  A cyclic input raises :class:`PosetError` naming
    the cycle.
    """
    if n < 0:
        raise PosetError("n must be non-negative")
    preds: dict[int, set[int]] = {i: set() for i in range(n)}
    for pair in covers:
        x, y = pair
        for v in (x, y):
            if not (isinstance(v, int) and 1 <= v <= n):
                raise PosetError(f"element {v!r} is outside 1..{n}")
        if x == y:
            raise PosetError(f"cycle detected: {x} -> {x}")
        preds[y - 1].add(x - 1)
    try:
        order = list(TopologicalSorter(preds).static_order())
    except CycleError as exc:
        cycle = " -> ".join(str(v + 1) for v in reversed(exc.args[1]))
        raise PosetError(f"cycle detected: {cycle}") from None
    down = [0] * n
    for v in order:
        for p in preds[v]:
            down[v] |= down[p] | (1 << p)
    return from_down_masks(down, labels)


def from_json(text: str) -> Poset:
    """Parse ``{"n": 6, "covers": [[1, 4], ...]}`` (``labels`` optional)."""
    data = json.loads(text)
    try:
        n = data["n"]
        covers = data.get("covers", [])
    except (TypeError, KeyError) as exc:
        raise PosetError("poset JSON needs 'n' and 'covers'") from exc
    if not isinstance(n, int):
        raise PosetError("'n' must be an integer")
    return from_covers(n, [tuple(c) for c in covers], data.get("labels"))


def to_dot(P: Poset, name: str = "P") -> str:
    """Hasse diagram as a DOT digraph; edges are covers, ranks are heights."""
    heights = P.heights()
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i in range(P.n):
        lines.append(f"  {i + 1} [label={json.dumps(P.label(i + 1))}];")
    for h in sorted(set(heights)):
        same = " ".join(str(i + 1) for i in range(P.n) if heights[i] == h)
        lines.append(f"  {{ rank=same; {same} }}")
    for x, y in P.covers:
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def chain(n: int) -> Poset:
    return from_covers(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> Poset:
    return from_covers(n, [])


def dual(P: Poset) -> Poset:
    return Poset(P.n, P.up, P.labels)


def add_relation(P: Poset, x: int, y: int) -> Poset:
    """``P + xy``: ``P`` with ``x < y`` added and closed transitively."""
    if P.less(y, x) or x == y:
        raise PosetError(f"adding {x} < {y} creates a cycle")
    if P.less(x, y):
        return P
    lower = P.down[x - 1] | 1 << (x - 1)
    down = list(P.down)
    down[y - 1] |= lower
    for z in bits(P.up[y - 1]):
        down[z] |= lower
    return Poset(P.n, tuple(down), P.labels)


def restrict(P: Poset, mask: int) -> Poset:
    """Induced subposet on the elements of ``mask``, renumbered in increasing order."""
    keep = list(bits(mask))
    pos = {old: new for new, old in enumerate(keep)}
    down = []
    for old in keep:
        down.append(sum(1 << pos[x] for x in bits(P.down[old] & mask)))
    labels = tuple(P.labels[i] for i in keep) if P.labels else None
    return Poset(len(keep), tuple(down), labels)


def relabel(P: Poset, perm: Sequence[int]) -> Poset:
    """Isomorphic copy where old element ``i`` (1-based) becomes ``perm[i-1]``."""
    down = [0] * P.n
    for old in range(P.n):
        new = perm[old] - 1
        down[new] = sum(1 << (perm[x] - 1) for x in bits(P.down[old]))
    return Poset(P.n, tuple(down))


def is_chain(P: Poset) -> bool:
    return all((P.down[i] | P.up[i] | 1 << i) == P.full_mask for i in range(P.n))


def is_chain_mask(P: Poset, mask: int) -> bool:
    """True iff the elements in ``mask`` are pairwise comparable."""
    return all((P.down[i] | P.up[i] | 1 << i) & mask == mask for i in bits(mask))


def is_antichain_mask(P: Poset, mask: int) -> bool:
    return all(not (P.up[i] & mask) for i in bits(mask))


def width(P: Poset) -> int:
    """Largest antichain size, via Dilworth: ``n`` minus a maximum matching of
    the comparability bipartite graph (left copy ``x`` to right copy ``y``
    whenever ``x < y``)."""
    match_right = [-1] * P.n

    def augment(x: int, seen: list[bool]) -> bool:
        for y in bits(P.up[x]):
            if not seen[y]:
                seen[y] = True
                if match_right[y] < 0 or augment(match_right[y], seen):
                    match_right[y] = x
                    return True
        return False

    matching = sum(augment(x, [False] * P.n) for x in range(P.n))
    return P.n - matching


def width_bruteforce(P: Poset) -> int:
    """Largest antichain by exhaustive branching; for cross-checking up to ~20 elements."""
    if P.n > 20:
        raise ValueError("width_bruteforce is limited to 20 elements")
    comp = [P.down[i] | P.up[i] for i in range(P.n)]

    def best(candidates: int) -> int:
        if not candidates:
            return 0
        i = candidates.bit_length() - 1
        rest = candidates & ~(1 << i)
        return max(best(rest), 1 + best(rest & ~comp[i]))

    return best(P.full_mask)


def down_sets(P: Poset) -> list[int]:
    """All down-sets (order ideals) as masks, sorted by size then mask value."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for S in frontier:
            for x in range(P.n):
                if not S >> x & 1 and P.down[x] & ~S == 0:
                    T = S | 1 << x
                    if T not in seen:
                        seen.add(T)
                        nxt.append(T)
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), m))


def principal_ideal(P: Poset, x: int) -> int:
    """Mask of the down-set generated by ``x`` (``x`` included)."""
    return P.down[x - 1] | 1 << (x - 1)


def _set_label(members: Iterable[str]) -> str:
    return "{" + ",".join(members) + "}"


def _inclusion_poset(sets: Sequence[int], labels: Sequence[str]) -> Poset:
    """Strict inclusion order on a family of distinct bitmask sets."""
    down = []
    for b in sets:
        down.append(sum(1 << i for i, a in enumerate(sets) if a != b and a & b == a))
    return from_down_masks(down, labels)


def from_permutation(pi: Sequence[int]) -> Poset:
    """Dimension-2 poset: ``x < y`` iff ``x < y`` as integers and ``x`` precedes ``y`` in ``pi``."""
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise PosetError(f"{list(pi)} is not a permutation of 1..{n}")
    pos = {v: i for i, v in enumerate(pi)}
    down = [sum(1 << (x - 1) for x in range(1, y) if pos[x] < pos[y]) for y in range(1, n + 1)]
    return Poset(n, tuple(down))


def parse_permutation(text: str) -> tuple[int, ...]:
    """``"41325"`` or ``"4,1,3,2,5"`` to a tuple of ints."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    try:
        pi = tuple(int(p) for p in parts)
    except ValueError:
        raise PosetError(f"cannot parse permutation {text!r}") from None
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise PosetError(f"{text!r} is not a permutation of 1..{len(pi)}")
    return pi


def chain_product(m: int, n: int) -> Poset:
    """``C_m x C_n``; cell ``(i, j)`` is element ``(i-1)*n + j``."""
    if m < 1 or n < 1:
        raise PosetError("chain lengths must be positive")
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    down = []
    for i, j in cells:
        down.append(sum(1 << k for k, (a, b) in enumerate(cells) if a <= i and b <= j and (a, b) != (i, j)))
    return Poset(m * n, tuple(down), tuple(f"({i},{j})" for i, j in cells))


def boolean_lattice(n: int) -> Poset:
    """Subsets of ``[n]`` under inclusion, labelled ``{}``, ``{1}``, ``{1,2}``..."""
    if n < 1:
        raise PosetError("n must be at least 1")
    subsets = sorted(range(1 << n), key=lambda s: (bin(s).count("1"), [i for i in bits(s)]))
    labels = [_set_label(str(i + 1) for i in bits(s)) for s in subsets]
    return _inclusion_poset(subsets, labels)


def set_partitions(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``1..n`` as sorted tuples of sorted blocks."""
    out = []

    def grow(k: int, blocks: list[list[int]]) -> None:
        if k > n:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(k)
            grow(k + 1, blocks)
            b.pop()
        blocks.append([k])
        grow(k + 1, blocks)
        blocks.pop()

    grow(1, [])
    return out


def partition_label(blocks: Sequence[Sequence[int]]) -> str:
    """Slash notation, e.g. ``13/2/4``."""
    return "/".join("".join(str(v) for v in b) for b in blocks)


def partition_lattice(n: int) -> Poset:
    """Set partitions of ``[n]`` ordered by refinement (finer is smaller)."""
    if n < 1:
        raise PosetError("n must be at least 1")
    parts = sorted(set_partitions(n), key=lambda p: (-len(p), p))
    block_of = []
    for p in parts:
        owner = {}
        for bi, b in enumerate(p):
            for v in b:
                owner[v] = bi
        block_of.append(owner)

    def refines(a: int, b: int) -> bool:
        # every block of a lies inside one block of b
        return all(len({block_of[b][v] for v in blk}) == 1 for blk in parts[a])

    down = [sum(1 << a for a in range(len(parts)) if a != b and refines(a, b)) for b in range(len(parts))]
    return from_down_masks(down, [partition_label(p) for p in parts])


def is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def rref_subspaces(n: int, q: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every subspace of ``F_q^n`` (``q`` prime) as its reduced row echelon basis."""
    out = []
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
            for values in product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                out.append(tuple(tuple(r) for r in rows))
    return out


def span(basis: Sequence[Sequence[int]], q: int) -> frozenset[tuple[int, ...]]:
    n = len(basis[0]) if basis else 0
    vecs = set()
    for coeffs in product(range(q), repeat=len(basis)):
        vecs.add(tuple(sum(c * row[i] for c, row in zip(coeffs, basis)) % q for i in range(n)))
    return frozenset(vecs)


def subspace_label(basis: Sequence[Sequence[int]]) -> str:
    return "<" + ",".join("".join(str(v) for v in row) for row in basis) + ">"


def subspace_lattice(n: int, q: int) -> Poset:
    """Subspaces of ``F_q^n`` under inclusion, labelled by echelon basis, e.g. ``<10>``.

    Only prime ``q`` is supported.
    """
    if n < 1:
        raise PosetError("n must be at least 1")
    if not is_prime(q):
        raise PosetError(f"q={q} is not prime; only prime fields are supported")
    bases = rref_subspaces(n, q)
    spaces = [span(b, q) if b else frozenset({(0,) * n}) for b in bases]
    down = []
    for j, W in enumerate(spaces):
        down.append(sum(1 << i for i, U in enumerate(spaces) if i != j and U < W))
    return from_down_masks(down, [subspace_label(b) for b in bases])


def ideal_lattice(P: Poset) -> Poset:
    """``J(P)``: down-sets of ``P`` under inclusion, in the order of :func:`down_sets`.

    Labels list member elements using ``P``'s own labels, e.g. ``{1,2}``.
    """
    ideals = down_sets(P)
    labels = [_set_label(P.label(i + 1) for i in bits(m)) for m in ideals]
    return _inclusion_poset(ideals, labels)
