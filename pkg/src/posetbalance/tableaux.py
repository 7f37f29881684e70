"""Young diagrams (straight, skew, shifted, shifted skew) as posets,
hook lengths, standard Young tableaux and almost-twin cells.

Cells are ``(row, col)`` pairs, 1-based.  In a shifted diagram row ``i``
starts at column ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .extensions import prob_before
from .poset import Poset, PosetError, is_chain

Cell = tuple[int, int]


class ShapeError(ValueError):
    pass


def _strip(parts: Sequence[int]) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@dataclass(frozen=True)
class Shape:
    """``outer / inner``; ``inner`` empty for a straight shape."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()
    shifted: bool = False

    def __post_init__(self) -> None:
        outer, inner = _strip(self.outer), _strip(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        for name, parts in (("outer", outer), ("inner", inner)):
            if any(p < 0 for p in parts):
                raise ShapeError(f"{name} parts must be non-negative")
            if any(a < b for a, b in zip(parts, parts[1:])):
                raise ShapeError(f"{name} {parts} is not weakly decreasing")
            if self.shifted and any(a == b for a, b in zip(parts, parts[1:])):
                raise ShapeError(f"shifted {name} {parts} must be strictly decreasing")
        if any(p == 0 for p in outer):
            raise ShapeError("outer parts must be positive")
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ShapeError(f"{inner} does not fit inside {outer}")

    @property
    def is_skew(self) -> bool:
        return bool(self.inner)

    def mu(self, i: int) -> int:
        """Inner part ``i`` (1-based), 0 past its end."""
        return self.inner[i - 1] if i <= len(self.inner) else 0

    def row_span(self, i: int) -> tuple[int, int]:
        """First and last column of row ``i``; empty when first > last."""
        off = i - 1 if self.shifted else 0
        return self.mu(i) + 1 + off, self.outer[i - 1] + off

    def cells(self) -> list[Cell]:
        out = []
        for i in range(1, len(self.outer) + 1):
            a, b = self.row_span(i)
            out.extend((i, j) for j in range(a, b + 1))
        return out

    def size(self) -> int:
        return len(self.cells())

    def __str__(self) -> str:
        text = ",".join(map(str, self.outer))
        if self.inner:
            text += "/" + ",".join(map(str, self.inner))
        return text + (" (shifted)" if self.shifted else "")


def parse_shape(text: str, shifted: bool = False) -> Shape:
    """``"4,4,2"`` or skew ``"4,2,2,1/2,1"``."""
    outer_text, _, inner_text = text.partition("/")
    try:
        outer = [int(p) for p in outer_text.split(",") if p.strip()]
        inner = [int(p) for p in inner_text.split(",") if p.strip()]
    except ValueError:
        raise ShapeError(f"cannot parse shape {text!r}") from None
    return Shape(tuple(outer), tuple(inner), shifted)


def diagram(shape: Shape) -> str:
    """ASCII picture: ``#`` for cells, ``.`` for removed inner cells."""
    lines = []
    for i in range(1, len(shape.outer) + 1):
        off = i - 1 if shape.shifted else 0
        a, b = shape.row_span(i)
        lines.append(" " * off + "." * (a - 1 - off) + "#" * (b - a + 1))
    return "\n".join(lines)


def shape_to_poset(shape: Shape) -> Poset:
    """Cells ordered componentwise, numbered row-major; labels ``(i,j)``."""
    cells = shape.cells()
    down = []
    for i, j in cells:
        down.append(sum(1 << k for k, (a, b) in enumerate(cells) if a <= i and b <= j and (a, b) != (i, j)))
    return Poset(len(cells), tuple(down), tuple(f"({i},{j})" for i, j in cells))


def cell_element(shape: Shape, cell: Cell) -> int:
    """1-based element number of ``cell`` in :func:`shape_to_poset`."""
    return shape.cells().index(tuple(cell)) + 1


def _straight(lam: Sequence[int]) -> Shape:
    shape = lam if isinstance(lam, Shape) else Shape(tuple(lam))
    if shape.is_skew or shape.shifted:
        raise ShapeError("only straight (non-skew, non-shifted) shapes have a hook formula here")
    return shape


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0])) if lam else ()


def hook_lengths(lam: Sequence[int] | Shape) -> list[list[int]]:
    shape = _straight(lam)
    lam = shape.outer
    cols = conjugate(lam)
    return [[lam[i] - j + cols[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def syt_count(lam: Sequence[int] | Shape) -> int:
    """f^lambda by the hook-length formula."""
    shape = _straight(lam)
    n = sum(shape.outer)
    denom = prod(h for row in hook_lengths(shape) for h in row)
    count, rem = divmod(factorial(n), denom)
    assert rem == 0, "hook product must divide n!"
    return count


def lemma_ratio(m: int, n: int) -> Fraction:
    """f^(n^(m-1), n-2) / f^(n^m) in closed form."""
    if m < 1 or n < 3:
        raise ValueError("need m >= 1 and n >= 3")
    return Fraction((n - 1) * (m + 1), 2 * (m * n - 1))


def rectangle_balance_pair(m: int, n: int) -> tuple[tuple[Cell, Cell], Fraction]:
    """Cells ``a=(1,2)``, ``b=(2,1)`` of the ``m x n`` rectangle and P(a before b)."""
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    shape = Shape((n,) * m)
    a, b = (1, 2), (2, 1)
    P = shape_to_poset(shape)
    return (a, b), prob_before(P, cell_element(shape, a), cell_element(shape, b))


def tableau_from_extension(shape: Shape, word: Sequence[int]) -> dict[Cell, int]:
    """The k-th element of the extension receives entry k."""
    cells = shape.cells()
    return {cells[x - 1]: k for k, x in enumerate(word, 1)}


def extension_from_tableau(shape: Shape, tableau: dict[Cell, int]) -> tuple[int, ...]:
    cells = shape.cells()
    by_entry = sorted(tableau.items(), key=lambda item: item[1])
    return tuple(cells.index(c) + 1 for c, _ in by_entry)


def is_standard(shape: Shape, tableau: dict[Cell, int]) -> bool:
    cells = shape.cells()
    if sorted(tableau) != sorted(cells) or sorted(tableau.values()) != list(range(1, len(cells) + 1)):
        return False
    return all(tableau[(i, j)] < tableau[c] for (i, j) in cells
               for c in ((i + 1, j), (i, j + 1)) if c in tableau)


# --- almost twin pairs in diagrams --------------------------------------

def _components(cells: list[Cell]) -> list[list[Cell]]:
    """Edge-connected components, each sorted, ordered by their first cell."""
    remaining = set(cells)
    comps = []
    for start in sorted(cells):
        if start not in remaining:
            continue
        stack, comp = [start], []
        remaining.discard(start)
        while stack:
            i, j = stack.pop()
            comp.append((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    return comps


def _cells_form_chain(cells: list[Cell]) -> bool:
    return all((a <= c and b <= d) or (c <= a and d <= b) for (a, b) in cells for (c, d) in cells)


def _normalize(shape: Shape, comp: list[Cell]) -> tuple[Shape, int, int]:
    """Re-express one connected block of cells as a standalone shape.

    Returns the shape and the (row, col) offsets to add to its cells to get
    back to the original coordinates.  Blocks whose row starts never move
    right going down become left-justified skew shapes with no empty column
    on the left; the rest stay shifted.
    """
    rows = sorted({i for i, _ in comp})
    spans = [(min(j for i, j in comp if i == r), max(j for i, j in comp if i == r)) for r in rows]
    starts = [a for a, _ in spans]
    r0 = rows[0] - 1
    if all(s >= t for s, t in zip(starts, starts[1:])):
        c = min(starts) - 1
        return Shape(tuple(b - c for _, b in spans), tuple(a - 1 - c for a, _ in spans)), r0, c
    if not shape.shifted or rows[-1] != len(shape.outer):
        raise AssertionError("unexpected block layout")
    sub = Shape(shape.outer[r0:], tuple(shape.mu(r) for r in rows), True)
    return sub, r0, r0


def _skew_cases(shape: Shape) -> tuple[str, tuple[Cell, Cell]]:
    """Connected left-justified skew shape, last row starting in column 1."""
    lam, k, l = shape.outer, len(shape.outer), len(shape.inner)

    def mu(i: int) -> int:
        return lam[0] if i == 0 else shape.mu(i)

    for i in range(1, l + 1):
        if mu(i - 1) - 1 >= mu(i) == mu(i + 1) + 1:
            return "skew (i)", ((i, mu(i) + 1), (i + 1, mu(i + 1) + 1))
    for i in range(1, l):
        if mu(i - 1) - 2 >= mu(i) == mu(i + 1):
            return "skew (ii)", ((i, mu(i) + 2), (i + 1, mu(i + 1) + 1))
    if k == l + 1 and mu(l - 1) - 1 >= mu(l):
        return "skew (iii)", ((l, mu(l) + 1), (l + 1, 1))
    if k >= l + 2 and mu(l) >= 2:
        return "skew (iv)", ((l + 1, 2), (l + 2, 1))
    m1 = _staircase_first_run(shape.inner)
    if m1 is not None and lam[0] == mu(1) + 1:
        return "skew (v)", ((1, mu(1) + 1), (m1 + 1, mu(m1 + 1) + 1))
    raise ShapeError(f"no case applies to {shape}")


def _staircase_first_run(inner: Sequence[int]) -> int | None:
    """Length of the first run if ``inner`` is ``(s^m1, (s-1)^m2, ...)`` with
    every run at least 2 long, else None."""
    if not inner:
        return None
    runs = [1]
    for a, b in zip(inner, inner[1:]):
        if a == b:
            runs[-1] += 1
        elif a - b == 1:
            runs.append(1)
        else:
            return None
    return runs[0] if min(runs) >= 2 else None


def _shifted_skew_cases(shape: Shape) -> tuple[str, tuple[Cell, Cell]]:
    """Connected shifted skew shape with at least two rows below the inner shape."""
    lam, k, l = shape.outer, len(shape.outer), len(shape.inner)
    # rows 1..l+1 read as a left-justified skew diagram in the same columns;
    # row l+1 starts on the diagonal, so its inner part there is l
    top_inner = [i + shape.mu(i) - 1 for i in range(1, l + 1)] + [l]

    def mu(i: int) -> int:
        if i == 0:
            return lam[0]
        return top_inner[i - 1]

    def row_start(i: int) -> int:
        return shape.row_span(i)[0]

    for i in range(1, l + 1):
        if mu(i - 1) - 1 >= mu(i) == mu(i + 1) + 1:
            return "shifted skew (i)", ((i, mu(i) + 1), (i + 1, mu(i + 1) + 1))
    for i in range(1, l + 1):
        if mu(i - 1) - 2 >= mu(i) == mu(i + 1):
            return "shifted skew (ii)", ((i, mu(i) + 2), (i + 1, mu(i + 1) + 1))
    # case (v) inside the first l rows, then with the diagonal row l+1 included
    for frame in (top_inner[:l], top_inner):
        m1 = _staircase_first_run(frame)
        if m1 is not None and m1 < len(frame) and lam[0] == mu(1) + 1:
            return "shifted skew (v)", ((1, mu(1) + 1), (m1 + 1, row_start(m1 + 1)))
    mu_l = shape.mu(l)
    if mu_l > 3:
        return "shifted skew, shifted tail", ((l + 1, l + 3), (l + 2, l + 2))
    if mu_l in (2, 3):
        # climb to the top of any run of rows starting in row l's column,
        # otherwise the cell above (l, mu_l + l) spoils the equal lower sets
        j = l
        while j > 1 and row_start(j - 1) == row_start(l):
            j -= 1
        return "shifted skew, mu_l in {2,3}", ((j, mu_l + l), (l + 1, l + 1))
    raise ShapeError(f"no case applies to {shape}")


def almost_twin_case(shape: Shape) -> tuple[str, tuple[Cell, Cell]]:
    """The case that fires and its pair of cells; see :func:`find_almost_twin_in_shape`."""
    cells = shape.cells()
    if _cells_form_chain(cells):
        raise ShapeError(f"the poset of {shape} is a chain")
    comps = _components(cells)
    if len(comps) > 1:
        for comp in comps:
            if not _cells_form_chain(comp):
                sub, dr, dc = _normalize(shape, comp)
                case, (a, b) = almost_twin_case(sub)
                return f"component: {case}", ((a[0] + dr, a[1] + dc), (b[0] + dr, b[1] + dc))
        # only chains: their minimal cells share an empty down-set and chain up-sets
        return "chain components", (comps[0][0], comps[1][0])
    sub, dr, dc = _normalize(shape, comps[0])
    if not sub.inner:
        if sub.shifted:
            case, pair = "straight shifted", ((1, 3), (2, 2))
        else:
            case, pair = "straight", ((1, 2), (2, 1))
    elif sub.shifted:
        case, pair = _shifted_skew_cases(sub)
    else:
        case, pair = _skew_cases(sub)
    (a, b) = pair
    return case, ((a[0] + dr, a[1] + dc), (b[0] + dr, b[1] + dc))


def find_almost_twin_in_shape(shape: Shape) -> tuple[Cell, Cell]:
    """A pair of cells forming an almost twin pair in the diagram's poset.

    Disconnected diagrams are handled through a non-chain component (or the
    bottoms of two chain components).  Connected diagrams are normalized
    (empty rows and empty left columns dropped) and then dispatched: straight
    shapes use ``(1,2),(2,1)`` or, shifted, ``(1,3),(2,2)``; skew shapes try
    the cases (i)-(v) in order, scanning rows top to bottom within each case.
    Raises :class:`ShapeError` for chains.
    """
    return almost_twin_case(shape)[1]


def shape_poset_is_chain(shape: Shape) -> bool:
    return is_chain(shape_to_poset(shape))


def partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


def strict_partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in strict_partitions(n - first, first - 1))
    return out


def _skew_by_rows(max_cells: int) -> list[Shape]:
    # rows as (start, end) with starts and ends weakly decreasing going down,
    # last row starting in column 1 and no empty column
    out = []

    def grow(rows: list[tuple[int, int]], used: int) -> None:
        if rows and rows[-1][0] == 1:
            ends = [b for _, b in rows]
            covered = set()
            for a, b in rows:
                covered.update(range(a, b + 1))
            if covered == set(range(1, ends[0] + 1)):
                out.append(Shape(tuple(ends), tuple(a - 1 for a, _ in rows)))
        prev_a, prev_b = rows[-1] if rows else (max_cells, max_cells)
        for a in range(1, prev_a + 1):
            for b in range(a, prev_b + 1):
                if used + b - a + 1 <= max_cells:
                    grow(rows + [(a, b)], used + b - a + 1)

    grow([], 0)
    return out


def small_shapes(max_cells: int) -> list[Shape]:
    """Every straight, shifted, skew and shifted skew diagram with at most
    ``max_cells`` cells, without empty rows and (for left-justified skew
    shapes) without empty columns.  Chains are included."""
    shapes: set[Shape] = set()
    for size in range(1, max_cells + 1):
        shapes.update(Shape(p) for p in partitions(size))
        shapes.update(Shape(p, (), True) for p in strict_partitions(size))
    shapes.update(s for s in _skew_by_rows(max_cells) if s.inner)
    for top in range(2, max_cells + 2):
        for lam_size in range(top, top * (top + 1) // 2 + 1):
            for lam in strict_partitions(lam_size, top):
                if not lam or lam[0] != top:
                    continue
                for mu_size in range(max(1, lam_size - max_cells), lam_size):
                    for mu in strict_partitions(mu_size, top - 1):
                        if len(mu) <= len(lam) and all(m < p for m, p in zip(mu, lam)):
                            shapes.add(Shape(lam, mu, True))
    return sorted(shapes, key=lambda s: (s.size(), s.shifted, s.outer, s.inner))
