"""Named reproduction targets.  Each one rebuilds an example, recomputes its
values and compares them with the table in :mod:`posetbalance.figures`."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import figures
from .extensions import (ONE_HALF, ONE_THIRD, balance_constant, count_extensions, enumerate_extensions,
                         format_ratio, is_alpha_balanced, pair_matrix, prob_before)
from .poset import (Poset, add_relation, boolean_lattice, chain_product, down_sets, ideal_lattice,
                    partition_lattice, principal_ideal, subspace_lattice, width)
from .search import canonical_form
from .structure import anti_automorphisms, automorphisms, is_almost_twin, two_cycle_automorphism_pairs
from .tableaux import (Shape, cell_element, find_almost_twin_in_shape, hook_lengths, lemma_ratio,
                       rectangle_balance_pair, shape_poset_is_chain, shape_to_poset, small_shapes, syt_count)


def _show(value) -> str:
    if isinstance(value, Fraction):
        return format_ratio(value)
    return str(value)


@dataclass
class Check:
    name: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> dict:
        return {"check": self.name, "expected": _show(self.expected),
                "computed": _show(self.computed), "ok": self.ok}


@dataclass
class ReproTarget:
    name: str
    description: str
    build: Callable[[], list[Check]]

    def run(self) -> list[Check]:
        return self.build()


def _fig1() -> list[Check]:
    fig = figures.FIGURES["fig1"]
    P = figures.figure_poset("fig1")
    stats = pair_matrix(P)
    report = balance_constant(P)
    words = {"".join(map(str, w)) for w in enumerate_extensions(P)}
    return [
        Check("e(P)", fig["e"], stats.total),
        Check("pair matrix", fig["matrix"], [list(r) for r in stats.pair_counts]),
        Check("delta", fig["delta"], report.delta),
        Check("witness", fig["witness"], report.witness),
        Check("extensions", sorted(fig["extensions"]), sorted(words)),
    ]


def _fig2() -> list[Check]:
    fig = figures.FIGURES["T"]
    P = figures.figure_poset("T")
    x, y = fig["pair"]
    just_above = ONE_THIRD + Fraction(1, 10**6)
    return [
        Check("delta(T)", fig["delta"], balance_constant(P).delta),
        Check("P(b before c)", ONE_THIRD, prob_before(P, x, y)),
        Check("(b,c) 1/3-balanced", True, is_alpha_balanced(P, x, y, ONE_THIRD)),
        # P(b<c) is exactly 1/3, so any alpha above 1/3 fails
        Check("(b,c) not balanced above 1/3", False, is_alpha_balanced(P, x, y, just_above)),
    ]


def _fig4() -> list[Check]:
    P = figures.figure_poset("fig4-P")
    Q = figures.figure_poset("fig4-Q")
    figQ = figures.FIGURES["fig4-Q"]
    return [
        Check("P has a 2-cycle automorphism", True, bool(two_cycle_automorphism_pairs(P))),
        Check("delta(P)", figures.FIGURES["fig4-P"]["delta"], balance_constant(P).delta),
        Check("Q automorphism group order", 1, len(automorphisms(Q))),
        Check("e(Q)", figQ["e"], count_extensions(Q)),
        Check("e(Q+34)", figQ["e_plus_34"], count_extensions(add_relation(Q, 3, 4))),
        Check("delta(Q)", figQ["delta"], balance_constant(Q).delta),
    ]


def _fig5() -> list[Check]:
    fig = figures.FIGURES["fig5"]
    P = figures.figure_poset("fig5")
    antis = anti_automorphisms(P)
    return [
        Check("delta", fig["delta"], balance_constant(P).delta),
        Check("reference anti-automorphism present", True, fig["sigma"] in {s.images for s in antis}),
        Check("fixed points per anti-automorphism", [1] * len(antis), [len(s.fixed_points) for s in antis]),
    ]


def _fig6() -> list[Check]:
    fig = figures.FIGURES["fig6-P"]
    J = ideal_lattice(figures.figure_poset("fig6-P"))
    stats = pair_matrix(J)
    chart = {}
    for (a, b) in fig["chart"]:
        chart[(a, b)] = stats.pair_counts[J.index_of(a) - 1][J.index_of(b) - 1]
    report = balance_constant(J)
    return [
        Check("e(J(P))", fig["e_J"], stats.total),
        Check("chart", fig["chart"], chart),
        Check("has a 1/2-balanced pair", False, report.delta == ONE_HALF),
    ]


def _fig7() -> list[Check]:
    return [
        Check("hooks of (4,4,2)", figures.HOOKS_442, hook_lengths((4, 4, 2))),
        Check("f^(4,4,2)", figures.SYT_442, syt_count((4, 4, 2))),
        Check("f^(4,4,2) by extensions", figures.SYT_442, count_extensions(shape_to_poset(Shape((4, 4, 2))))),
    ]


def _delta_checks(names: list[str]) -> list[Check]:
    out = []
    for name in names:
        fig = figures.FIGURES[name]
        P = figures.figure_poset(name)
        out.append(Check(f"delta({name})", fig["delta"], balance_constant(P).delta))
        if "width" in fig:
            out.append(Check(f"width({name})", fig["width"], width(P)))
    return out


def _fig8() -> list[Check]:
    return _delta_checks(["fig8-left", "fig8-right"])


def _fig11() -> list[Check]:
    return _delta_checks(["fig11-A", "fig11-B", "fig11-C"])


def _lemma37() -> list[Check]:
    identity = {}
    for m in range(1, 5):
        for n in range(3, 7):
            lam = (n,) * (m - 1) + (n - 2,)
            identity[(m, n)] = Fraction(syt_count(lam), syt_count((n,) * m))
    computed = {k: lemma_ratio(*k) for k in identity}
    bounds = [(m, n) for m in range(3, 7) for n in range(4, 9)
              if not ONE_THIRD <= lemma_ratio(m, n) <= 1 - ONE_THIRD]
    return [
        Check("closed form = SYT quotient", identity, computed),
        Check("lemma_ratio(3,4)", Fraction(6, 11), lemma_ratio(3, 4)),
        Check("(m,n) outside [1/3,2/3]", [], bounds),
    ]


def _thm38() -> list[Check]:
    out = []
    for m in range(3, 5):
        for n in range(4, 6):
            (a, b), ratio = rectangle_balance_pair(m, n)
            P = chain_product(m, n)
            p = prob_before(P, P.index_of(f"({a[0]},{a[1]})"), P.index_of(f"({b[0]},{b[1]})"))
            out.append(Check(f"P(a<b) on C_{m} x C_{n}", lemma_ratio(m, n), p))
            out.append(Check(f"rectangle_balance_pair({m},{n})", p, ratio))
            out.append(Check(f"C_{m} x C_{n} pair within [1/3,2/3]", True, ONE_THIRD <= p <= 1 - ONE_THIRD))
    return out


def shape_sweep(max_cells: int = 9) -> dict:
    """Run the almost-twin finder over every non-chain shape with at most
    ``max_cells`` cells and compute delta once per isomorphism class."""
    failures = []
    deltas = {}
    count = 0
    for shape in small_shapes(max_cells):
        if shape_poset_is_chain(shape):
            continue
        count += 1
        P = shape_to_poset(shape)
        try:
            a, b = find_almost_twin_in_shape(shape)
            if not is_almost_twin(P, cell_element(shape, a), cell_element(shape, b)):
                failures.append((str(shape), "not almost twin"))
        except ValueError as exc:
            failures.append((str(shape), str(exc)))
        key = canonical_form(P)
        if key not in deltas:
            deltas[key] = balance_constant(P).delta
    low = sorted(k.key for k, d in deltas.items() if d < ONE_THIRD)
    return {"shapes": count, "classes": len(deltas), "failures": failures,
            "min_delta": min(deltas.values()), "below_one_third": low}


def _thm41() -> list[Check]:
    out = []
    for ex in figures.SHAPE_EXAMPLES:
        shape = Shape(ex["outer"], ex["inner"], ex["shifted"])
        out.append(Check(f"pair in {shape}", ex["pair"], find_almost_twin_in_shape(shape)))
    sweep = shape_sweep(9)
    out.append(Check("finder failures (<= 9 cells)", [], sweep["failures"]))
    out.append(Check("delta below 1/3 (<= 9 cells)", [], sweep["below_one_third"]))
    return out


def _lattices() -> list[Check]:
    out = []
    for n in (2, 3, 4):
        B = boolean_lattice(n)
        a, b = figures.LATTICE_PAIRS["boolean"]
        out.append(Check(f"B_{n} pair", ONE_HALF, prob_before(B, B.index_of(a), B.index_of(b))))
    for n in (3, 4):
        L = partition_lattice(n)
        a, b = figures.LATTICE_PAIRS["partition"](n)
        out.append(Check(f"Pi_{n} pair", ONE_HALF, prob_before(L, L.index_of(a), L.index_of(b))))
    for n, q in ((2, 2), (2, 3), (3, 2)):
        L = subspace_lattice(n, q)
        a, b = figures.LATTICE_PAIRS["subspace"](n)
        out.append(Check(f"L_{n}({q}) pair", ONE_HALF, prob_before(L, L.index_of(a), L.index_of(b))))
    return out


def ideal_pair(P: Poset, x: int, y: int) -> tuple[Poset, int, int]:
    """J(P) with the 1-based elements of the principal ideals of ``x`` and ``y``."""
    J = ideal_lattice(P)
    order = down_sets(P)
    return J, order.index(principal_ideal(P, x)) + 1, order.index(principal_ideal(P, y)) + 1


def _ideal_lift() -> list[Check]:
    from .search import enumerate_posets
    bad = []
    tried = 0
    for n in range(2, 6):
        for cp in enumerate_posets(n):
            P = cp.to_poset()
            for x, y in two_cycle_automorphism_pairs(P):
                J, ix, iy = ideal_pair(P, x, y)
                tried += 1
                if prob_before(J, ix, iy) != ONE_HALF:
                    bad.append((cp.key, x, y))
    return [Check("pairs checked > 0", True, tried > 0),
            Check("ideal pairs not 1/2-balanced", [], bad)]


TARGETS: dict[str, ReproTarget] = {t.name: t for t in [
    ReproTarget("fig1", "six-element example: e, pair matrix, delta, extensions", _fig1),
    ReproTarget("fig2-T", "T = (a<b) + c attains 1/3", _fig2),
    ReproTarget("fig4", "automorphism with a 2-cycle vs trivial group", _fig4),
    ReproTarget("fig5", "anti-automorphisms with one fixed point", _fig5),
    ReproTarget("fig6-jp", "ideal lattice of 2<3<4 plus 1", _fig6),
    ReproTarget("fig7", "hook lengths of (4,4,2)", _fig7),
    ReproTarget("fig8", "small deltas 16/45 and 14/39", _fig8),
    ReproTarget("fig11", "small deltas of A, B, C", _fig11),
    ReproTarget("lemma37", "SYT ratio identity and its bounds", _lemma37),
    ReproTarget("thm38", "rectangle pair probabilities", _thm38),
    ReproTarget("thm41", "almost twin finder over small shapes", _thm41),
    ReproTarget("lattices", "boolean, partition and subspace lattice pairs", _lattices),
    ReproTarget("ideal-lift", "2-cycle pairs lifted to ideal lattices", _ideal_lift),
]}


def run_target(name: str) -> dict[str, list[Check]]:
    """``name`` may be ``all``; results are keyed by target name in table order."""
    if name == "all":
        return {t: TARGETS[t].run() for t in TARGETS}
    if name not in TARGETS:
        raise KeyError(f"unknown target {name!r}; choose from {', '.join(TARGETS)} or all")
    return {name: TARGETS[name].run()}
