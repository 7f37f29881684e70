"""Built-in example posets and their reference values, kept in one table.

The small-delta examples (the 8- and 7-element posets and A, B, C) come
without vertex labels, so their cover lists are transcriptions.  If one
stops reproducing its constant, fix the cover list here rather than
touching any computation.
"""
from __future__ import annotations

from fractions import Fraction

from .poset import Poset, from_covers

FIGURES: dict[str, dict] = {
    "fig1": {
        "n": 6,
        "covers": [(1, 4), (4, 5), (2, 5), (2, 3), (1, 3), (3, 6)],
        "e": 15,
        "delta": Fraction(7, 15),
        "witness": (5, 6),
        "matrix": [
            [0, 9, 15, 15, 15, 15],
            [6, 0, 15, 12, 15, 15],
            [0, 0, 0, 6, 12, 15],
            [0, 3, 9, 0, 15, 13],
            [0, 0, 3, 0, 0, 8],
            [0, 0, 0, 2, 7, 0],
        ],
        "extensions": """123456 123465 123645 124356 124365 124536 142356 142365
                         142536 213456 213465 213645 214356 214365 214536""".split(),
    },
    # a < b with c isolated
    "T": {"n": 3, "covers": [(1, 2)], "delta": Fraction(1, 3), "pair": (2, 3)},
    "fig4-P": {"n": 5, "covers": [(1, 3), (2, 3), (3, 4), (3, 5)], "delta": Fraction(1, 2)},
    "fig4-Q": {
        "n": 6,
        "covers": [(1, 3), (2, 3), (2, 4), (3, 5), (3, 6), (4, 6)],
        "e": 12,
        "e_plus_34": 6,
        "delta": Fraction(1, 2),
    },
    "fig5": {
        "n": 9,
        "covers": [(3, 6), (6, 9), (3, 8), (5, 8), (2, 5), (2, 7), (4, 7), (1, 4), (1, 9)],
        "delta": Fraction(711, 1431),
        "sigma": (7, 9, 8, 4, 6, 5, 1, 3, 2),
    },
    # 2 < 3 < 4 with 1 isolated; J of it is the 8-element lattice
    "fig6-P": {
        "n": 4,
        "covers": [(2, 3), (3, 4)],
        "e_J": 14,
        "chart": {
            ("{1}", "{2}"): 5,
            ("{1}", "{2,3}"): 10,
            ("{1}", "{2,3,4}"): 13,
            ("{1,2}", "{2,3}"): 4,
            ("{1,2}", "{2,3,4}"): 10,
            ("{1,2,3}", "{2,3,4}"): 5,
        },
    },
    "fig8-left": {
        "n": 8,
        "covers": [(1, 3), (3, 5), (5, 7), (6, 7), (4, 6), (2, 4), (2, 3), (1, 8), (6, 8)],
        "delta": Fraction(16, 45),
        "width": 2,
    },
    "fig8-right": {
        "n": 7,
        "covers": [(1, 2), (1, 5), (2, 4), (2, 7), (3, 4), (3, 7), (4, 6), (5, 6)],
        "delta": Fraction(14, 39),
        "width": 3,
    },
    "fig9": {"perm": (4, 1, 3, 2, 5), "covers": [(1, 2), (1, 3), (2, 5), (3, 5), (4, 5)],
             "inversion_pairs": [(3, 2)]},
    "fig11-A": {
        "n": 9,
        "covers": [(1, 2), (2, 7), (7, 8), (8, 9), (1, 4), (3, 4), (4, 5), (5, 6), (5, 9)],
        "delta": Fraction(6, 17),
    },
    "fig11-B": {
        "n": 11,
        "covers": [(1, 2), (1, 5), (3, 5), (5, 6), (5, 7), (2, 6), (2, 4), (4, 7), (4, 8), (6, 8),
                   (6, 9), (7, 9), (8, 10), (8, 11), (9, 11)],
        "delta": Fraction(60, 171),
    },
    "fig11-C": {
        "n": 10,
        "covers": [(1, 3), (2, 3), (2, 4), (3, 5), (4, 5), (4, 6), (3, 8), (6, 8), (6, 7), (5, 7),
                   (7, 9), (8, 9), (8, 10)],
        "delta": Fraction(37, 106),
    },
}

HOOKS_442 = [[6, 5, 3, 2], [5, 4, 2, 1], [2, 1]]
SYT_442 = 252

# skew and shifted skew examples with their reference almost twin cells
SHAPE_EXAMPLES = [
    {"outer": (9, 7, 7, 5, 5, 5, 5), "inner": (6, 5, 3, 3, 3, 2), "shifted": False, "pair": ((1, 7), (2, 6))},
    {"outer": (5, 5, 5, 4, 4, 4, 3), "inner": (4, 4, 3, 3, 2, 2), "shifted": False, "pair": ((1, 5), (3, 4))},
    {"outer": (8, 6, 5, 3, 2), "inner": (6, 3), "shifted": True, "pair": ((2, 5), (3, 3))},
    {"outer": (4, 4, 4), "inner": (), "shifted": False, "pair": ((1, 2), (2, 1))},
]

# the pairs exchanged by the lattice automorphisms, by label
LATTICE_PAIRS = {
    "boolean": ("{1}", "{2}"),
    "partition": lambda n: ("/".join(["13", "2"] + [str(i) for i in range(4, n + 1)]),
                            "/".join(["1", "23"] + [str(i) for i in range(4, n + 1)])),
    "subspace": lambda n: ("<" + "1" + "0" * (n - 1) + ">", "<" + "01" + "0" * (n - 2) + ">"),
}

WIDTH3_MIN_DELTA = Fraction(14, 39)
POSET_CLASS_COUNTS = [1, 2, 5, 16, 63]


def figure_poset(name: str) -> Poset:
    entry = FIGURES[name]
    if "perm" in entry:
        from .poset import from_permutation
        return from_permutation(entry["perm"])
    return from_covers(entry["n"], entry["covers"])


def figure_names() -> list[str]:
    return sorted(FIGURES)
