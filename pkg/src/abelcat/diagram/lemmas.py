"""Checkers for the exactness criteria and the 3x3 grid lemmas."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from ..core import AbelianCategory, Mor, SequenceSpec
from ..errors import ShapeError
from ..report import Report

TOP_FROM_BOTTOM = "top-from-bottom"
BOTTOM_FROM_TOP = "bottom-from-top"


def verify_exactness_criteria(cat: AbelianCategory, f: Mor, g: Mor) -> Report:
    """Evaluate the three equivalent exactness conditions for ``A -f-> B -g-> C``.

    1. image of f equals kernel of g, as subobjects of B;
    2. cokernel of f equals coimage of g, as quotient objects of B;
    3. ``g o f = 0`` and ``Ker(g) -> B -> Cok(f)`` is zero.

    Each is computed on its own; the report passes when all three agree.
    """
    cat._require_composable(f, g)
    first = cat.sub_equal(cat.image(f), cat.kernel_sub(g))
    second = cat.quot_equal(cat.cokernel_quot(f), cat.coimage(g))
    k = cat.kernel(g)[1]
    c = cat.cokernel(f)[1]
    third = cat.is_zero_mor(cat.compose(g, f)) and cat.is_zero_mor(cat.compose(c, k))
    agree = first == second == third
    return Report("exactness criteria", agree,
                  {"image=kernel": first, "cokernel=coimage": second,
                   "composites vanish": third, "exact": first})


@dataclass(frozen=True)
class GridSpec:
    """A 3x3 grid ``objects[i][j]``.

    ``rows[i][0]: B(i,0) -> B(i,1)`` and ``rows[i][1]: B(i,1) -> B(i,2)``;
    ``cols[0][j]: B(0,j) -> B(1,j)`` and ``cols[1][j]: B(1,j) -> B(2,j)``.
    """

    objects: tuple[tuple[Hashable, ...], ...]
    rows: tuple[tuple[Mor, Mor], ...]
    cols: tuple[tuple[Mor, Mor, Mor], ...]

    def __post_init__(self):
        B = self.objects
        if len(B) != 3 or any(len(r) != 3 for r in B):
            raise ShapeError("grid needs 3x3 objects")
        if len(self.rows) != 3 or any(len(r) != 2 for r in self.rows):
            raise ShapeError("grid needs three rows of two arrows")
        if len(self.cols) != 2 or any(len(c) != 3 for c in self.cols):
            raise ShapeError("grid needs two layers of three column arrows")
        for i in range(3):
            for j in range(2):
                m = self.rows[i][j]
                if m.dom != B[i][j] or m.cod != B[i][j + 1]:
                    raise ShapeError(f"row arrow ({i}, {j}) has the wrong endpoints")
        for i in range(2):
            for j in range(3):
                m = self.cols[i][j]
                if m.dom != B[i][j] or m.cod != B[i + 1][j]:
                    raise ShapeError(f"column arrow ({i}, {j}) has the wrong endpoints")

    def row_seq(self, i: int, left: bool = True, right: bool = True) -> SequenceSpec:
        return SequenceSpec(self.rows[i], left, right)

    def col_seq(self, j: int, top: bool = True, bottom: bool = True) -> SequenceSpec:
        return SequenceSpec((self.cols[0][j], self.cols[1][j]), top, bottom)

    def square(self, i: int, j: int) -> tuple[Mor, Mor, Mor, Mor]:
        """Arrows of the square with top-left corner ``(i, j)``: right, down, down, right."""
        return self.rows[i][j], self.cols[i][j + 1], self.cols[i][j], self.rows[i + 1][j]


def grid_commutes(cat: AbelianCategory, grid: GridSpec,
                  squares=((0, 0), (0, 1), (1, 0), (1, 1))) -> dict[str, bool]:
    out = {}
    for i, j in squares:
        right, down_r, down_l, lower = grid.square(i, j)
        out[f"square {i}{j}"] = cat.mor_equal(cat.compose(down_r, right),
                                              cat.compose(lower, down_l))
    return out


def _status(hyp: bool, premise: bool, conclusion: bool) -> str:
    if not hyp:
        return "hypothesis-failure"
    if not premise:
        return "premise-false"
    return "pass" if conclusion else "counterexample"


def verify_nine_lemma(cat: AbelianCategory, grid: GridSpec, direction: str) -> Report:
    """Check the nine lemma on ``grid`` in one direction.

    Hypotheses (commuting squares, short exact columns, short exact middle
    row) are checked and reported.  Both outer rows are evaluated so the
    report also records whether they agree.
    """
    if direction not in (TOP_FROM_BOTTOM, BOTTOM_FROM_TOP):
        raise ValueError(f"unknown direction {direction!r}")
    hyp = dict(grid_commutes(cat, grid))
    for j in range(3):
        hyp[f"column {j} exact"] = cat.is_exact_seq(grid.col_seq(j))
    hyp["middle row exact"] = cat.is_exact_seq(grid.row_seq(1))
    top = cat.is_exact_seq(grid.row_seq(0))
    bottom = cat.is_exact_seq(grid.row_seq(2))
    premise, conclusion = (bottom, top) if direction == TOP_FROM_BOTTOM else (top, bottom)
    hyp_ok = all(hyp.values())
    status = _status(hyp_ok, premise, conclusion)
    return Report(f"nine lemma ({direction})", status in ("pass", "premise-false"),
                  {"status": status, "hypotheses": hyp, "top_exact": top,
                   "bottom_exact": bottom, "rows_agree": top == bottom})


def verify_left_exact_grid(cat: AbelianCategory, grid: GridSpec, direction: str) -> Report:
    """The left-exact variant: the corner ``B(2,2)`` and its arrows are ignored.

    Hypotheses are the three squares away from that corner, short exact
    first and second columns, a monic third column arrow and a left exact
    middle row.  The conclusion compares left exactness of the top row with
    monicity of the truncated bottom row.
    """
    if direction not in (TOP_FROM_BOTTOM, BOTTOM_FROM_TOP):
        raise ValueError(f"unknown direction {direction!r}")
    hyp = dict(grid_commutes(cat, grid, squares=((0, 0), (0, 1), (1, 0))))
    for j in range(2):
        hyp[f"column {j} exact"] = cat.is_exact_seq(grid.col_seq(j))
    hyp["column 2 monic"] = cat.is_monic(grid.cols[0][2])
    hyp["middle row left exact"] = cat.is_exact_seq(grid.row_seq(1, right=False))
    top = cat.is_exact_seq(grid.row_seq(0, right=False))
    bottom = cat.is_monic(grid.rows[2][0])
    premise, conclusion = (bottom, top) if direction == TOP_FROM_BOTTOM else (top, bottom)
    status = _status(all(hyp.values()), premise, conclusion)
    return Report(f"left exact grid ({direction})", status in ("pass", "premise-false"),
                  {"status": status, "hypotheses": hyp, "top_left_exact": top,
                   "bottom_monic": bottom, "rows_agree": top == bottom})


def grid_sum(cat: AbelianCategory, g1: GridSpec, g2: GridSpec) -> GridSpec:
    """Componentwise biproduct of two grids."""
    B = [[cat.biproduct(g1.objects[i][j], g2.objects[i][j]).obj for j in range(3)]
         for i in range(3)]

    def diag(f: Mor, g: Mor) -> Mor:
        return cat.from_blocks([[f, cat.zero_mor(g.dom, f.cod)],
                                [cat.zero_mor(f.dom, g.cod), g]])

    rows = tuple(tuple(diag(g1.rows[i][j], g2.rows[i][j]) for j in range(2)) for i in range(3))
    cols = tuple(tuple(diag(g1.cols[i][j], g2.cols[i][j]) for j in range(3)) for i in range(2))
    return GridSpec(tuple(tuple(r) for r in B), rows, cols)


def replace_arrow(grid: GridSpec, kind: str, i: int, j: int, mor: Mor) -> GridSpec:
    """A copy of ``grid`` with one row (``kind="row"``) or column arrow replaced."""
    rows = [list(r) for r in grid.rows]
    cols = [list(c) for c in grid.cols]
    (rows if kind == "row" else cols)[i][j] = mor
    return GridSpec(grid.objects, tuple(tuple(r) for r in rows), tuple(tuple(c) for c in cols))
