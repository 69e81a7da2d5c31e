"""Dense two-phase simplex over `Fraction` with Bland's rule.

Solves ``max c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0`` exactly.
Sizes here are tiny (tens of rows and columns), so a plain tableau is fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["LPResult", "LPUnbounded", "LPInfeasible", "linprog_max"]


class LPUnbounded(ArithmeticError):
    pass


class LPInfeasible(ArithmeticError):
    pass


@dataclass(frozen=True)
class LPResult:
    x: tuple[Fraction, ...]
    value: Fraction
    pivots: int


def _pivot(tab, basis, r, c):
    piv = tab[r][c]
    row = [v / piv for v in tab[r]]
    tab[r] = row
    for i, other in enumerate(tab):
        if i != r and other[c] != 0:
            f = other[c]
            tab[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(tab, basis, allowed, limit):
    """Maximize the objective held in the last row (stored as reduced costs, negated)."""
    pivots = 0
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        # Bland: smallest index with negative reduced cost enters
        enter = next((j for j in allowed if obj[j] < 0), None)
        if enter is None:
            return pivots
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise LPUnbounded(f"column {enter} is unbounded")
        _pivot(tab, basis, best[1], enter)
        pivots += 1
        if pivots > limit:
            raise RuntimeError("simplex pivot limit exceeded")


def linprog_max(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    max_pivots: int = 100_000,
) -> LPResult:
    nv = len(c)
    rows = []  # (coeffs, rhs, kind) with kind in {"le", "eq"}
    for a, b in zip(A_ub, b_ub):
        rows.append(([Fraction(v) for v in a], Fraction(b), "le"))
    for a, b in zip(A_eq, b_eq):
        rows.append(([Fraction(v) for v in a], Fraction(b), "eq"))
    for a, _, _ in rows:
        if len(a) != nv:
            raise ValueError("constraint width does not match objective")
    m = len(rows)
    n_slack = sum(1 for _, _, k in rows if k == "le")
    # column layout: originals | slacks | artificials | rhs
    art_rows = []
    for i, (a, b, kind) in enumerate(rows):
        if kind == "eq" or b < 0:
            art_rows.append(i)
    n_art = len(art_rows)
    width = nv + n_slack + n_art + 1
    tab = []
    basis = [0] * m
    s = 0
    art_of = {}
    for i, (a, b, kind) in enumerate(rows):
        row = a + [Fraction(0)] * (n_slack + n_art) + [b]
        if kind == "le":
            row[nv + s] = Fraction(1)
            slack_col = nv + s
            s += 1
        else:
            slack_col = None
        if b < 0:
            row = [-v for v in row]
        if i in art_rows:
            col = nv + n_slack + len(art_of)
            art_of[i] = col
            row[col] = Fraction(1)
            basis[i] = col
        else:
            basis[i] = slack_col
        tab.append(row)

    pivots = 0
    if n_art:
        # phase one: maximize -sum(artificials)
        obj = [Fraction(0)] * width
        for i in art_rows:
            obj[art_of[i]] = Fraction(1)
        for i in art_rows:
            obj = [o - v for o, v in zip(obj, tab[i])]
        tab.append(obj)
        pivots += _run(tab, basis, range(width - 1), max_pivots)
        if tab[-1][-1] != 0:
            raise LPInfeasible("phase one ended with positive infeasibility")
        tab.pop()
        art_cols = set(art_of.values())
        # drive remaining artificials out of the basis
        for i in range(m):
            if basis[i] in art_cols:
                j = next((j for j in range(nv + n_slack) if tab[i][j] != 0), None)
                if j is not None:
                    _pivot(tab, basis, i, j)
                    pivots += 1
        keep = [i for i in range(m) if basis[i] not in art_cols]
        tab = [tab[i] for i in keep]
        basis = [basis[i] for i in keep]
        cut = nv + n_slack
        tab = [row[:cut] + [row[-1]] for row in tab]
        width = cut + 1

    obj = [-Fraction(v) for v in c] + [Fraction(0)] * (width - 1 - nv) + [Fraction(0)]
    for i, bcol in enumerate(basis):
        if obj[bcol] != 0:
            f = obj[bcol]
            obj = [o - f * v for o, v in zip(obj, tab[i])]
    tab.append(obj)
    pivots += _run(tab, basis, range(width - 1), max_pivots)
    x = [Fraction(0)] * nv
    for i, bcol in enumerate(basis):
        if bcol < nv:
            x[bcol] = tab[i][-1]
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult(tuple(x), value, pivots)
