"""Row reduction over any exact field (Fraction, CycElem, prime-modulus IntMod)."""

from __future__ import annotations

from typing import Any, Sequence


def rref(rows: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and pivot columns; first nonzero entry pivots."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x != 0 else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row_r = m[r]
                m[i] = [x - f * y if y != 0 else x for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Any]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, zero: Any, one: Any) -> list[list[Any]]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    if not rows:
        return [[one if i == c else zero for i in range(ncols)] for c in range(ncols)]
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for r, pc in enumerate(pivots):
            v[pc] = zero - red[r][free]
        basis.append(v)
    return basis


def in_row_span(rows: Sequence[Sequence[Any]], vec: Sequence[Any]) -> bool:
    return rank(list(rows) + [list(vec)]) == rank(rows)


def solve_in_span(rows: Sequence[Sequence[Any]], vec: Sequence[Any], zero: Any) -> list[Any] | None:
    """Coefficients c with sum c_r rows[r] == vec, or None."""
    # transpose: columns are the given rows, augmented with vec
    n = len(rows)
    if n == 0:
        return [] if all(x == 0 for x in vec) else None
    aug = [[rows[r][c] for r in range(n)] + [vec[c]] for c in range(len(vec))]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    coeffs = [zero] * n
    for r, pc in enumerate(pivots):
        coeffs[pc] = red[r][n]
    return coeffs
