"""Exact rational linear algebra helpers (small dense systems only)."""

from __future__ import annotations

from fractions import Fraction


def integer_rank(rows):
    """Rank over Q of a list of integer rows (fraction-free elimination)."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    prev_pivot = 1
    while rows and col < ncols:
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            q = rows[i][col]
            if q:
                r = rows[i]
                top = rows[rank]
                for j in range(col, ncols):
                    r[j] = (r[j] * p - q * top[j]) // prev_pivot
            else:
                r = rows[i]
                if prev_pivot != 1:
                    for j in range(col, ncols):
                        r[j] = r[j] * p // prev_pivot
        prev_pivot = p
        rank += 1
        col += 1
        if rank == len(rows):
            break
    return rank


def solve_linear(matrix, rhs):
    """Solve matrix * x = rhs exactly over Q; returns None if unsolvable.

    `matrix` is a list of rows (Fractions or ints), square or rectangular.
    """
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    nrows = len(m)
    ncols = len(matrix[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][-1]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return x
