"""Smith normal form over the integers, exact.

Plain Python integers throughout, so there is no overflow to guard
against; entries may grow as large as they like during elimination.
"""

from __future__ import annotations


def smith_normal_form(matrix) -> list[int]:
    """Nonnegative diagonal d_1 | d_2 | ... of the Smith normal form.

    The input is a rows x cols iterable of exact integers; it is not
    modified.  Returned diagonal has length min(rows, cols), padded with
    zeros, and satisfies the divisibility chain.
    """
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    if any(len(row) != cols for row in a):
        raise ValueError("ragged matrix")

    diag: list[int] = []
    top = 0
    while top < rows and top < cols:
        pivot = _find_pivot(a, top)
        if pivot is None:
            break
        _move_pivot(a, top, pivot)
        # Eliminate the pivot row and column; a nonzero remainder anywhere
        # becomes a smaller pivot, so this terminates.
        while True:
            restart = False
            for r in range(top + 1, rows):
                if a[r][top] == 0:
                    continue
                q = a[r][top] // a[top][top]
                _row_sub(a, r, top, q)
                if a[r][top] != 0:
                    _swap_rows(a, r, top)
                    restart = True
            for c in range(top + 1, cols):
                if a[top][c] == 0:
                    continue
                q = a[top][c] // a[top][top]
                _col_sub(a, c, top, q)
                if a[top][c] != 0:
                    _swap_cols(a, c, top)
                    restart = True
            if not restart:
                break
        # The pivot must divide every remaining entry for the chain.
        d = abs(a[top][top])
        offender = _nondivisible(a, top, d)
        if offender is not None:
            r, _ = offender
            _row_add(a, top, r)
            continue
        diag.append(d)
        top += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return diag


def abelian_invariants(matrix, ngens: int) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients) of the abelian group presented
    by the given relation matrix (rows = relators, columns = generators)."""
    if matrix and any(len(row) != ngens for row in matrix):
        raise ValueError("relation matrix width differs from generator count")
    diag = smith_normal_form(matrix) if matrix else []
    nonzero = [d for d in diag if d != 0]
    rank = ngens - len(nonzero)
    torsion = [d for d in nonzero if d != 1]
    return rank, torsion


def _find_pivot(a, top):
    best = None
    for r in range(top, len(a)):
        for c in range(top, len(a[0])):
            if a[r][c] != 0 and (best is None or abs(a[r][c]) < abs(a[best[0]][best[1]])):
                best = (r, c)
    return best


def _move_pivot(a, top, pivot):
    r, c = pivot
    if r != top:
        _swap_rows(a, r, top)
    if c != top:
        _swap_cols(a, c, top)
    if a[top][top] < 0:
        a[top] = [-x for x in a[top]]


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _row_sub(a, r, top, q):
    if q:
        a[r] = [x - q * y for x, y in zip(a[r], a[top])]


def _col_sub(a, c, top, q):
    if q:
        for row in a:
            row[c] -= q * row[top]


def _row_add(a, top, r):
    a[top] = [x + y for x, y in zip(a[top], a[r])]


def _nondivisible(a, top, d):
    for r in range(top + 1, len(a)):
        for c in range(top + 1, len(a[0])):
            if a[r][c] % d:
                return (r, c)
    return None
