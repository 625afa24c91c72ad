"""Fraction-free Gaussian elimination over the integers."""

from __future__ import annotations

from typing import List, Sequence


def rank(matrix: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by Bareiss elimination.

    Every intermediate entry is a minor of the input, so divisions are exact
    and no fractions appear.
    """
    rows: List[List[int]] = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        pr = rows[r]
        for k in range(r + 1, len(rows)):
            row = rows[k]
            f = row[c]
            if f == 0:
                if prev != 1 or p != 1:
                    for j in range(c + 1, ncols):
                        row[j] = row[j] * p // prev
                row[c] = 0
                continue
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - f * pr[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def nullity(matrix: Sequence[Sequence[int]]) -> int:
    return len(matrix[0]) - rank(matrix) if matrix else 0
