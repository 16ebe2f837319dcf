"""
Exact rank of rational matrices given as row lists
"""
from fractions import Fraction
from math import lcm
from typing import List, Sequence

Rows = Sequence[Sequence]


def _integer_rows(rows: Rows) -> List[List[int]]:
    """Clear denominators row by row; rank is unchanged"""
    result = []
    for row in rows:
        values = [Fraction(v) for v in row]
        scale = lcm(*(v.denominator for v in values)) if values else 1
        result.append([int(v * scale) for v in values])
    return result


def bareiss_rank(rows: Rows) -> int:
    """Fraction-free (Bareiss) elimination with row pivoting.

    After k pivots every live entry is a (k+1)-minor of the input, so the
    division by the previous pivot is exact.
    """
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            lead = m[r][col]
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * p - lead * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
    return rank


def gaussian_rank(rows: Rows) -> int:
    """Textbook elimination over Q, kept as a cross-check for bareiss_rank"""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col] / m[rank][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
