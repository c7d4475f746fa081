"""Small dense linear algebra over exact fields (lists of lists of field elements)."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list]


def zeros_like(x):
    return x * 0


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if not a or len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    cols = len(b[0])
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = None
            for x, brow in zip(row, b):
                y = brow[j]
                if x and y:
                    acc = x * y if acc is None else acc + x * y
            new.append(acc if acc is not None else zeros_like(row[0]))
        out.append(new)
    return out


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def is_identity(a: Sequence[Sequence]) -> bool:
    return all(a[i][j] == (1 if i == j else 0) for i in range(len(a)) for j in range(len(a[i])))


def bareiss_rank(a: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination; every division is exact."""
    m = [list(row) for row in a]
    rows = len(m)
    if not rows:
        return 0
    cols = len(m[0])
    prev = 1
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, rows):
            for c in range(col + 1, cols):
                m[r][c] = (p * m[r][c] - m[r][col] * m[rank][c]) / prev
            m[r][col] = m[r][col] * 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def solve(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    """Solve ``a x = b`` for square nonsingular ``a`` by Gauss-Jordan elimination."""
    n = len(a)
    m = [list(a[i]) + list(b[i]) for i in range(n)]
    width = len(m[0]) if m else 0
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [row[n:width] for row in m]
