"""The four counting tables, built cell by cell from their last-step recurrences.

Row index ``p`` (or ``k``) counts down steps, column index ``q`` (or ``r``)
counts right steps.
"""
from __future__ import annotations

from .core import CountMatrix, CountTriangle, DomainError


def _check_dims(*dims: int) -> None:
    if any(d < 1 for d in dims):
        raise DomainError(f"table dimensions must be >= 1, got {dims}")


def rect_table(rows: int, cols: int) -> CountMatrix:
    """Rectangular path counts b(k, r) = b(k, r-1) + b(k-1, r)."""
    _check_dims(rows, cols)
    t = [[1] * cols for _ in range(rows)]
    for k in range(1, rows):
        for r in range(1, cols):
            t[k][r] = t[k][r - 1] + t[k - 1][r]
    return CountMatrix.from_rows(t)


def delannoy_table(rows: int, cols: int) -> CountMatrix:
    """HVD path counts g(k, r) = g(k, r-1) + g(k-1, r) + g(k-1, r-1)."""
    _check_dims(rows, cols)
    t = [[1] * cols for _ in range(rows)]
    for k in range(1, rows):
        for r in range(1, cols):
            t[k][r] = t[k][r - 1] + t[k - 1][r] + t[k - 1][r - 1]
    return CountMatrix.from_rows(t)


def catalan_triangle(n: int) -> CountTriangle:
    """Subdiagonal rectangular path counts C(p, q), 0 <= q <= p < n."""
    _check_dims(n)
    t: list[list[int]] = [[1]]
    for p in range(1, n):
        row = [1]
        for q in range(1, p):
            row.append(row[q - 1] + t[p - 1][q])
        # (p-1, p) lies above the diagonal, so the only way in is from the left
        row.append(row[p - 1])
        t.append(row)
    return CountTriangle.from_rows(t)


def schroder_triangle(n: int) -> CountTriangle:
    """Subdiagonal HVD path counts R(p, q), 0 <= q <= p < n."""
    _check_dims(n)
    t: list[list[int]] = [[1]]
    for p in range(1, n):
        prev = t[p - 1]
        row = [1]
        for q in range(1, p):
            row.append(prev[q - 1] + prev[q] + row[q - 1])
        row.append(prev[p - 1] + row[p - 1])
        t.append(row)
    return CountTriangle.from_rows(t)
