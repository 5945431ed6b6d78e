"""Exact rational linear algebra on lists of lists.

Matrices are plain ``list[list[Fraction]]`` (row-major).  Everything here is
exact; determinants and ranks go through fraction-free (Bareiss) elimination
on integer rows obtained by clearing denominators row by row.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import SingularSystem

Matrix = list[list[Fraction]]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a decimal string")
    return Fraction(x)


def as_matrix(rows) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def submatrix(a: Sequence[Sequence[Fraction]], rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def is_symmetric(a: Sequence[Sequence[Fraction]]) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def integer_rows(a: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row.

    Returns ``(rows, scales)`` with ``rows[i] == scales[i] * a[i]`` and every
    scale a positive integer.
    """
    out, scales = [], []
    for row in a:
        s = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * s) for x in row])
        scales.append(s)
    return out, scales


def _bareiss(m: list[list[int]], ncols: int) -> tuple[int, int]:
    """In-place Bareiss elimination with column pivot search.

    Returns ``(rank, sign)`` where ``sign`` tracks row swaps.  When the matrix
    is square and nonsingular, ``m[-1][-1] * sign`` is its determinant.
    """
    nrows = len(m)
    rank, sign, prev = 0, 1, 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            row, top = m[r], m[rank]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank, sign


def int_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    work = [row[:] for row in m]
    rank, sign = _bareiss(work, n)
    if rank < n:
        return 0
    return sign * work[n - 1][n - 1]


def det(a: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    rows, scales = integer_rows(a)
    d = int_det(rows)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(d, denom)


def rank(a: Sequence[Sequence[Fraction]]) -> int:
    if not a or not a[0]:
        return 0
    rows, _ = integer_rows(a)
    r, _ = _bareiss(rows, len(rows[0]))
    return r


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    """Solve ``a @ x = b`` for square nonsingular ``a`` (Gauss-Jordan over Q)."""
    n = len(a)
    k = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularSystem(f"singular matrix (no pivot in column {col})")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        top = [x / p for x in aug[col]]
        aug[col] = top
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], top)]
    return [row[n:n + k] for row in aug]


def inverse(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return solve(a, identity(len(a)))
