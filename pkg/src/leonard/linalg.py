"""Dense exact matrices as lists of rows. Entries come from one field."""
from __future__ import annotations

from typing import Sequence

Matrix = list


def zeros(n: int, zero) -> Matrix:
    return [[zero] * n for _ in range(n)]


def identity(n: int, zero, one) -> Matrix:
    m = zeros(n, zero)
    for i in range(n):
        m[i][i] = one
    return m


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def shift(a: Matrix, c) -> Matrix:
    """a + c*I."""
    out = [list(row) for row in a]
    for i in range(len(a)):
        out[i][i] = out[i][i] + c
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    zero = b[0][0] * 0
    out = []
    for i in range(n):
        row = [zero] * m
        for k, aik in enumerate(a[i]):
            if not aik:
                continue
            bk = b[k]
            for j in range(m):
                if bk[j]:
                    row[j] = row[j] + aik * bk[j]
        out.append(row)
    return out


def trace(a: Matrix):
    t = a[0][0]
    for i in range(1, len(a)):
        t = t + a[i][i]
    return t


def trace_of_product(a: Matrix, b: Matrix):
    """tr(ab) without forming the product."""
    n = len(a)
    t = a[0][0] * 0
    for i in range(n):
        ai = a[i]
        for k in range(n):
            if ai[k]:
                bki = b[k][i]
                if bki:
                    t = t + ai[k] * bki
    return t


def is_zero(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def equal(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def solve_linear(rows: Sequence[Sequence], rhs: Sequence):
    """Unique solution of a square system by Gauss-Jordan elimination, or None if singular."""
    n = len(rows)
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]
