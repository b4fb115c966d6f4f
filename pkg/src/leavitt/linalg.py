"""Small dense exact linear algebra over a :class:`~leavitt.fields.Field`.

Matrices are lists of row lists.  Everything is exact Gauss-Jordan
elimination; sizes here stay in the tens, so no sparse tricks.
"""
from __future__ import annotations

from .fields import Field

Matrix = list[list]


def zeros(rows: int, cols: int, field: Field) -> Matrix:
    return [[field.zero] * cols for _ in range(rows)]


def identity(n: int, field: Field) -> Matrix:
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one
    return m


def matmul(a: Matrix, b: Matrix, field: Field) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    if len(a[0]) != inner:
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {inner}x{cols}")
    out = zeros(len(a), cols, field)
    for i, row in enumerate(a):
        target = out[i]
        for k, aik in enumerate(row):
            if aik == 0:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j] != 0:
                    target[j] = target[j] + aik * bk[j]
    return out


def matpow(a: Matrix, k: int, field: Field) -> Matrix:
    result = identity(len(a), field)
    for _ in range(k):
        result = matmul(result, a, field)
    return result


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def rref(a: Matrix, field: Field) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix, field: Field) -> int:
    return len(rref(a, field)[1])


def inverse(a: Matrix, field: Field) -> Matrix:
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(n, field))]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def rank_factorization(a: Matrix, field: Field) -> tuple[Matrix, Matrix]:
    """``a = c @ r`` with c of full column rank and r of full row rank.

    r is the nonzero part of the RREF and c collects the pivot columns of a.
    """
    red, pivots = rref(a, field)
    r = [row for row in red[: len(pivots)]]
    c = [[row[j] for j in pivots] for row in a]
    return c, r


def left_inverse(c: Matrix, field: Field) -> Matrix:
    """``x`` with ``x @ c = I`` for c of full column rank."""
    rows = len(c)
    k = len(c[0]) if c else 0
    # independent rows of c are the pivot columns of c transposed
    _, rows_used = rref(transpose(c), field)
    if len(rows_used) != k:
        raise ValueError("matrix does not have full column rank")
    square = [c[i] for i in rows_used]
    sinv = inverse(square, field)
    out = zeros(k, rows, field)
    for j, i in enumerate(rows_used):
        for t in range(k):
            out[t][i] = sinv[t][j]
    return out


def right_inverse(r: Matrix, field: Field) -> Matrix:
    """``y`` with ``r @ y = I`` for r of full row rank."""
    return transpose(left_inverse(transpose(r), field))


def solve(a: Matrix, b: Matrix, field: Field) -> Matrix | None:
    """Some ``x`` with ``a @ x = b``, or ``None`` if the system is inconsistent."""
    n = len(a)
    cols = len(a[0]) if a else 0
    k = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    red, pivots = rref(aug, field)
    if any(p >= cols for p in pivots):
        return None
    x = zeros(cols, k, field)
    for row, p in enumerate(pivots):
        for j in range(k):
            x[p][j] = red[row][cols + j]
    return x
