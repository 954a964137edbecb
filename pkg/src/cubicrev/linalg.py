"""Small dense linear algebra over exact fields (and floats, with a tolerance)."""

from __future__ import annotations

from .scalars import Fraction, is_exact, is_zero


def _lift(matrix):
    return [[Fraction(v) if isinstance(v, int) else v for v in row] for row in matrix]


def _pivot_row(m, col, start, tol):
    if all(is_exact(m[r][col]) for r in range(start, len(m))):
        for r in range(start, len(m)):
            if m[r][col] != 0:
                return r
        return None
    best, best_abs = None, tol
    for r in range(start, len(m)):
        a = abs(m[r][col])
        if a > best_abs:
            best, best_abs = r, a
    return best


def det(matrix, tol: float = 0.0):
    """Determinant by fraction-free (Bareiss) elimination."""
    m = _lift(matrix)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        p = _pivot_row(m, k, k, tol)
        if p is None:
            return 0 * m[0][0]
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def rank(matrix, tol: float = 0.0) -> int:
    m = _lift(matrix)
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = _pivot_row(m, c, r, tol)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, rows):
            if not is_zero(m[i][c], tol):
                f = m[i][c] / m[r][c]
                for j in range(c, cols):
                    m[i][j] = m[i][j] - f * m[r][j]
        r += 1
    return r


def inverse(matrix, tol: float = 0.0):
    """Gauss-Jordan inverse; raises ``ValueError`` for a singular matrix."""
    n = len(matrix)
    m = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(_lift(matrix))]
    for c in range(n):
        p = _pivot_row(m, c, c, tol)
        if p is None:
            raise ValueError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [v / piv for v in m[c]]
        for i in range(n):
            if i != c and not is_zero(m[i][c], tol):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [row[n:] for row in m]


def matvec(matrix, v):
    return tuple(sum((a * b for a, b in zip(row, v)), 0 * v[0]) for row in matrix)


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in cols] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def kernel_vector(matrix, tol: float = 0.0):
    """A nonzero vector v with matrix @ v = 0, or ``None`` if the kernel is trivial."""
    m = _lift(matrix)
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = _pivot_row(m, c, r, tol)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [v / piv for v in m[r]]
        for i in range(rows):
            if i != r and not is_zero(m[i][c], tol):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return None
    fc = free[0]
    v = [0] * cols
    v[fc] = 1
    for i, pc in enumerate(pivots):
        v[pc] = -m[i][fc]
    return v
