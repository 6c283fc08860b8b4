"""Exact integer matrix algebra.

Matrices are plain lists of rows of Python ints. Python integers never
overflow, but every ring modulus is still capped at ``MAX_MODULUS`` so that
intermediate entries stay small enough to reason about.

The central routine is :func:`snf`, a Smith normal form with accumulated
unimodular transforms ``u``, ``v`` (and ``v_inv``) such that
``u @ a @ v == diag(d)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

IntMatrix = list[list[int]]

MAX_MODULUS = 10**6


class DimensionError(ValueError):
    pass


def shape(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> tuple[int, int]:
    rows = len(a)
    if rows == 0:
        return 0, (ncols or 0)
    cols = len(a[0])
    for row in a:
        if len(row) != cols:
            raise DimensionError("ragged matrix")
    if ncols is not None and ncols != cols:
        raise DimensionError(f"expected {ncols} columns, got {cols}")
    return rows, cols


def identity(k: int) -> IntMatrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def copy(a: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(row) for row in a]


def transpose(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    rows, cols = shape(a, ncols)
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: Optional[int] = None,
           ncols: Optional[int] = None) -> IntMatrix:
    """Product ``a @ b``.

    ``inner`` and ``ncols`` disambiguate shapes when either operand has no
    rows (a ``0 x k`` matrix is stored as ``[]``).
    """
    ra, ca = shape(a, inner)
    rb, cb = shape(b, ncols)
    if ra and rb and ca != rb:
        raise DimensionError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    if rb == 0:
        cb = ncols or 0
    out = zeros(ra, cb)
    for i in range(ra):
        row = a[i]
        orow = out[i]
        for k in range(ca):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cb):
                    orow[j] += x * brow[j]
    return out


def vecmat(x: Sequence[int], b: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Row vector times matrix."""
    out = [0] * ncols
    for k, xk in enumerate(x):
        if xk:
            brow = b[k]
            for j in range(ncols):
                out[j] += xk * brow[j]
    return out


def diag(d: Sequence[int], rows: int, cols: int) -> IntMatrix:
    out = zeros(rows, cols)
    for i, x in enumerate(d):
        out[i][i] = x
    return out


def det(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = copy(a)
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[k - 1][k - 1]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, nx = 1, 0
    y, ny = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        a, x, y = -a, -x, -y
    return a, x, y


@dataclass(frozen=True)
class SnfResult:
    """``u @ a @ v == diag(d)`` with ``d[i] | d[i+1]`` and ``d[i] >= 0``.

    ``v_inv`` is the exact inverse of ``v``; it is carried along because
    module code needs to map canonical generators back to presentation
    coordinates.
    """

    d: tuple[int, ...]
    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]
    v_inv: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x)


def snf(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SnfResult:
    """Smith normal form of an integer matrix.

    Pass ``ncols`` when ``a`` may have zero rows.
    """
    rows, cols = shape(a, ncols)
    m = copy(a)
    u = identity(rows)
    v = identity(cols)
    vi = identity(cols)

    def row_combine(i, j, p, q, r, s):
        # rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j), det = +-1
        for mat in (m, u):
            ri, rj = mat[i], mat[j]
            for c in range(len(ri)):
                x, y = ri[c], rj[c]
                ri[c] = p * x + q * y
                rj[c] = r * x + s * y

    def col_combine(i, j, p, q, r, s):
        # cols (i, j) <- (p*col_i + q*col_j, r*col_i + s*col_j)
        for mat in (m, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i] = p * x + q * y
                row[j] = r * x + s * y
        # inverse transform acts on rows of v_inv
        dt = p * s - q * r
        ri, rj = vi[i], vi[j]
        for c in range(cols):
            x, y = ri[c], rj[c]
            ri[c] = dt * (s * x - r * y)
            rj[c] = dt * (-q * x + p * y)

    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_combine(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_combine(t, pj, 0, 1, 1, 0)
        while True:
            done = True
            for i in range(t + 1, rows):
                b = m[i][t]
                if b:
                    a_ = m[t][t]
                    if b % a_ == 0:
                        row_combine(t, i, 1, 0, -(b // a_), 1)
                    else:
                        g, x, y = xgcd(a_, b)
                        row_combine(t, i, x, y, -b // g, a_ // g)
            for j in range(t + 1, cols):
                b = m[t][j]
                if b:
                    a_ = m[t][t]
                    if b % a_ == 0:
                        col_combine(t, j, 1, 0, -(b // a_), 1)
                    else:
                        g, x, y = xgcd(a_, b)
                        col_combine(t, j, x, y, -b // g, a_ // g)
                        done = False
            if not done:
                continue
            if any(m[i][t] for i in range(t + 1, rows)):
                continue
            # divisibility: pull in any entry the pivot does not divide
            piv = m[t][t]
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_combine(t, bad, 1, 1, 0, 1)
        if m[t][t] < 0:
            for c in range(cols):
                m[t][c] = -m[t][c]
            for c in range(rows):
                u[t][c] = -u[t][c]
        t += 1

    d = tuple(m[i][i] for i in range(min(rows, cols)))
    return SnfResult(
        d=d,
        u=tuple(map(tuple, u)),
        v=tuple(map(tuple, v)),
        v_inv=tuple(map(tuple, vi)),
    )


def solve_mod(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], n: int,
              ncols: Optional[int] = None) -> Optional[IntMatrix]:
    """Solve ``a @ x == b (mod n)``; return ``None`` when no solution exists.

    ``a`` is ``r x c`` and ``b`` is ``r x k``; the result is ``c x k`` with
    entries reduced mod ``n``.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    r, c = shape(a, ncols)
    rb, k = shape(b)
    if rb != r:
        raise DimensionError(f"row mismatch: a has {r} rows, b has {rb}")
    res = snf(a, c)
    ub = matmul(res.u, b, r, k) if r else []
    y = zeros(c, k)
    for i in range(r):
        di = res.d[i] if i < len(res.d) else 0
        for j in range(k):
            rhs = ub[i][j] % n
            g = gcd(di, n)
            if rhs % g:
                return None
            if i < c:
                mod = n // g
                if mod == 1:
                    y[i][j] = 0
                else:
                    y[i][j] = (rhs // g) * pow(di // g, -1, mod) % mod
    x = [[e % n for e in row] for row in matmul(res.v, y, c, k)] if c else []
    check = matmul(a, x, c, k) if r else []
    for i in range(r):
        for j in range(k):
            if (check[i][j] - b[i][j]) % n:
                raise AssertionError("solve_mod produced a non-solution")
    return x


def left_kernel_mod(a: Sequence[Sequence[int]], n: int, ncols: int) -> IntMatrix:
    """Generators of ``{x : x @ a == 0 (mod n)}`` as rows.

    The returned rows span the full solution lattice in ``Z^rows`` (which
    always contains ``n * Z^rows``).
    """
    rows, cols = shape(a, ncols)
    res = snf(a, cols)
    gens = []
    for i in range(rows):
        di = res.d[i] if i < len(res.d) else 0
        scale = n // gcd(di, n)
        gens.append([scale * x for x in res.u[i]])
    return gens
