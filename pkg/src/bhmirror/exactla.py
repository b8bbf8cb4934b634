"""Exact integer and rational linear algebra.

Matrices are dense lists of row lists holding ints or ``fractions.Fraction``.
Everything here is pure and allocation-happy; the matrices arising in the
rest of the package are small, and the large sparse systems produced by the
complex engines go through :func:`sparse_rank` instead.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list  # list of row lists
Vector = list


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
               for ra, rb in zip(a, b))


def copy_matrix(a: Matrix) -> Matrix:
    return [list(row) for row in a]


def rat_rank(a: Matrix) -> int:
    """Rank over Q by exact Gaussian elimination."""
    if not a or not a[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def rat_solve(a: Matrix, b: Vector) -> Vector | None:
    """Solve a x = b over Q; returns None when the system is inconsistent.

    For underdetermined systems an arbitrary solution (free variables set
    to zero) is returned.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(x) for x in a[r]] + [Fraction(b[r])] for r in range(rows)]
    pivots: list[int] = []
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, rows):
        if m[r][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for r, col in enumerate(pivots):
        x[col] = m[r][cols]
    return x


def rat_det(a: Matrix) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def rat_inv(a: Matrix) -> Matrix:
    """Inverse of a square matrix over Q; raises ValueError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in a[r]] + [Fraction(int(r == c)) for c in range(n)]
         for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form of an integer matrix.

    Returns (u, d, v) with u @ a @ v = d, u and v unimodular, d diagonal
    with each diagonal entry dividing the next.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [[int(x) for x in row] for row in a]
    u = identity(rows)
    v = identity(cols)

    def row_op(i: int, j: int, q: int) -> None:  # row_i -= q * row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i: int, j: int, q: int) -> None:  # col_i -= q * col_j
        for row in d:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    t = 0
    while t < min(rows, cols):
        # move a nonzero entry of minimal magnitude to position (t, t)
        best = None
        for r in range(t, rows):
            for c in range(t, cols):
                if d[r][c] != 0 and (best is None or abs(d[r][c]) < best[0]):
                    best = (abs(d[r][c]), r, c)
        if best is None:
            break
        _, r, c = best
        if r != t:
            _swap_rows(d, t, r)
            _swap_rows(u, t, r)
        if c != t:
            _swap_cols(d, t, c)
            _swap_cols(v, t, c)
        dirty = False
        for r in range(t + 1, rows):
            if d[r][t] != 0:
                q = d[r][t] // d[t][t]
                row_op(r, t, q)
                if d[r][t] != 0:
                    dirty = True
        for c in range(t + 1, cols):
            if d[t][c] != 0:
                q = d[t][c] // d[t][t]
                col_op(c, t, q)
                if d[t][c] != 0:
                    dirty = True
        if dirty:
            continue
        # ensure the pivot divides every remaining entry
        offender = None
        for r in range(t + 1, rows):
            for c in range(t + 1, cols):
                if d[r][c] % d[t][t] != 0:
                    offender = r
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    if __debug__:
        assert mat_eq(mat_mul(mat_mul(u, a), v), d)
        assert abs(rat_det(u)) == 1 and abs(rat_det(v)) == 1
    return u, d, v


def hermite_normal_form(a: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form of an integer matrix.

    Returns (h, u) with h = u @ a, u unimodular, h in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    h = [[int(x) for x in row] for row in a]
    u = identity(rows)
    pivot_row = 0
    for col in range(cols):
        # gcd out the column below pivot_row
        while True:
            nz = [r for r in range(pivot_row, rows) if h[r][col] != 0]
            if not nz:
                break
            r0 = min(nz, key=lambda r: abs(h[r][col]))
            if r0 != pivot_row:
                _swap_rows(h, pivot_row, r0)
                _swap_rows(u, pivot_row, r0)
            done = True
            for r in range(pivot_row + 1, rows):
                if h[r][col] != 0:
                    q = h[r][col] // h[pivot_row][col]
                    h[r] = [x - q * y for x, y in zip(h[r], h[pivot_row])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[pivot_row])]
                    if h[r][col] != 0:
                        done = False
            if done:
                break
        if pivot_row < rows and h[pivot_row][col] != 0:
            if h[pivot_row][col] < 0:
                h[pivot_row] = [-x for x in h[pivot_row]]
                u[pivot_row] = [-x for x in u[pivot_row]]
            for r in range(pivot_row):
                q = h[r][col] // h[pivot_row][col]
                if q:
                    h[r] = [x - q * y for x, y in zip(h[r], h[pivot_row])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[pivot_row])]
            pivot_row += 1
            if pivot_row == rows:
                break
    if __debug__:
        assert mat_eq(mat_mul(u, a), h)
        assert abs(rat_det(u)) == 1
    return h, u


def _integerize(row: dict[int, Fraction | int]) -> dict[int, int]:
    denom = 1
    for v in row.values():
        d = getattr(v, "denominator", 1)
        denom = denom * d // gcd(denom, d)
    out = {c: int(v * denom) for c, v in row.items() if v != 0}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


def sparse_rank(rows) -> int:
    """Rank over Q of a collection of sparse vectors.

    Each element of ``rows`` is a dict mapping coordinate index to a nonzero
    int or Fraction.  Elimination is fraction-free: rows are scaled to
    coprime integers and combined by cross-multiplication.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for raw in rows:
        row = _integerize(raw)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = row
                rank += 1
                break
            a, b = p[c], row[c]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {}
            for cc, v in row.items():
                new[cc] = v * fa
            for cc, v in p.items():
                nv = new.get(cc, 0) - v * fb
                if nv:
                    new[cc] = nv
                else:
                    new.pop(cc, None)
            row = _integerize(new)
    return rank
