"""Exact rational matrices as lists of row lists of Fractions.

Shapes are explicit everywhere because zero-dimensional spaces show up
constantly (a matrix with 0 rows is [], a matrix with 0 columns is a list
of empty rows), and Python list algebra cannot infer them.
"""

from fractions import Fraction


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def from_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def shape(m, rows=None, cols=None):
    r = len(m) if rows is None else rows
    c = (len(m[0]) if m else 0) if cols is None else cols
    return r, c


def mat_mul(a, b, inner=None):
    """a (r x k) times b (k x c); pass inner=k when a has zero rows."""
    r = len(a)
    k = len(a[0]) if a else (inner if inner is not None else len(b))
    c = len(b[0]) if b else 0
    if k != len(b) and b:
        raise ValueError(f"shape mismatch: {r}x{k} times {len(b)}x{c}")
    out = zeros(r, c)
    for i in range(r):
        for j in range(c):
            out[i][j] = sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0))
    return out


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0))
            for row in a]


def transpose(m, cols=None):
    r = len(m)
    c = (len(m[0]) if m else 0) if cols is None else cols
    return [[m[i][j] for i in range(r)] for j in range(c)]


def rref(m, cols=None):
    """Reduced row echelon form.  Returns (rows, pivot column list)."""
    rows = [list(r) for r in m]
    ncols = (len(rows[0]) if rows else 0) if cols is None else cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = rows[r][c]
        rows[r] = [x / scale for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m, cols=None):
    return len(rref(m, cols)[1])


def nullspace(m, cols):
    """Basis of {v : m v = 0} as a list of column vectors (length cols)."""
    rows, pivots = rref(m, cols)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


def column_space_coords(basis_cols, vectors, dim):
    """Express each vector of `vectors` in the basis `basis_cols`.

    basis_cols: list of independent length-dim column vectors.
    vectors: list of length-dim column vectors lying in their span.
    Returns the coordinate matrix X (len(basis_cols) x len(vectors)) with
    basis * X = vectors.  Raises ValueError if some vector is outside the
    span.
    """
    k = len(basis_cols)
    n = len(vectors)
    aug = [[basis_cols[j][i] for j in range(k)] + [vec[i] for vec in vectors]
           for i in range(dim)]
    rows, pivots = rref(aug, k + n)
    if any(p >= k for p in pivots):
        raise ValueError("vector outside the span of the given basis")
    out = zeros(k, n)
    for i, p in enumerate(pivots):
        for j in range(n):
            out[p][j] = rows[i][k + j]
    return out
