"""
Small exact linear algebra over the integers and rationals.

Everything here works on plain Python lists/tuples of ints or Fractions;
matrices are lists of rows.  The matrices that occur are tiny (dimension
at most 5 or so), so clarity wins over asymptotics.
"""
from fractions import Fraction
from math import gcd
from functools import reduce


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def primitive(v):
    """Scale a rational vector to the primitive integer vector in the same direction.

    >>> primitive([Fraction(2, 3), Fraction(-4, 3), 0])
    (1, -2, 0)
    """
    v = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    w = [int(x * den) for x in v]
    g = reduce(gcd, w, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in w)


def rref(rows, ncols=None):
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, n):
    """Basis of {x in Q^n : rows . x = 0} as primitive integer vectors."""
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    R, pivots = rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def solve_combination(vectors, y):
    """Coefficients c with sum c_i vectors[i] == y, or None if y is not in the span.

    The vectors must be linearly independent.
    """
    k = len(vectors)
    n = len(y)
    aug = [[vectors[j][i] for j in range(k)] + [y[i]] for i in range(n)]
    R, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("vectors are linearly dependent")
    coeffs = [Fraction(0)] * k
    for row, p in zip(R, pivots):
        coeffs[p] = row[k]
    return coeffs


def det(M):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_vec(M, v):
    return tuple(dot(row, v) for row in M)


def mat_mul(A, B):
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def inverse(M):
    """Exact inverse over Q of a square matrix."""
    n = len(M)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def column_hnf(M):
    """Unimodular column reduction.

    Returns (H, V) with M V = H, V unimodular and H in column echelon form:
    column j has its leading nonzero entry in row pivot_j, pivots strictly
    increasing, leading entries positive, trailing columns zero.
    """
    rows = len(M)
    cols = len(M[0]) if M else 0
    H = [list(map(int, row)) for row in M]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for X in (H, V):
            for row in X:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    c = 0
    for r in range(rows):
        if c == cols:
            break
        for k in range(c + 1, cols):
            while H[r][k] != 0:
                if H[r][c] == 0:
                    colop(c, k, 0, 1, 1, 0)
                    continue
                qt = H[r][k] // H[r][c]
                colop(c, k, 1, 0, -qt, 1)
                if H[r][k] != 0:
                    colop(c, k, 0, 1, 1, 0)
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            for X in (H, V):
                for row in X:
                    row[c] = -row[c]
        c += 1
    return H, V


def integer_kernel(rows, n):
    """Lattice basis of {x in Z^n : rows . x = 0}."""
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    H, V = column_hnf(rows)
    nonzero = sum(1 for j in range(n) if any(row[j] for row in H))
    return [tuple(V[i][j] for i in range(n)) for j in range(nonzero, n)]


def lattice_index(generators):
    """Index of the lattice spanned by independent integer vectors in its saturation."""
    k = len(generators)
    if k == 0:
        return 1
    n = len(generators[0])
    perp = nullspace([list(g) for g in generators], n)
    basis = integer_kernel(perp, n) if perp else [tuple(int(i == j) for j in range(n)) for i in range(n)]
    coords = [[int(c) for c in solve_combination(basis, g)] for g in generators]
    return abs(det(coords))
