"""Small exact linear algebra helpers over Fraction."""

from __future__ import annotations

from fractions import Fraction


def _rref(rows, width):
    """Row-reduce in place, returning the list of pivot columns."""
    pivots = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_exact(columns, rhs):
    """Solve sum_j x_j * columns[j] = rhs exactly.

    Returns the coefficient list, or None when the system is inconsistent.
    Requires the columns to be linearly independent (unique solution on the
    span); raises ValueError otherwise.
    """
    n = len(rhs)
    k = len(columns)
    rows = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(n)]
    pivots = _rref(rows, k)
    if len(pivots) < k:
        raise ValueError("columns are linearly dependent")
    # Inconsistency shows up as a nonzero rhs entry in a zero row.
    for i in range(len(pivots), n):
        if rows[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for idx, c in enumerate(pivots):
        sol[c] = rows[idx][k]
    return sol


def nullspace_vector(vectors):
    """One nonzero rational relation among the given vectors.

    The vectors must have a nullspace of dimension exactly one; the relation
    is scaled to coprime integers with positive first nonzero entry.
    """
    k = len(vectors)
    n = len(vectors[0])
    rows = [[Fraction(vectors[j][i]) for j in range(k)] for i in range(n)]
    pivots = _rref(rows, k)
    free = [c for c in range(k) if c not in pivots]
    if len(free) != 1:
        raise ValueError("nullspace is not one-dimensional")
    f = free[0]
    rel = [Fraction(0)] * k
    rel[f] = Fraction(1)
    for idx, c in enumerate(pivots):
        rel[c] = -rows[idx][f]
    from math import gcd

    denom = 1
    for x in rel:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in rel]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def invert_matrix(matrix):
    """Exact inverse of a square rational matrix."""
    n = len(matrix)
    rows = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots = _rref(rows, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]
