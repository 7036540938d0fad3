"""Small exact integer-lattice utilities.

Everything here operates on tiny matrices (a handful of rows and columns),
so the implementations favour clarity over asymptotics: plain integer
row reduction with gcd pivoting and Fraction back-substitution.
"""

from __future__ import annotations

from fractions import Fraction


def kernel_basis(form: list[int]) -> list[list[int]]:
    """Basis of the integer kernel of a single linear form.

    Returns len(form) - 1 vectors spanning {x : sum(form[i]*x[i]) = 0}
    when the form is nonzero (unimodular column reduction of the form).
    """
    n = len(form)
    # cols[j] tracks the j-th column of the unimodular transform U with
    # form @ U = (g, 0, ..., 0).
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    vals = list(form)
    pivot = None
    for j in range(n):
        if vals[j] != 0:
            pivot = j
            break
    if pivot is None:
        return cols
    if pivot != 0:
        vals[0], vals[pivot] = vals[pivot], vals[0]
        cols[0], cols[pivot] = cols[pivot], cols[0]
    for j in range(1, n):
        while vals[j] != 0:
            q = vals[0] // vals[j]
            vals[0] -= q * vals[j]
            cols[0] = [a - q * b for a, b in zip(cols[0], cols[j])]
            vals[0], vals[j] = vals[j], vals[0]
            cols[0], cols[j] = cols[j], cols[0]
    return cols[1:]


def solve_exact(rows: list[list[int]], rhs: list) -> list[Fraction] | None:
    """Solve the (possibly overdetermined) system rows^T . x = rhs exactly.

    ``rows`` are the generating vectors (x has one coordinate per row);
    returns None when inconsistent.
    """
    m = len(rows)
    if m == 0:
        return [] if all(v == 0 for v in rhs) else None
    dim = len(rows[0])
    # columns of the system matrix are the row vectors
    a = [[Fraction(rows[j][i]) for j in range(m)] for i in range(dim)]
    b = [Fraction(v) for v in rhs]
    piv_cols: list[int] = []
    r = 0
    for c in range(m):
        pivot = None
        for i in range(r, dim):
            if a[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        b[r], b[pivot] = b[pivot], b[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        b[r] = b[r] * inv
        for i in range(dim):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
                b[i] = b[i] - f * b[r]
        piv_cols.append(c)
        r += 1
    for i in range(r, dim):
        if b[i] != 0:
            return None
    x = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        x[c] = b[i]
    return x


def smith_invariant_factors(matrix: list[list[int]]) -> list[int]:
    """Nontrivial invariant factors (diagonal > 1) of an integer matrix.

    Classical Smith reduction by repeated gcd pivoting; fine for the
    small presentation matrices that arise here.
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v != 0 and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] % a[t][t] != 0:
                dirty = True
            q = a[i][t] // a[t][t]
            if q:
                a[i] = [v - q * w for v, w in zip(a[i], a[t])]
        for j in range(t + 1, cols):
            if a[t][j] % a[t][t] != 0:
                dirty = True
            q = a[t][j] // a[t][t]
            if q:
                for row in a:
                    row[j] -= q * row[t]
        if dirty or any(a[i][t] for i in range(t + 1, rows)) or any(
            a[t][j] for j in range(t + 1, cols)
        ):
            continue
        # enforce the divisibility chain: fold any non-multiple entry in
        # the remaining block into the pivot position and redo
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [v + w for v, w in zip(a[t], a[offender])]
            continue
        factors.append(abs(a[t][t]))
        t += 1
    return [f for f in factors if f > 1]
