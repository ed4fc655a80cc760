"""Exact dense linear algebra on lists of lists.

Integer routines never leave Z (fraction-free elimination).  Field
routines take a FieldSpec and operate on its raw representations.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(rows, cols, zero=0):
    return [[zero] * cols for _ in range(rows)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    if A and len(A[0]) != len(B):
        raise DimensionMismatch(f"{len(A)}x{len(A[0])} times {len(B)}x?")
    Bt = transpose(B) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v):
    if A and len(A[0]) != len(v):
        raise DimensionMismatch(f"matrix has {len(A[0])} columns, vector has {len(v)} entries")
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def mat_mod(A, q):
    return [[x % q for x in row] for row in A]


def bareiss_det(M):
    """Determinant of a square integer matrix by fraction-free elimination."""
    A = [list(r) for r in M]
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionMismatch("determinant needs a square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def _minor(M, i, j):
    return [row[:j] + row[j + 1:] for r, row in enumerate(M) if r != i]


def adjugate(M):
    """Return (det M, adj M) for a square integer matrix, exactly.

    Nonsingular input: Bareiss elimination on [M | I] followed by
    fraction-free back-substitution of U X = det * L.  Singular input
    falls back to cofactors.
    """
    n = len(M)
    if any(len(r) != n for r in M):
        raise DimensionMismatch("adjugate needs a square matrix")
    if n == 0:
        return 1, []
    if n == 1:
        return M[0][0], [[1]]
    A = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    width = 2 * n
    sign, prev = 1, 1
    singular = False
    for k in range(n):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                singular = True
                break
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    if singular:
        adj = [[(-1) ** (i + j) * bareiss_det(_minor(M, j, i)) for j in range(n)] for i in range(n)]
        return 0, adj
    det = sign * A[n - 1][n - 1]
    X = zeros(n, n)
    for col in range(n):
        for i in range(n - 1, -1, -1):
            acc = det * A[i][n + col]
            for k in range(i + 1, n):
                acc -= A[i][k] * X[k][col]
            x, r = divmod(acc, A[i][i])
            assert r == 0, "fraction-free back-substitution must divide exactly"
            X[i][col] = x
    return det, X


# matrices over a FieldSpec (raw representations)


def field_rref(F, M):
    """Reduced row echelon form over F; returns (rows, pivot_columns)."""
    A = [list(r) for r in M]
    rows = len(A)
    cols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not F.is_zero(A[i][c])), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(rows):
            if i != r and not F.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A[:r], pivots


def field_rank(F, M):
    return len(field_rref(F, M)[1])


def field_right_kernel(F, M, ncols):
    """Basis (as rows) of {x : M x = 0} over F, where M has ``ncols`` columns."""
    R, pivots = field_rref(F, M) if M else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [F.zero] * ncols
        x[fc] = F.one
        for row, pc in zip(R, pivots):
            x[pc] = F.neg(row[fc])
        basis.append(x)
    return basis


def field_matmul_t(F, A, B):
    """A times B-transpose over F (rows of A dotted with rows of B)."""
    out = []
    for a in A:
        row = []
        for b in B:
            acc = F.zero
            for x, y in zip(a, b):
                acc = F.add(acc, F.mul(x, y))
            row.append(acc)
        out.append(row)
    return out


def rational_solve(A, b):
    """Solve A x = b over Q exactly; None if inconsistent, any solution otherwise."""
    rows = len(A)
    cols = len(A[0]) if A else 0
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][cols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = M[i][cols]
    return x
