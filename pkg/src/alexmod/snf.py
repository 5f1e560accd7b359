"""Smith normal forms with transforms, over Z and over Q/F_p Laurent rings.

Every nontrivial module comparison in this package bottoms out here: corank
and the t=1 invariants use the integer form, invariant factors over the
Euclidean rings Q[t,t^-1] and F_p[t,t^-1] use the Laurent form.

Pivoting is smallest absolute value (smallest span for Laurent entries) with
ties broken by (row, col), so the transforms are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass

from alexmod.laurent import LambdaMatrix, LaurentPoly, Ring, ZZ
from alexmod.errors import RingMismatchError

# ---------------------------------------------------------------------------
# plain integer matrices (lists of lists)
# ---------------------------------------------------------------------------


def int_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_mat_mul(a, b) -> list[list[int]]:
    if not a or not b:
        rows = len(a)
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in range(rows)]
    n = len(b)
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for k in range(n):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cols):
                    acc[j] += x * brow[j]
        out.append(acc)
    return out


def int_det(a) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class IntSnf:
    """U * A * V = D with U, V unimodular and d1 | d2 | ... on the diagonal."""

    U: tuple
    D: tuple
    V: tuple
    rank: int

    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal() if d != 0]


def smith_int(A) -> IntSnf:
    """Smith normal form of an integer matrix given as a list of rows."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(row) for row in A]
    U = int_identity(m)
    V = int_identity(n)

    def row_op(i1, i2, q):
        # row i2 -= q * row i1
        Di1, Di2 = D[i1], D[i2]
        for j in range(n):
            Di2[j] -= q * Di1[j]
        Ui1, Ui2 = U[i1], U[i2]
        for j in range(m):
            Ui2[j] -= q * Ui1[j]

    def col_op(j1, j2, q):
        # col j2 -= q * col j1
        for row in D:
            row[j2] -= q * row[j1]
        for row in V:
            row[j2] -= q * row[j1]

    def swap_rows(i1, i2):
        if i1 != i2:
            D[i1], D[i2] = D[i2], D[i1]
            U[i1], U[i2] = U[i2], U[i1]

    def swap_cols(j1, j2):
        if j1 != j2:
            for row in D:
                row[j1], row[j2] = row[j2], row[j1]
            for row in V:
                row[j1], row[j2] = row[j2], row[j1]

    k = 0
    while k < min(m, n):
        # smallest nonzero |entry| in the trailing submatrix, ties by (row, col)
        pivot = None
        for i in range(k, m):
            for j in range(k, n):
                if D[i][j] != 0:
                    cand = (abs(D[i][j]), i, j)
                    if pivot is None or cand < pivot:
                        pivot = cand
        if pivot is None:
            break
        _, pi, pj = pivot
        swap_rows(k, pi)
        swap_cols(k, pj)

        dirty = False
        for i in range(k + 1, m):
            if D[i][k]:
                q = D[i][k] // D[k][k]
                row_op(k, i, q)
                if D[i][k]:
                    dirty = True
        for j in range(k + 1, n):
            if D[k][j]:
                q = D[k][j] // D[k][k]
                col_op(k, j, q)
                if D[k][j]:
                    dirty = True
        if dirty:
            continue

        # pivot must divide the rest of the submatrix for the chain d1 | d2 | ...
        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if D[i][j] % D[k][k] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(offender, k, -1)  # row k += row offender
            continue
        k += 1

    rank = k
    for i in range(rank):
        if D[i][i] < 0:
            for j in range(n):
                D[i][j] = -D[i][j]
            for j in range(m):
                U[i][j] = -U[i][j]
    return IntSnf(
        U=tuple(tuple(r) for r in U),
        D=tuple(tuple(r) for r in D),
        V=tuple(tuple(r) for r in V),
        rank=rank,
    )


def int_kernel(A) -> list[list[int]]:
    """Basis of {x : A x = 0} as a list of column vectors."""
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    s = smith_int(A)
    return [[s.V[i][j] for i in range(n)] for j in range(s.rank, n)]


def int_solve(A, b) -> list[int] | None:
    """Some x with A x = b, or None if none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [0] * n
    s = smith_int(A)
    ub = [sum(s.U[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        d = s.D[i][i]
        if d:
            if ub[i] % d != 0:
                return None
            y[i] = ub[i] // d
        elif ub[i] != 0:
            return None
    for i in range(min(m, n), m):
        if ub[i] != 0:
            return None
    return [sum(s.V[i][k] * y[k] for k in range(n)) for i in range(n)]


# ---------------------------------------------------------------------------
# Laurent matrices over a field (Euclidean by span = degree - valuation)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnfResult:
    """U * A * V = D over the base ring, diagonal divisibility chain in D."""

    U: LambdaMatrix
    D: LambdaMatrix
    V: LambdaMatrix
    ring: Ring
    rank: int

    def diagonal(self) -> list[LaurentPoly]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    def invariant_factors(self) -> list[LaurentPoly]:
        return [d for d in self.diagonal() if not d.is_zero()]

    def nonunit_invariant_factors(self) -> list[LaurentPoly]:
        return [d for d in self.invariant_factors() if not d.is_unit()]


def smith_laurent(A: LambdaMatrix) -> SnfResult:
    """Smith normal form over Q[t,t^-1] or F_p[t,t^-1].

    Invariant factors come out unit-normalized (monic, valuation 0).
    """
    ring = A.ring
    if ring.kind == "Z":
        raise RingMismatchError("smith_laurent needs field coefficients")
    m, n = A.rows, A.cols
    D = [[A[i, j] for j in range(n)] for i in range(m)]
    one = LaurentPoly.one(ring)
    zero = LaurentPoly.zero(ring)
    U = [[one if i == j else zero for j in range(m)] for i in range(m)]
    V = [[one if i == j else zero for j in range(n)] for i in range(n)]

    def row_combine(i1, i2, q):
        # row i2 -= q * row i1
        for j in range(n):
            if D[i1][j].coeffs:
                D[i2][j] = D[i2][j] - q * D[i1][j]
        for j in range(m):
            if U[i1][j].coeffs:
                U[i2][j] = U[i2][j] - q * U[i1][j]

    def col_combine(j1, j2, q):
        for i in range(m):
            if D[i][j1].coeffs:
                D[i][j2] = D[i][j2] - q * D[i][j1]
        for i in range(n):
            if V[i][j1].coeffs:
                V[i][j2] = V[i][j2] - q * V[i][j1]

    k = 0
    while k < min(m, n):
        pivot = None
        for i in range(k, m):
            for j in range(k, n):
                if D[i][j].coeffs:
                    cand = (D[i][j].span(), i, j)
                    if pivot is None or cand < pivot:
                        pivot = cand
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != k:
            D[k], D[pi] = D[pi], D[k]
            U[k], U[pi] = U[pi], U[k]
        if pj != k:
            for row in D:
                row[k], row[pj] = row[pj], row[k]
            for row in V:
                row[k], row[pj] = row[pj], row[k]

        dirty = False
        for i in range(k + 1, m):
            if D[i][k].coeffs:
                q, r = D[i][k].divmod(D[k][k])
                row_combine(k, i, q)
                if r.coeffs:
                    dirty = True
        for j in range(k + 1, n):
            if D[k][j].coeffs:
                q, r = D[k][j].divmod(D[k][k])
                col_combine(k, j, q)
                if r.coeffs:
                    dirty = True
        if dirty:
            continue

        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if D[i][j].divmod(D[k][k])[1].coeffs:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_combine(offender, k, -one)  # row k += row offender
            continue

        # unit-normalize the pivot (monic, valuation 0)
        piv = D[k][k]
        unit = piv.normalize_unit().divide_exact(piv)
        for j in range(n):
            D[k][j] = D[k][j] * unit
        for j in range(m):
            U[k][j] = U[k][j] * unit
        k += 1

    return SnfResult(
        U=LambdaMatrix(ring, U) if m else LambdaMatrix.zeros(0, 0, ring),
        D=LambdaMatrix(ring, D) if m else LambdaMatrix.zeros(0, n, ring),
        V=LambdaMatrix(ring, V) if n else LambdaMatrix.zeros(0, 0, ring),
        ring=ring,
        rank=k,
    )


def snf(A: LambdaMatrix) -> SnfResult:
    """Unified Smith normal form over Z (constant entries), Q[t,t^-1], F_p[t,t^-1]."""
    if A.ring.kind != "Z":
        return smith_laurent(A)
    rows = A.eval_at_one()
    for i in range(A.rows):
        for j in range(A.cols):
            entry = A[i, j]
            if entry.coeffs and (len(entry.coeffs) > 1 or 0 not in entry.coeffs):
                raise RingMismatchError(
                    "SNF over Z needs constant entries; use the Q or F_p shadow for t-dependence"
                )
    s = smith_int(rows)
    m, n = A.rows, A.cols
    return SnfResult(
        U=LambdaMatrix.from_int_rows(s.U, ZZ) if m else LambdaMatrix.zeros(0, 0, ZZ),
        D=LambdaMatrix.from_int_rows(s.D, ZZ) if m else LambdaMatrix.zeros(0, n, ZZ),
        V=LambdaMatrix.from_int_rows(s.V, ZZ) if n else LambdaMatrix.zeros(0, 0, ZZ),
        ring=ZZ,
        rank=s.rank,
    )
