"""Independent reference implementations used as oracles.

Each function here recomputes something the package computes, by the most
naive route available (direct recursion, convolution, determinant checks),
and stays independent of the code paths it checks.
"""

from fractions import Fraction

from alexmod.laurent import LaurentPoly, ZZ
from alexmod.snf import int_det, int_mat_mul


def naive_poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def naive_poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def naive_gamma(letters) -> int:
    return sum(e for _, e in letters)


def naive_fox(letters, i: int) -> dict:
    """Fox derivative straight from the recursion d(uv) = d(u) + t^g(u) d(v),
    d(x^-1) = -t^-1 d(x)-style base cases, on a raw (unreduced) letter list."""
    if not letters:
        return {}
    (g, e), rest = letters[0], letters[1:]
    if e == 1:
        head = {0: 1} if g == i else {}
        shift = 1
    else:
        head = {-1: -1} if g == i else {}
        shift = -1
    tail = {k + shift: v for k, v in naive_fox(rest, i).items()}
    return naive_poly_add(head, tail)


def check_int_snf(A, snf) -> bool:
    """U A V == D, diagonal, chain d1 | d2 | ..., and U, V unimodular."""
    U = [list(r) for r in snf.U]
    V = [list(r) for r in snf.V]
    D = [list(r) for r in snf.D]
    if A and int_mat_mul(int_mat_mul(U, [list(r) for r in A]), V) != D:
        return False
    m = len(D)
    n = len(D[0]) if m else 0
    diag = []
    for i in range(m):
        for j in range(n):
            if i != j and D[i][j] != 0:
                return False
            if i == j:
                diag.append(D[i][j])
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a != 0 and b % a != 0:
            return False
    if U and abs(int_det(U)) != 1:
        return False
    if V and abs(int_det(V)) != 1:
        return False
    return True


def check_laurent_snf(A, snf) -> bool:
    """U A V == D exactly; diagonal; divisibility chain; unit determinants."""
    prod = snf.U * A * snf.V
    if prod != snf.D:
        return False
    D = snf.D
    diag = []
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j and D[i, j].coeffs:
                return False
            if i == j:
                diag.append(D[i, j])
    for a, b in zip(diag, diag[1:]):
        if a.is_zero() and not b.is_zero():
            return False
        if not a.is_zero() and b.divmod(a)[1].coeffs:
            return False
    if snf.U.rows and not laurent_det(snf.U).is_unit():
        return False
    if snf.V.rows and not laurent_det(snf.V).is_unit():
        return False
    return True


def laurent_det(M) -> LaurentPoly:
    n = M.rows
    if n == 0:
        return LaurentPoly.one(M.ring)
    if n == 1:
        return M[0, 0]
    det = LaurentPoly.zero(M.ring)
    for j in range(n):
        if not M[0, j].coeffs:
            continue
        rows = [[M[i, k] for k in range(n) if k != j] for i in range(1, n)]
        from alexmod.laurent import LambdaMatrix

        sub = laurent_det(LambdaMatrix(M.ring, rows))
        det = det + M[0, j].scaled(-1 if j % 2 else 1, 0) * sub
    return det


def euclid_gcd_laurent(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Reference Euclid on val-0 polynomial representatives using Fractions."""

    def to_poly(p):
        if p.is_zero():
            return []
        v = p.valuation()
        return [Fraction(p.coeffs.get(v + i, 0)) for i in range(p.span() + 1)]

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def polymod(f, g):
        f = f[:]
        while len(f) >= len(g) and trim(f):
            q = f[-1] / g[-1]
            off = len(f) - len(g)
            for i, cg in enumerate(g):
                f[off + i] -= q * cg
            trim(f)
        return f

    fa, fb = to_poly(a), to_poly(b)
    while trim(fb):
        fa, fb = fb, polymod(fa, fb)
    if not fa:
        return LaurentPoly.zero(a.ring)
    lead = fa[-1]
    return LaurentPoly(a.ring, {i: c / lead for i, c in enumerate(fa)})


def unit_orbit_canonical(p: LaurentPoly) -> LaurentPoly:
    """Enumerate +-t^k p over a window and pick the one satisfying the
    canonical-form rule (valuation 0 and positive lowest coefficient)."""
    if p.is_zero():
        return p
    for sign in (1, -1):
        for k in range(-2 * abs(p.degree()) - 4, 2 * abs(p.degree()) + 5):
            q = p.scaled(sign, k)
            if q.valuation() == 0 and q.coeffs[0] > 0:
                return q
    raise AssertionError("unit orbit enumeration failed")
