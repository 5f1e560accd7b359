"""Finite Λ-modules as finite abelian groups with a designated automorphism.

A finite module is stored in Smith coordinates: invariant factors
d_1 | d_2 | ... (each >= 2) and the matrix of the t-action.  Everything here
is integer linear algebra; no Groebner machinery is needed once a module is
known to be finite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from alexmod.errors import BoundExceededError, NotFiniteError, ValidationError
from alexmod.laurent import GF, LambdaMatrix, LaurentPoly, ZZ
from alexmod.snf import int_identity, int_kernel, int_mat_mul, smith_int

DEFAULT_T_ORDER_CAP = 1_000_000


@dataclass(frozen=True)
class FiniteModuleData:
    """Finite abelian group + t-action, in Smith normal coordinates.

    ``lifts``, when present, sends each coordinate generator to a vector in
    the ambient Λ^g of the presented module this data came from (used to
    push submodules back into module presentations).
    """

    invariants: tuple[int, ...]
    t_matrix: tuple[tuple[int, ...], ...]
    lifts: tuple[tuple[LaurentPoly, ...], ...] | None = None

    @property
    def order(self) -> int:
        return prod(self.invariants)

    @property
    def exponent(self) -> int:
        return self.invariants[-1] if self.invariants else 1

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def prime_support(self) -> list[int]:
        n = self.order
        out = []
        p = 2
        while p * p <= n:
            if n % p == 0:
                out.append(p)
                while n % p == 0:
                    n //= p
            p += 1
        if n > 1:
            out.append(n)
        return out

    def is_zero(self) -> bool:
        return not self.invariants

    # -- element arithmetic --------------------------------------------------

    def zero(self) -> tuple:
        return (0,) * self.rank

    def reduce(self, x) -> tuple:
        return tuple(int(c) % d for c, d in zip(x, self.invariants))

    def add(self, x, y) -> tuple:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariants))

    def neg(self, x) -> tuple:
        return tuple((-a) % d for a, d in zip(x, self.invariants))

    def smul(self, c: int, x) -> tuple:
        return tuple((c * a) % d for a, d in zip(x, self.invariants))

    def apply(self, matrix, x) -> tuple:
        return tuple(
            sum(matrix[i][j] * x[j] for j in range(self.rank)) % self.invariants[i]
            for i in range(self.rank)
        )

    def t_apply(self, x) -> tuple:
        return self.apply(self.t_matrix, x)

    def elements(self):
        return itertools.product(*(range(d) for d in self.invariants))

    def element_lift(self, x) -> list[LaurentPoly]:
        """Λ^g-vector representing element x of a module with stored lifts."""
        if self.lifts is None:
            raise ValidationError("this finite module carries no ambient lifts")
        g = len(self.lifts[0]) if self.lifts else 0
        out = [LaurentPoly.zero(ZZ) for _ in range(g)]
        for c, lift in zip(x, self.lifts):
            if c:
                out = [acc + v.scaled(c, 0) for acc, v in zip(out, lift)]
        return out

    # -- Λ-presentation of the same module -----------------------------------

    def to_presented(self):
        """Λ-presentation [t*I - T | diag(d)] on the coordinate generators."""
        from alexmod.modules import PresentedModule

        s = self.rank
        t = LaurentPoly.t(ZZ)
        cols = []
        for j in range(s):
            col = [
                (t if i == j else LaurentPoly.zero(ZZ))
                - LaurentPoly.term(self.t_matrix[i][j], 0, ZZ)
                for i in range(s)
            ]
            cols.append(col)
        for j in range(s):
            cols.append(
                [
                    LaurentPoly.term(self.invariants[j] if i == j else 0, 0, ZZ)
                    for i in range(s)
                ]
            )
        return PresentedModule.from_columns(s, cols)

    def p_invariant_factors(self, p: int) -> list[LaurentPoly]:
        """Nonunit invariant factors of the mod-p reduction over F_p[t,t^-1]."""
        from alexmod.modules import elementary_data

        return elementary_data(self.to_presented(), p)

    def battery(self, primes=None):
        from alexmod.modules import DEFAULT_PRIMES, battery

        return battery(self.to_presented(), primes or DEFAULT_PRIMES)


# ---------------------------------------------------------------------------
# construction from an integer presentation
# ---------------------------------------------------------------------------


def int_inverse(U) -> list[list[int]]:
    """Inverse of a unimodular integer matrix (exact, via Fraction Gauss)."""
    n = len(U)
    aug = [[Fraction(U[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if aug[i][k] != 0)
        aug[k], aug[piv] = aug[piv], aug[k]
        pv = aug[k][k]
        aug[k] = [x / pv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
    out = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValidationError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def from_integer_presentation(n: int, relation_cols: list[list[int]],
                              t_ambient: list[list[int]],
                              ambient_lifts=None) -> FiniteModuleData:
    """Z^n modulo the span of relation columns, with t acting by t_ambient.

    Raises NotFiniteError when the quotient is infinite.  ``ambient_lifts``
    optionally gives a Λ^g-vector for each of the n ambient generators.
    """
    if n == 0:
        return FiniteModuleData((), (), lifts=() if ambient_lifts is not None else None)
    R = [[col[i] for col in relation_cols] for i in range(n)]
    if not relation_cols:
        raise NotFiniteError("free presentation is infinite")
    s = smith_int(R)
    diag = [s.D[i][i] for i in range(min(n, len(relation_cols)))]
    diag += [0] * (n - len(diag))
    if any(d == 0 for d in diag):
        raise NotFiniteError("presentation has free rank")
    U = [list(r) for r in s.U]
    Uinv = int_inverse(U)
    keep = [i for i, d in enumerate(diag) if d != 1]
    invariants = tuple(diag[i] for i in keep)

    # t-action in Smith coordinates: T' = U T U^-1 restricted to kept rows/cols
    TU = int_mat_mul(int_mat_mul(U, t_ambient), Uinv)
    t_matrix = tuple(
        tuple(TU[i][j] % diag[i] for j in keep) for i in keep
    )
    lifts = None
    if ambient_lifts is not None:
        lifts = []
        for i in keep:
            vec = None
            for k in range(n):
                c = Uinv[k][i]
                if c:
                    contrib = [p.scaled(c, 0) for p in ambient_lifts[k]]
                    vec = contrib if vec is None else [a + b for a, b in zip(vec, contrib)]
            if vec is None:
                vec = [LaurentPoly.zero(ZZ) for _ in range(len(ambient_lifts[0]))] if ambient_lifts else []
            lifts.append(tuple(vec))
        lifts = tuple(lifts)
    data = FiniteModuleData(invariants, t_matrix, lifts=lifts)
    if not is_automorphism(data, data.t_matrix):
        raise ValidationError("t-action is not invertible on the finite module")
    return data


def subgroup_order(D: FiniteModuleData, gens: list[tuple]) -> int:
    """Order of the subgroup generated by the given elements."""
    if not gens or D.is_zero():
        return 1
    q = quotient_by(D, gens)
    return D.order // q.order


def is_automorphism(D: FiniteModuleData, matrix) -> bool:
    if D.is_zero():
        return True
    cols = [tuple(matrix[i][j] % D.invariants[i] for i in range(D.rank)) for j in range(D.rank)]
    return subgroup_order(D, cols) == D.order


def t_order(D: FiniteModuleData, cap: int = DEFAULT_T_ORDER_CAP) -> int:
    """Multiplicative order of the t-action."""
    if D.is_zero():
        return 1
    ident = tuple(tuple(int(i == j) for j in range(D.rank)) for i in range(D.rank))
    power = D.t_matrix
    k = 1
    while True:
        normal = tuple(
            tuple(power[i][j] % D.invariants[i] for j in range(D.rank)) for i in range(D.rank)
        )
        if normal == ident:
            return k
        if k > cap:
            raise BoundExceededError("t-order search cap exceeded")
        power = tuple(
            tuple(sum(power[i][l] * D.t_matrix[l][j] for l in range(D.rank)) % D.invariants[i]
                  for j in range(D.rank))
            for i in range(D.rank)
        )
        k += 1


# ---------------------------------------------------------------------------
# solving and subgroup machinery
# ---------------------------------------------------------------------------


def solve_in_group(D: FiniteModuleData, gens: list[tuple], target: tuple) -> list[int] | None:
    """Integer coefficients x with sum x_j gens_j = target in D, or None."""
    if D.is_zero():
        return [0] * len(gens)
    n = D.rank
    cols = [list(g) for g in gens] + [
        [D.invariants[i] if k == i else 0 for i in range(n)] for k in range(n)
    ]
    A = [[col[i] for col in cols] for i in range(n)]
    from alexmod.snf import int_solve

    sol = int_solve(A, list(target))
    if sol is None:
        return None
    return sol[: len(gens)]


def subgroup_data(D: FiniteModuleData, gens: list[tuple]) -> FiniteModuleData:
    """The subgroup generated by t-invariant ``gens`` as its own module.

    Lifts of the new module point into the same ambient as D's lifts (or into
    D's coordinates when D has none).
    """
    gens = [D.reduce(g) for g in gens]
    gens = [g for g in gens if any(g)]
    if not gens:
        return FiniteModuleData((), (), lifts=() if D.lifts is not None else None)
    r = len(gens)
    n = D.rank
    # relations of the subgroup: integer kernel of [G | diag(d)], x-block
    A = [
        [gens[j][i] for j in range(r)] + [D.invariants[i] if k == i else 0 for k in range(n)]
        for i in range(n)
    ]
    ker = int_kernel(A)
    rel_cols = [k[:r] for k in ker]
    # t-action on subgroup generators, expressed inside the subgroup
    t_cols = []
    for g in gens:
        img = D.t_apply(g)
        x = solve_in_group(D, gens, img)
        if x is None:
            raise ValidationError("subgroup is not t-invariant")
        t_cols.append(x)
    t_ambient = [[t_cols[j][i] for j in range(r)] for i in range(r)]
    if D.lifts is not None:
        ambient_lifts = [tuple(D.element_lift(g)) for g in gens]
    else:
        ambient_lifts = None
    return from_integer_presentation(r, rel_cols, t_ambient, ambient_lifts)


def quotient_by(D: FiniteModuleData, gens: list[tuple]) -> FiniteModuleData:
    """D modulo the subgroup generated by ``gens`` (which must be t-invariant
    for the quotient to carry the t-action; invariance is the caller's duty)."""
    n = D.rank
    if n == 0:
        return D
    rel_cols = [list(D.reduce(g)) for g in gens] + [
        [D.invariants[i] if k == i else 0 for i in range(n)] for k in range(n)
    ]
    t_ambient = [[D.t_matrix[i][j] for j in range(n)] for i in range(n)]
    lifts = list(D.lifts) if D.lifts is not None else None
    return from_integer_presentation(n, rel_cols, t_ambient, lifts)


def kernel_subgroup(D: FiniteModuleData, matrix) -> list[tuple]:
    """Generators of {x in D : matrix * x = 0}."""
    n = D.rank
    if n == 0:
        return []
    A = [
        [matrix[i][j] for j in range(n)] + [D.invariants[i] if k == i else 0 for k in range(n)]
        for i in range(n)
    ]
    ker = int_kernel(A)
    return [D.reduce(k[:n]) for k in ker]


def image_subgroup(D: FiniteModuleData, matrix) -> list[tuple]:
    """Generators of matrix(D)."""
    n = D.rank
    return [D.reduce([matrix[i][j] for i in range(n)]) for j in range(n)]


# ---------------------------------------------------------------------------
# duality, symmetry, splitting
# ---------------------------------------------------------------------------


def dual_finite(D: FiniteModuleData) -> FiniteModuleData:
    """Character dual hom_Z(D, Q/Z) with the t-anti structure.

    Under the pairing <x, y> = sum x_i y_i / d_i the adjoint of the t-action
    is S[j][i] = d_j T[i][j] / d_i; the dual's t-action is S^-1, so that a
    module is symmetric exactly when it is Λ-isomorphic to its dual.
    """
    n = D.rank
    if n == 0:
        return D
    d = D.invariants
    S = [
        [((d[j] * D.t_matrix[i][j]) // d[i]) % d[j] for i in range(n)]
        for j in range(n)
    ]
    Sinv = matrix_inverse_mod(D, S)
    return FiniteModuleData(d, tuple(tuple(row) for row in Sinv))


def matrix_inverse_mod(D: FiniteModuleData, M) -> list[list[int]]:
    """Inverse of an automorphism matrix of D (column-by-column solve)."""
    n = D.rank
    cols = [tuple(M[i][j] % D.invariants[i] for i in range(n)) for j in range(n)]
    out_cols = []
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        x = solve_in_group(D, cols, e)
        if x is None:
            raise ValidationError("matrix is not invertible on the group")
        out_cols.append([x[i] % D.invariants[i] for i in range(n)])
    return [[out_cols[j][i] for j in range(n)] for i in range(n)]


def find_equivariant_iso(D1: FiniteModuleData, D2: FiniteModuleData,
                         budget: int = 1_000_000):
    """Search for a Λ-linear isomorphism D1 -> D2.

    Returns the generator images, False when the exhaustive search proves
    none exists, or None when the budget trips.
    """
    if D1.invariants != D2.invariants:
        return False
    if D1.is_zero():
        return []
    n = D1.rank
    # candidate images: elements of D2 killed by the generator's order
    pools = []
    for i in range(n):
        d = D1.invariants[i]
        pool = [x for x in D2.elements() if all((d * c) % dd == 0 for c, dd in zip(x, D2.invariants))]
        pools.append(pool)
    tried = 0
    for images in itertools.product(*pools):
        tried += 1
        if tried > budget:
            return None
        # equivariance on generators: phi(T1 e_i) = T2 phi(e_i)
        ok = True
        for i in range(n):
            lhs_coords = [D1.t_matrix[k][i] for k in range(n)]
            lhs = D2.zero()
            for k in range(n):
                lhs = D2.add(lhs, D2.smul(lhs_coords[k], images[k]))
            rhs = D2.t_apply(images[i])
            if lhs != rhs:
                ok = False
                break
        if not ok:
            continue
        if subgroup_order(D2, list(images)) == D2.order:
            return list(images)
    return False


def is_symmetric(D: FiniteModuleData, primes=None, budget: int = 1_000_000):
    """True / False / None(unknown): t-anti self-duality of a finite module."""
    dual = dual_finite(D)
    b1 = D.battery(primes)
    b2 = dual.battery(primes)
    if b1 != b2:
        return False
    found = find_equivariant_iso(D, dual, budget=budget)
    if found is None:
        return None
    return bool(found is not False)


def split_t_minus_one(D: FiniteModuleData):
    """The unique splitting D = D_{t-1} + D_c: stable kernel and stable image
    of (t-1), with (t-1) nilpotent on the first and invertible on the second."""
    n = D.rank
    if n == 0:
        return subgroup_data(D, []), subgroup_data(D, [])
    S = [[(D.t_matrix[i][j] - int(i == j)) % D.invariants[i] for j in range(n)] for i in range(n)]
    power = int_identity(n)
    prev_kernel_order = -1
    while True:
        power = int_mat_mul(S, power)
        ker = kernel_subgroup(D, power)
        korder = subgroup_order(D, ker)
        if korder == prev_kernel_order:
            break
        prev_kernel_order = korder
    d_t1 = subgroup_data(D, kernel_subgroup(D, power))
    d_c = subgroup_data(D, image_subgroup(D, power))
    if d_t1.order * d_c.order != D.order:
        raise ValidationError("splitting certification failed: order product mismatch")
    return d_t1, d_c


def enumerate_t_subgroups(D: FiniteModuleData, max_count: int = 4096):
    """All t-invariant subgroups, as lists of generating elements."""
    if D.is_zero():
        return [[]]
    found = {frozenset([D.zero()]): []}
    frontier = [frozenset([D.zero()])]
    while frontier:
        base = frontier.pop(0)
        base_gens = found[base]
        for x in D.elements():
            if x in base:
                continue
            key = _close_subgroup(D, base_gens + [x])
            if key not in found:
                if len(found) >= max_count:
                    raise BoundExceededError("submodule enumeration cap exceeded")
                found[key] = base_gens + [x]
                frontier.append(key)
    return [gens for _, gens in sorted(found.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))]


def _close_subgroup(D: FiniteModuleData, gens: list) -> frozenset:
    """Smallest t-invariant subgroup containing ``gens``: BFS from zero under
    the moves x -> x + g and x -> t x (inverses come for free in a finite
    group)."""
    invariants = D.invariants
    t_matrix = D.t_matrix
    n = D.rank
    rng = range(n)
    zero = (0,) * n
    elems = {zero}
    work = [zero]
    while work:
        x = work.pop()
        nxt = [tuple((x[i] + g[i]) % invariants[i] for i in rng) for g in gens]
        nxt.append(
            tuple(sum(t_matrix[i][j] * x[j] for j in rng) % invariants[i] for i in rng)
        )
        for c in nxt:
            if c not in elems:
                elems.add(c)
                work.append(c)
    return frozenset(elems)
