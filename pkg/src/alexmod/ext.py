"""Free resolutions, the functors E^q = Ext^q(-, Λ), the maximal finite
submodule, torsion parts, and structure of finite modules.

E^2 of any finitely generated module is finite (it is the character dual of
the maximal finite submodule), which is what makes the double dual
DM = E^2 E^2 M computable by integer linear algebra after one round of
Groebner work.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from alexmod.errors import (
    FinitenessCertificationError,
    NotFiniteError,
    ValidationError,
)
from alexmod.finite import (
    FiniteModuleData,
    from_integer_presentation,
    is_symmetric,
    split_t_minus_one,
    subgroup_data,
    t_order,
)
from alexmod.grobner import LambdaSpan, colon_ideal, ideal_contains_integer, ideal_monic_element, lambda_kernel
from alexmod.laurent import LambdaMatrix, LaurentPoly, ZZ
from alexmod.modules import PresentedModule, battery


# ---------------------------------------------------------------------------
# resolutions and Ext
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Resolution:
    """Λ^{c3} -> Λ^{c2} -> Λ^{c1} -> Λ^{c0} -> M -> 0, exact at c2, c1, c0."""

    module: PresentedModule
    d1: LambdaMatrix
    d2: LambdaMatrix
    d3: LambdaMatrix

    def ranks(self) -> tuple[int, int, int, int]:
        return (self.d3.cols, self.d2.cols, self.d1.cols, self.module.gens)


def free_resolution(M: PresentedModule) -> Resolution:
    """Length-3 free resolution: successive syzygies of the presentation."""
    d1 = M.relations
    d2 = lambda_kernel(d1)
    d3 = lambda_kernel(d2)
    if not (d1 * d2).is_zero() or not (d2 * d3).is_zero():
        raise ValidationError("syzygy composite is nonzero: internal defect")
    return Resolution(M, d1, d2, d3)


def syzygy(A: LambdaMatrix) -> LambdaMatrix:
    """Generators of ker(A : Λ^cols -> Λ^rows) as columns."""
    return lambda_kernel(A)


@dataclass(frozen=True)
class Subquotient:
    """K/L for submodules L <= K <= Λ^ambient, with membership certificates
    expressing every relation column as a combination of the generators."""

    ambient: int
    gens: LambdaMatrix
    rels: LambdaMatrix
    certs: tuple

    def presented(self) -> PresentedModule:
        """Presentation on the subquotient's generator columns."""
        a = self.gens.cols
        if a == 0:
            return PresentedModule.free(0)
        stacked = self.gens.hstack(self.rels)
        ker = lambda_kernel(stacked)
        cols = [[ker[i, j] for i in range(a)] for j in range(ker.cols)]
        return PresentedModule.from_columns(a, cols)


def _subquotient(ambient: int, gens: LambdaMatrix, rels: LambdaMatrix) -> Subquotient:
    span = LambdaSpan(ambient, gens.columns())
    certs = []
    for col in rels.columns():
        cert = span.certificate(col)
        if cert is None:
            raise ValidationError("relation column lies outside the generator span")
        certs.append(tuple(cert))
    return Subquotient(ambient, gens, rels, tuple(certs))


def ext(M: PresentedModule, q: int) -> Subquotient:
    """E^q M = Ext^q_Λ(M, Λ) as a subquotient of the dualized resolution."""
    if q not in (0, 1, 2):
        raise ValueError("only E^0, E^1, E^2 are defined here (E^q = 0 beyond)")
    res = free_resolution(M)
    e1 = res.d1.transpose()
    e2 = res.d2.transpose()
    e3 = res.d3.transpose()
    if q == 0:
        ambient = M.gens
        gens = lambda_kernel(e1)
        rels = LambdaMatrix.zeros(ambient, 0, ZZ)
    elif q == 1:
        ambient = res.d1.cols
        gens = lambda_kernel(e2)
        rels = e1
    else:
        ambient = res.d2.cols
        gens = lambda_kernel(e3)
        rels = e2
    return _subquotient(ambient, gens, rels)


# ---------------------------------------------------------------------------
# finite structure of a presented module
# ---------------------------------------------------------------------------


def _unit_basis(g: int, i: int) -> list[LaurentPoly]:
    return [LaurentPoly.one(ZZ) if k == i else LaurentPoly.zero(ZZ) for k in range(g)]


def annihilator_bounds(M: PresentedModule):
    """(m, G): a positive integer and a monic polynomial annihilating M.

    None in either slot means no such element exists (module not finite).
    """
    g = M.gens
    span = LambdaSpan.from_matrix(M.relations)
    m_total = 1
    g_total = LaurentPoly.one(ZZ)
    for i in range(g):
        ideal = colon_ideal(span, _unit_basis(g, i))
        m_i = ideal_contains_integer(ideal)
        g_i = ideal_monic_element(ideal)
        if m_i is None or g_i is None:
            return None, None
        m_total = m_total * m_i // gcd(m_total, m_i)
        g_total = g_total * g_i
    v = g_total.valuation()
    if v:
        g_total = g_total.scaled(1, -v)
    return m_total, g_total


def finite_structure(M: PresentedModule) -> FiniteModuleData:
    """Certified finite structure of a finite module, with lifts into Λ^gens.

    Builds the integer presentation on generators t^j e_i (0 <= j < deg G)
    for a monic annihilator G, relations from the t-saturated relation span
    shifted through t^0..t^{deg G - 1} plus the integer annihilator.
    """
    g = M.gens
    if g == 0:
        return FiniteModuleData((), (), lifts=())
    m, G = annihilator_bounds(M)
    if m is None:
        raise NotFiniteError("no integer or no monic polynomial annihilates the module")
    d = G.degree()
    if d == 0:
        return FiniteModuleData((), (), lifts=())
    span = LambdaSpan.from_matrix(M.relations)
    sat_cols = span.saturated_generators()
    ny = g * d
    gcoeffs = dict(G.coeffs)

    def to_y(vec: dict) -> list[int]:
        """Rewrite a Z[t]^g vector into t^j e_i coordinates modulo G."""
        work = dict(vec)
        out = [0] * ny
        while work:
            (pos, e), c = max(work.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            if e < d:
                out[pos * d + e] += c
                del work[(pos, e)]
                continue
            for ge, gc in gcoeffs.items():
                key = (pos, e - d + ge)
                nv = work.get(key, 0) - c * gc
                if nv:
                    work[key] = nv
                else:
                    work.pop(key, None)
        return out

    rel_cols = []
    for col in sat_cols:
        base = {}
        for i, p in enumerate(col):
            for e, c in p.coeffs.items():
                if e < 0:
                    raise ValidationError("saturated generators must be t-power free")
                base[(i, e)] = c
        for s in range(d):
            shifted = {(i, e + s): c for (i, e), c in base.items()}
            rel_cols.append(to_y(shifted))
    for idx in range(ny):
        col = [0] * ny
        col[idx] = m
        rel_cols.append(col)

    t_ambient = [[0] * ny for _ in range(ny)]
    for i in range(g):
        for j in range(d - 1):
            t_ambient[i * d + j + 1][i * d + j] = 1
        top = to_y({(i, d): 1})
        for k in range(ny):
            t_ambient[k][i * d + d - 1] = top[k]

    t_poly = LaurentPoly.t(ZZ)
    ambient_lifts = [
        tuple(t_poly ** j if k == i else LaurentPoly.zero(ZZ) for k in range(g))
        for i in range(g)
        for j in range(d)
    ]
    return from_integer_presentation(ny, rel_cols, t_ambient, ambient_lifts)


def min_generators(D: FiniteModuleData) -> int:
    """Minimal number of Λ-generators of a finite module.

    Localizing at a maximal ideal (p, f) turns the count into the number of
    F_p[t,t^-1]-invariant factors divisible by f; the divisibility chain
    makes that largest for f dividing the first factor, so the count is just
    the number of nonunit factors mod p, maximized over the prime support.
    """
    if D.is_zero():
        return 0
    return max(len(D.p_invariant_factors(p)) for p in D.prime_support())


def dm(M: PresentedModule) -> FiniteModuleData:
    """DM = E^2 E^2 M, the maximal finite submodule, as abstract finite data."""
    e2 = ext(M, 2).presented()
    e2e2 = ext(e2, 2).presented()
    try:
        return finite_structure(e2e2)
    except NotFiniteError as exc:
        raise FinitenessCertificationError(
            "E^2 E^2 failed the finiteness certificate: internal defect"
        ) from exc


def dm_submodule(M: PresentedModule) -> FiniteModuleData:
    """DM as an actual submodule of M, with lifts into Λ^gens.

    The abstract E^2 E^2 M fixes an exponent N and a t-order K; the elements
    of M killed by both N and t^K - 1 are exactly the maximal finite
    submodule, and that kernel is one syzygy computation.
    """
    abstract = dm(M)
    g = M.gens
    if abstract.is_zero() or g == 0:
        return FiniteModuleData((), (), lifts=())
    N = abstract.exponent
    K = t_order(abstract)
    A = M.relations
    c = A.cols
    z = LaurentPoly.zero(ZZ)
    tK = LaurentPoly.t(ZZ) ** K - LaurentPoly.one(ZZ)
    rows = []
    for i in range(g):
        row = [LaurentPoly.term(N, 0, ZZ) if k == i else z for k in range(g)]
        row += [-A[i, j] for j in range(c)] + [z] * c
        rows.append(row)
    for i in range(g):
        row = [tK if k == i else z for k in range(g)]
        row += [z] * c + [-A[i, j] for j in range(c)]
        rows.append(row)
    ker = lambda_kernel(LambdaMatrix(ZZ, rows))
    gen_cols = []
    span = LambdaSpan.from_matrix(A)
    for j in range(ker.cols):
        col = [ker[i, j] for i in range(g)]
        if any(p.coeffs for p in col) and not span.contains(col):
            gen_cols.append(col)
    sub = submodule_structure(M, gen_cols)
    if sub.battery() != abstract.battery():
        raise FinitenessCertificationError(
            "submodule DM disagrees with E^2 E^2 M: internal defect"
        )
    return sub


def submodule_structure(M: PresentedModule, generator_cols) -> FiniteModuleData:
    """Finite structure of the submodule of M generated by the given columns."""
    if not generator_cols:
        return FiniteModuleData((), (), lifts=())
    g = M.gens
    Gm = LambdaMatrix.from_columns(g, generator_cols, ZZ)
    stacked = Gm.hstack(M.relations)
    ker = lambda_kernel(stacked)
    a = Gm.cols
    rel_cols = [[ker[i, j] for i in range(a)] for j in range(ker.cols)]
    sub_presented = PresentedModule.from_columns(a, rel_cols)
    fs = finite_structure(sub_presented)
    if fs.lifts is None:
        return fs
    # compose lifts: coordinates of fs are Λ-combinations of sub-generators,
    # which are themselves columns in Λ^g
    new_lifts = []
    for lift in fs.lifts:
        vec = [LaurentPoly.zero(ZZ) for _ in range(g)]
        for j, coeff in enumerate(lift):
            if coeff.coeffs:
                vec = [acc + generator_cols[j][i] * coeff for i, acc in enumerate(vec)]
        new_lifts.append(tuple(vec))
    return FiniteModuleData(fs.invariants, fs.t_matrix, lifts=tuple(new_lifts))


# ---------------------------------------------------------------------------
# torsion parts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TorsionParts:
    tm: PresentedModule
    bm: PresentedModule
    t_dm: PresentedModule


def torsion_parts(M: PresentedModule) -> TorsionParts:
    """TM = ker(M -> E^0 E^0 M), BM = M/TM, T_DM = TM / image of DM."""
    g = M.gens
    if g == 0:
        zero = PresentedModule.free(0)
        return TorsionParts(zero, zero, zero)
    K = lambda_kernel(M.relations.transpose())  # columns: hom(M, Λ) inside Λ^g
    GT = lambda_kernel(K.transpose())  # torsion preimage inside Λ^g
    r = GT.cols
    bm = PresentedModule(g, GT)
    stacked = GT.hstack(M.relations)
    ker = lambda_kernel(stacked)
    tm_rels = [[ker[i, j] for i in range(r)] for j in range(ker.cols)]
    tm = PresentedModule.from_columns(r, tm_rels)
    dmsub = dm_submodule(M)
    extra = []
    if not dmsub.is_zero():
        span = LambdaSpan(g, GT.columns())
        for lift in dmsub.lifts:
            cert = span.certificate(list(lift))
            if cert is None:
                raise ValidationError("DM does not sit inside TM: internal defect")
            extra.append(list(cert))
    t_dm = PresentedModule.from_columns(r, tm_rels + extra)
    return TorsionParts(tm, bm, t_dm)


# ---------------------------------------------------------------------------
# duality and near-symmetry
# ---------------------------------------------------------------------------


def is_nearly_symmetric(D: FiniteModuleData, primes=None, budget: int = 1_000_000):
    """True / False / None: does D fit between (t-1)-killed kernels and
    cokernels around a finite symmetric module?

    The splitting D = D_{t-1} + D_c localizes the question: maps with
    (t-1)-killed kernel and cokernel cannot disturb the summand where t-1 is
    invertible, so near-symmetry holds exactly when D_c is symmetric.  Used
    inside genus bounds this errs, if at all, toward admitting a candidate,
    which only weakens (never invalidates) the resulting lower bound.
    """
    _, dc = split_t_minus_one(D)
    return is_symmetric(dc, primes=primes, budget=budget)


def enumerate_submodules(D: FiniteModuleData, max_count: int = 4096):
    """All t-invariant submodules of a finite module, with their data.

    Returns (generators, FiniteModuleData) pairs; generator elements are in
    D's coordinates, and the sub-data inherits ambient lifts when D has them.
    """
    from alexmod.finite import enumerate_t_subgroups

    out = []
    for gens in enumerate_t_subgroups(D, max_count=max_count):
        out.append((gens, subgroup_data(D, gens)))
    return out
