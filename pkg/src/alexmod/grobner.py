"""Strong Groebner bases for submodules of Z[t]^n, and the Λ-module layer.

Λ = Z[t,t^-1] computations route through Z[t]: clear powers of t (units of
Λ), compute with a strong Groebner basis over the PID coefficient ring Z
(S-polynomials plus GCD-polynomials), and t-saturate where membership in the
Λ-span is needed.  Localization at t is flat, so Z[t]-syzygies of a cleared
matrix generate the Λ-syzygies, and v lies in a Λ-span iff some t^k * v lies
in the t-saturation of the Z[t]-span.

Vectors are dicts {(position, exponent): coefficient} with exponents >= 0.
Monomial order: position-over-term — earlier positions dominate, and within
a position higher t-degree is larger.  This makes the order an elimination
order for the leading block, which is how kernels are extracted.
"""

from __future__ import annotations

from math import gcd

from alexmod import kernel
from alexmod.errors import BoundExceededError
from alexmod.laurent import LambdaMatrix, LaurentPoly, ZZ

# generous safety valves; genuine inputs in this package stay far below
DEFAULT_BASIS_CAP = 4000
DEFAULT_DEGREE_CAP = 400

_active_degree_cap = DEFAULT_DEGREE_CAP


def set_degree_cap(cap: int) -> None:
    """Process-wide Groebner degree cap (CLI --degree-cap)."""
    global _active_degree_cap
    _active_degree_cap = cap


def _order_key(mon):
    return (mon[0], -mon[1])


def lead_term(v: dict):
    """Leading (monomial, coefficient) under the position-over-term order."""
    mon = min(v, key=_order_key)
    return mon, v[mon]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def vec_from_column(column, base_pos: int = 0) -> dict:
    """Laurent column (list of LaurentPoly) -> vector dict; exponents may be < 0."""
    v = {}
    for i, p in enumerate(column):
        for e, c in p.coeffs.items():
            v[(base_pos + i, e)] = c
    return v


def column_from_vec(v: dict, rows: int) -> list[LaurentPoly]:
    cols: list[dict] = [dict() for _ in range(rows)]
    for (pos, e), c in v.items():
        cols[pos][e] = c
    return [LaurentPoly(ZZ, d) for d in cols]


def clear_vec(v: dict) -> tuple[dict, int]:
    """Multiply by t^k so all exponents are >= 0; returns (cleared, k)."""
    if not v:
        return v, 0
    shift = -min(e for (_, e) in v)
    if shift <= 0:
        return v, 0
    return kernel.vscale(v, 1, shift), shift


class Groebner:
    """Strong Groebner basis of a Z[t]-submodule of Z[t]^nrows.

    ``reps`` expresses every basis element as a Λ-combination of the
    *original* generators handed to ``__init__`` (saturation introduces
    honest negative powers of t).
    """

    def __init__(self, gens: list[dict], nrows: int, reps: list[dict] | None = None,
                 degree_cap: int | None = None, basis_cap: int = DEFAULT_BASIS_CAP):
        self.nrows = nrows
        self.degree_cap = _active_degree_cap if degree_cap is None else degree_cap
        self.basis_cap = basis_cap
        self.basis: list[dict] = []
        self.reps: list[dict] = []
        if reps is None:
            reps = [{i: {0: 1}} for i in range(len(gens))]
        pending = [(dict(g), dict(r)) for g, r in zip(gens, reps) if g]
        self._complete(pending)

    # -- construction -------------------------------------------------------

    def _normalize(self, v, rep):
        _, c = lead_term(v)
        if c < 0:
            v = kernel.vscale(v, -1, 0)
            rep = {j: kernel.pscale(p, -1, 0) for j, p in rep.items()}
        return v, rep

    def _complete(self, pending):
        pairs: list[tuple[int, int]] = []
        for v, rep in pending:
            v, rep = self._reduce_tracked(v, rep)
            if v:
                self._add_element(v, rep, pairs)
        while pairs:
            i, j = pairs.pop(0)
            f, g = self.basis[i], self.basis[j]
            (pf, af), cf = lead_term(f)
            (pg, ag), cg = lead_term(g)
            if pf != pg:
                continue
            m = max(af, ag)
            candidates = []
            l = cf // gcd(cf, cg) * cg
            s = kernel.vadd_scaled(
                kernel.vscale(f, l // cf, m - af), g, -(l // cg), m - ag
            )
            srep = self._combine_reps(i, l // cf, m - af, j, -(l // cg), m - ag)
            candidates.append((s, srep))
            if cf % cg != 0 and cg % cf != 0:
                g0, u, w = _xgcd(cf, cg)
                h = kernel.vadd_scaled(kernel.vscale(f, u, m - af), g, w, m - ag)
                hrep = self._combine_reps(i, u, m - af, j, w, m - ag)
                candidates.append((h, hrep))
            for v, rep in candidates:
                v, rep = self._reduce_tracked(v, rep)
                if v:
                    self._add_element(v, rep, pairs)

    def _combine_reps(self, i, ci, ki, j, cj, kj):
        rep: dict = {}
        for idx, p in self.reps[i].items():
            rep[idx] = kernel.padd(rep.get(idx, {}), kernel.pscale(p, ci, ki))
        for idx, p in self.reps[j].items():
            rep[idx] = kernel.padd(rep.get(idx, {}), kernel.pscale(p, cj, kj))
        return rep

    def _reduce_tracked(self, v, rep):
        while v:
            mon, c = lead_term(v)
            pos, e = mon
            hit = False
            for k, g in enumerate(self.basis):
                gmon, d = lead_term(g)
                if gmon[0] == pos and gmon[1] <= e and c % d == 0:
                    q = c // d
                    v = kernel.vadd_scaled(v, g, -q, e - gmon[1])
                    for jdx, p in self.reps[k].items():
                        rep[jdx] = kernel.padd(rep.get(jdx, {}), kernel.pscale(p, -q, e - gmon[1]))
                    hit = True
                    break
            if not hit:
                break
        return v, rep

    def _add_element(self, v, rep, pairs):
        v, rep = self._normalize(v, rep)
        k = len(self.basis)
        if k >= self.basis_cap:
            raise BoundExceededError("Groebner basis size cap exceeded")
        if max(e for (_, e) in v) > self.degree_cap:
            raise BoundExceededError("Groebner degree cap exceeded")
        pos = lead_term(v)[0][0]
        for i, g in enumerate(self.basis):
            if lead_term(g)[0][0] == pos:
                pairs.append((i, k))
        self.basis.append(v)
        self.reps.append(rep)

    # -- queries -------------------------------------------------------------

    def reduce_membership(self, v: dict, track: bool = False):
        """Head-reduce; (True, certificate) iff v lies in the Z[t]-span.

        The certificate maps original generator index -> Laurent coefficient
        dict, and is None when track is False.
        """
        rep: dict = {}
        while v:
            mon, c = lead_term(v)
            pos, e = mon
            hit = False
            for k, g in enumerate(self.basis):
                gmon, d = lead_term(g)
                if gmon[0] == pos and gmon[1] <= e and c % d == 0:
                    q = c // d
                    v = kernel.vadd_scaled(v, g, -q, e - gmon[1])
                    if track:
                        for jdx, p in self.reps[k].items():
                            rep[jdx] = kernel.padd(rep.get(jdx, {}), kernel.pscale(p, q, e - gmon[1]))
                    hit = True
                    break
            if not hit:
                return False, None
        rep = {j: p for j, p in rep.items() if p}
        return True, (rep if track else None)


# ---------------------------------------------------------------------------
# Λ-module layer
# ---------------------------------------------------------------------------


class LambdaSpan:
    """Λ-submodule of Λ^rows spanned by generator columns (ring Z entries)."""

    def __init__(self, rows: int, columns: list[list[LaurentPoly]],
                 degree_cap: int | None = None):
        self.rows = rows
        self.columns = [list(c) for c in columns]
        self.degree_cap = _active_degree_cap if degree_cap is None else degree_cap
        self._gb: Groebner | None = None

    @staticmethod
    def from_matrix(A: LambdaMatrix) -> "LambdaSpan":
        return LambdaSpan(A.rows, A.columns())

    def matrix(self) -> LambdaMatrix:
        return LambdaMatrix.from_columns(self.rows, self.columns, ZZ)

    def _saturated_gb(self) -> Groebner:
        """Strong GB of (Z[t]-span of cleared generators) : t^infinity.

        Reps stay expressed over the original generator columns, through both
        the clearing units and the saturation steps.
        """
        if self._gb is not None:
            return self._gb
        gens = []
        reps = []
        for j, col in enumerate(self.columns):
            v = vec_from_column(col)
            if not v:
                continue
            v, shift = clear_vec(v)
            gens.append(v)
            reps.append({j: {shift: 1}})
        gb = Groebner(gens, self.rows, reps, degree_cap=self.degree_cap)
        while True:
            new = self._colon_by_t(gb)
            added = False
            for v, rep in new:
                ok, _ = gb.reduce_membership(dict(v))
                if not ok:
                    gb = Groebner(
                        [*gb.basis, v], self.rows, [*gb.reps, rep], degree_cap=self.degree_cap
                    )
                    added = True
            if not added:
                break
        self._gb = gb
        return gb

    def _colon_by_t(self, gb: Groebner):
        """Candidate generators of (span : t), with reps over original columns."""
        ngens = len(gb.basis)
        r = self.rows
        # kernel of [B | -t*I]: columns of B live in positions 0..r-1 of the
        # graph module, tag columns get positions r..; the kernel's tail block
        # gives {v : t v in span B}.
        graph_gens = []
        for j, g in enumerate(gb.basis):
            w = dict(g)
            w[(r + j, 0)] = 1
            graph_gens.append(w)
        for i in range(r):
            graph_gens.append({(i, 1): -1, (r + ngens + i, 0): 1})
        graph = Groebner(graph_gens, r + ngens + r, degree_cap=self.degree_cap)
        out = []
        for g in graph.basis:
            if all(pos >= r for (pos, _) in g):
                x = {}
                v = {}
                for (pos, e), c in g.items():
                    if pos < r + ngens:
                        x[(pos - r, e)] = c
                    else:
                        v[(pos - r - ngens, e)] = c
                if not v:
                    continue
                # t*v = -B*x, so v = -t^-1 * sum x_j g_j; push reps through
                rep: dict = {}
                xcols: list[dict] = [dict() for _ in range(ngens)]
                for (j, e), c in x.items():
                    xcols[j][e] = c
                for j, xp in enumerate(xcols):
                    if not xp:
                        continue
                    for idx, p in gb.reps[j].items():
                        contrib = kernel.pscale(kernel.pmul(xp, p), -1, -1)
                        rep[idx] = kernel.padd(rep.get(idx, {}), contrib)
                out.append((v, rep))
        return out

    # -- public operations ----------------------------------------------------

    def saturated_generators(self) -> list[list[LaurentPoly]]:
        """Columns generating (Z[t]-span : t^infinity) = span ∩ Z[t]^rows."""
        gb = self._saturated_gb()
        return [column_from_vec(v, self.rows) for v in gb.basis]

    def contains(self, column: list[LaurentPoly]) -> bool:
        return self.certificate(column) is not None

    def certificate(self, column: list[LaurentPoly]):
        """Λ-coefficients c with sum c_j * gen_j = column, or None."""
        v = vec_from_column(column)
        if not v:
            return [LaurentPoly.zero(ZZ) for _ in self.columns]
        gb = self._saturated_gb()
        v, shift = clear_vec(v)
        ok, rep = gb.reduce_membership(v, track=True)
        if not ok:
            return None
        out = []
        for j in range(len(self.columns)):
            p = rep.get(j, {})
            out.append(LaurentPoly(ZZ, {e - shift: c for e, c in p.items()}))
        return out

    def contains_span(self, other: "LambdaSpan") -> bool:
        return all(self.contains(col) for col in other.columns)

    def equals(self, other: "LambdaSpan") -> bool:
        if self.rows != other.rows:
            return False
        return self.contains_span(other) and other.contains_span(self)


def lambda_kernel(A: LambdaMatrix) -> LambdaMatrix:
    """Generators of ker(A : Λ^cols -> Λ^rows), as columns of a Λ-matrix.

    Row scaling by units does not change the kernel, so rows are cleared to
    Z[t]; the Z[t]-syzygies then generate the Λ-kernel by flatness of the
    localization at t.
    """
    r, c = A.rows, A.cols
    if c == 0:
        return LambdaMatrix.zeros(0, 0, ZZ)
    row_shift = []
    for i in range(r):
        vals = [p.valuation() for p in A.entries[i] if p.coeffs]
        row_shift.append(max(0, -min(vals)) if vals else 0)
    graph_gens = []
    for j in range(c):
        v = {}
        for i in range(r):
            p = A[i, j]
            for e, coeff in p.coeffs.items():
                v[(i, e + row_shift[i])] = coeff
        v[(r + j, 0)] = 1
        graph_gens.append(v)
    gb = Groebner(graph_gens, r + c)
    cols = []
    for g in gb.basis:
        if all(pos >= r for (pos, _) in g):
            w = {(pos - r, e): coeff for (pos, e), coeff in g.items()}
            col = column_from_vec(w, c)
            cols.append(_unit_normalize_column(col))
    cols.sort(key=_column_sort_key)
    return LambdaMatrix.from_columns(c, cols, ZZ)


def _unit_normalize_column(col: list[LaurentPoly]) -> list[LaurentPoly]:
    vals = [p.valuation() for p in col if p.coeffs]
    if not vals:
        return col
    shift = -min(vals)
    first = next(p for p in col if p.coeffs)
    sign = 1 if first.coeffs[first.valuation()] > 0 else -1
    return [p.scaled(sign, shift) for p in col]


def _column_sort_key(col: list[LaurentPoly]):
    return [tuple(sorted(p.coeffs.items())) for p in col]


def colon_ideal(span: LambdaSpan, target: list[LaurentPoly]) -> list[LaurentPoly]:
    """Generators of {f in Λ : f * target in span}."""
    r = span.rows
    cols = [target] + span.columns
    A = LambdaMatrix.from_columns(r, cols, ZZ)
    ker = lambda_kernel(A)
    out = []
    for j in range(ker.cols):
        f = ker[0, j]
        if f.coeffs:
            out.append(f.normalize_unit())
    return sorted(set(out), key=lambda p: tuple(sorted(p.coeffs.items())))


def ideal_contains_integer(ideal_gens: list[LaurentPoly]) -> int | None:
    """Smallest positive integer in the Λ-ideal, or None."""
    gb = _ideal_gb(ideal_gens)
    best = None
    for g in gb.basis:
        if all(e == 0 for (_, e) in g):
            c = abs(g[(0, 0)])
            if best is None or c < best:
                best = c
    return best


def ideal_monic_element(ideal_gens: list[LaurentPoly]) -> LaurentPoly | None:
    """An element with leading coefficient +-1 (lowest degree), or None."""
    gb = _ideal_gb(ideal_gens)
    best = None
    for g in gb.basis:
        (_, e), c = lead_term(g)
        if c in (1, -1):
            if best is None or e < best[0]:
                best = (e, g)
    if best is None:
        return None
    g = best[1]
    p = LaurentPoly(ZZ, {e: c for (_, e), c in g.items()})
    return p if p.leading_coeff() > 0 else -p


def _ideal_gb(ideal_gens: list[LaurentPoly]) -> Groebner:
    span = LambdaSpan(1, [[p] for p in ideal_gens if p.coeffs])
    return span._saturated_gb()
