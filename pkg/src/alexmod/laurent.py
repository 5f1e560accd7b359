"""Exact Laurent polynomials over Z, Q and F_p, and dense matrices of them.

The ring Z[t, t^-1] is the coefficient ring of every module in this package;
Q[t, t^-1] and F_p[t, t^-1] are its Euclidean shadows used for invariant
factors.  Coefficients are exact: Python ints, fractions.Fraction, or
residues in [0, p).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from alexmod import kernel
from alexmod.errors import ExactDivisionError, ParseError, RingMismatchError


@dataclass(frozen=True)
class Ring:
    """Coefficient ring tag: 'Z', 'Q' or 'Fp' (with the prime stored)."""

    kind: str
    p: int | None = None

    def coerce(self, c):
        if self.kind == "Z":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise RingMismatchError(f"{c} is not an integer")
                return int(c)
            return int(c)
        if self.kind == "Q":
            return Fraction(c)
        return int(c) % self.p

    def coeff_str(self, c) -> str:
        return str(c)

    def coeff_from_str(self, s: str):
        if self.kind == "Q":
            return Fraction(s)
        return self.coerce(int(s))

    def __repr__(self):
        return {"Z": "ZZ", "Q": "QQ"}.get(self.kind, f"GF({self.p})")


ZZ = Ring("Z")
QQ = Ring("Q")


@lru_cache(maxsize=None)
def GF(p: int) -> Ring:
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return Ring("Fp", p)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(?:(?P<t>t)(?:\^(?P<exp>-?\d+))?)?"
)


class LaurentPoly:
    """Immutable Laurent polynomial: a dict {exponent: nonzero coefficient}."""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: Ring, coeffs: dict):
        object.__setattr__(self, "ring", ring)
        clean = {}
        for e, c in coeffs.items():
            c = ring.coerce(c)
            if c:
                clean[e] = c
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: Ring = ZZ) -> "LaurentPoly":
        return LaurentPoly(ring, {})

    @staticmethod
    def one(ring: Ring = ZZ) -> "LaurentPoly":
        return LaurentPoly(ring, {0: 1})

    @staticmethod
    def term(c, k: int = 0, ring: Ring = ZZ) -> "LaurentPoly":
        return LaurentPoly(ring, {k: c})

    @staticmethod
    def t(ring: Ring = ZZ) -> "LaurentPoly":
        return LaurentPoly(ring, {1: 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: self.ring.coerce(1)}

    def is_unit(self) -> bool:
        """Unit of the Laurent ring: +-t^k over Z, c*t^k over a field."""
        if len(self.coeffs) != 1:
            return False
        c = next(iter(self.coeffs.values()))
        if self.ring.kind == "Z":
            return c in (1, -1)
        return True

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero polynomial")
        return max(self.coeffs)

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        return min(self.coeffs)

    def span(self) -> int:
        """Euclidean size degree - valuation; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(self.coeffs) - min(self.coeffs)

    def leading_coeff(self):
        return self.coeffs[self.degree()]

    def trailing_coeff(self):
        return self.coeffs[self.valuation()]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _wrap(self, coeffs: dict) -> "LaurentPoly":
        p = object.__new__(LaurentPoly)
        object.__setattr__(p, "ring", self.ring)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    def __add__(self, other):
        self._check(other)
        if self.ring.kind == "Fp":
            return self._wrap(kernel.padd_mod(self.coeffs, other.coeffs, self.ring.p))
        return self._wrap(kernel.padd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        if self.ring.kind == "Fp":
            return self._wrap(
                kernel.padd_mod(
                    self.coeffs, kernel.pscale_mod(other.coeffs, -1, 0, self.ring.p), self.ring.p
                )
            )
        return self._wrap(kernel.psub(self.coeffs, other.coeffs))

    def __neg__(self):
        if self.ring.kind == "Fp":
            return self._wrap(kernel.pscale_mod(self.coeffs, -1, 0, self.ring.p))
        return self._wrap(kernel.pneg(self.coeffs))

    def __mul__(self, other):
        self._check(other)
        if self.ring.kind == "Fp":
            return self._wrap(kernel.pmul_mod(self.coeffs, other.coeffs, self.ring.p))
        return self._wrap(kernel.pmul(self.coeffs, other.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            e, c = next(iter(self.coeffs.items()))
            inv = c if self.ring.kind == "Z" else _field_inv(c, self.ring)
            return LaurentPoly(self.ring, {-e: inv}) ** (-n)
        out = LaurentPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def scaled(self, c, k: int = 0) -> "LaurentPoly":
        """Multiply by the monomial c * t^k."""
        c = self.ring.coerce(c)
        if self.ring.kind == "Fp":
            return self._wrap(kernel.pscale_mod(self.coeffs, c, k, self.ring.p))
        if c == 0:
            return LaurentPoly.zero(self.ring)
        return self._wrap(kernel.pscale(self.coeffs, c, k))

    def conjugate(self) -> "LaurentPoly":
        """The substitution t -> t^-1."""
        return self._wrap(kernel.pconj(self.coeffs))

    def eval_one(self):
        """Value at t = 1, in the coefficient ring."""
        s = sum(self.coeffs.values())
        return self.ring.coerce(s)

    def eval_at(self, x):
        """Exact value at a rational point x != 0."""
        x = Fraction(x)
        return sum(Fraction(c) * x**e for e, c in self.coeffs.items())

    # -- normal forms ------------------------------------------------------

    def normalize_unit(self) -> "LaurentPoly":
        """Canonical associate under ring units.

        Over Z: multiply by +-t^k so the lowest term has exponent 0 and a
        positive coefficient.  Over a field: exponent 0 and monic.
        """
        if not self.coeffs:
            return self
        v = self.valuation()
        if self.ring.kind == "Z":
            sign = 1 if self.coeffs[v] > 0 else -1
            return self.scaled(sign, -v)
        lead = self.coeffs[self.degree()]
        return self.scaled(_field_inv(lead, self.ring), -v)

    def content(self) -> int:
        """Positive gcd of the integer coefficients (ring Z only)."""
        if self.ring.kind != "Z":
            raise RingMismatchError("content needs ring Z")
        g = 0
        for c in self.coeffs.values():
            g = _gcd(g, c)
        return g

    def primitive(self) -> "LaurentPoly":
        c = self.content()
        if c <= 1:
            return self
        return LaurentPoly(self.ring, {e: v // c for e, v in self.coeffs.items()})

    def clear_to_int(self) -> "LaurentPoly":
        """Over Q: scale by the lcm of denominators and return over Z."""
        if self.ring.kind == "Z":
            return self
        if self.ring.kind != "Q":
            raise RingMismatchError("clear_to_int needs ring Q or Z")
        den = 1
        for c in self.coeffs.values():
            den = den * c.denominator // _gcd(den, c.denominator)
        return LaurentPoly(ZZ, {e: int(c * den) for e, c in self.coeffs.items()})

    def map_ring(self, ring: Ring) -> "LaurentPoly":
        """Push coefficients into another ring (Z -> Q lift, Z -> F_p reduction)."""
        return LaurentPoly(ring, dict(self.coeffs))

    # -- division ----------------------------------------------------------

    def divmod(self, d: "LaurentPoly"):
        """Euclidean division over a field: self = q*d + r, span(r) < span(d)."""
        self._check(d)
        if self.ring.kind == "Z":
            raise RingMismatchError("divmod needs field coefficients")
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = self
        q = LaurentPoly.zero(self.ring)
        dd, dv = d.degree(), d.valuation()
        dlead = d.coeffs[dd]
        dinv = _field_inv(dlead, self.ring)
        while not r.is_zero() and r.span() >= d.span():
            shift = r.degree() - dd
            c = r.leading_coeff() * dinv if self.ring.kind == "Q" else (r.leading_coeff() * dinv) % self.ring.p
            qterm = LaurentPoly.term(c, shift, self.ring)
            q = q + qterm
            r = r - qterm * d
        return q, r

    def divide_exact(self, d: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / d in the ring; raises if not exact."""
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if len(d.coeffs) == 1:
            e, c = next(iter(d.coeffs.items()))
            if self.ring.kind == "Fp":
                return self.scaled(_field_inv(c, self.ring), -e)
            out = {}
            for ee, cc in self.coeffs.items():
                if self.ring.kind == "Z" and cc % c != 0:
                    raise ExactDivisionError(f"{self} not divisible by {d}")
                out[ee - e] = cc // c if self.ring.kind == "Z" else cc / c
            return LaurentPoly(self.ring, out)
        if self.ring.kind == "Z":
            q, r = self.map_ring(QQ).divmod(d.map_ring(QQ))
            if not r.is_zero() or any(c.denominator != 1 for c in q.coeffs.values()):
                raise ExactDivisionError(f"{self} not divisible by {d}")
            return q.map_ring(ZZ)
        q, r = self.divmod(d)
        if not r.is_zero():
            raise ExactDivisionError(f"{self} not divisible by {d}")
        return q

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, tuple(sorted(self.coeffs.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.coeffs)

    # -- text and JSON forms -----------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            neg = (self.ring.kind != "Fp") and c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                tpart = "t" if e == 1 else f"t^{e}"
                body = tpart if mag == 1 else f"{mag}*{tpart}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    @staticmethod
    def from_text(text: str, ring: Ring = ZZ) -> "LaurentPoly":
        coeffs: dict = {}
        pos = 0
        text = text.strip()
        if text in ("", "0"):
            return LaurentPoly.zero(ring)
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if not m or m.end() == pos or (m.group("coeff") is None and m.group("t") is None):
                raise ParseError(f"bad polynomial syntax at {text[pos:]!r}")
            sign = -1 if m.group("sign") == "-" else 1
            if m.group("coeff") is not None:
                if ring.kind == "Q":
                    c = Fraction(m.group("coeff"))
                else:
                    if "/" in m.group("coeff"):
                        raise ParseError("fractional coefficient outside ring Q")
                    c = int(m.group("coeff"))
            else:
                c = 1
            if m.group("t"):
                e = int(m.group("exp")) if m.group("exp") is not None else 1
            else:
                e = 0
            coeffs[e] = coeffs.get(e, 0) + sign * c
            pos = m.end()
        return LaurentPoly(ring, coeffs)

    def to_json(self) -> list:
        return [[e, self.ring.coeff_str(self.coeffs[e])] for e in sorted(self.coeffs)]

    @staticmethod
    def from_json(data: list, ring: Ring = ZZ) -> "LaurentPoly":
        return LaurentPoly(ring, {int(e): ring.coeff_from_str(str(c)) for e, c in data})


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _field_inv(c, ring: Ring):
    if ring.kind == "Q":
        return Fraction(1) / c
    return pow(int(c), -1, ring.p)


def gcd_field_laurent(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic-normalized gcd over Q[t,t^-1] or F_p[t,t^-1]; gcd(0,0) = 0."""
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    if a.ring.kind == "Z":
        raise RingMismatchError("gcd needs field coefficients")
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.normalize_unit()


class LambdaMatrix:
    """Dense matrix of LaurentPoly entries sharing one ring tag."""

    __slots__ = ("rows", "cols", "ring", "entries")

    def __init__(self, ring: Ring, entries):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for x in row:
                if x.ring != ring:
                    raise RingMismatchError("entry ring differs from matrix ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(tuple(row) for row in entries))

    def __setattr__(self, *a):
        raise AttributeError("LambdaMatrix is immutable")

    @staticmethod
    def zeros(rows: int, cols: int, ring: Ring = ZZ) -> "LambdaMatrix":
        z = LaurentPoly.zero(ring)
        m = object.__new__(LambdaMatrix)
        object.__setattr__(m, "ring", ring)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", tuple(tuple(z for _ in range(cols)) for _ in range(rows)))
        return m

    @staticmethod
    def identity(n: int, ring: Ring = ZZ) -> "LambdaMatrix":
        one = LaurentPoly.one(ring)
        z = LaurentPoly.zero(ring)
        return LambdaMatrix(ring, [[one if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def from_int_rows(rows, ring: Ring = ZZ) -> "LambdaMatrix":
        return LambdaMatrix(
            ring, [[LaurentPoly.term(c, 0, ring) for c in row] for row in rows]
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, LambdaMatrix)
            and self.ring == other.ring
            and self.entries == other.entries
            and self.rows == other.rows
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(x.to_text() for x in row) for row in self.entries)
        return f"LambdaMatrix({self.rows}x{self.cols}: {body})"

    def __mul__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if self.ring != other.ring:
            raise RingMismatchError("matrix product over different rings")
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        if self.rows == 0 or other.cols == 0:
            return LambdaMatrix.zeros(self.rows, other.cols, self.ring)
        z = LaurentPoly.zero(self.ring)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LambdaMatrix(self.ring, out)

    def __add__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        if self.rows == 0:
            return self
        return LambdaMatrix(
            self.ring,
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __neg__(self) -> "LambdaMatrix":
        if self.rows == 0:
            return self
        return LambdaMatrix(self.ring, [[-x for x in row] for row in self.entries])

    def transpose(self) -> "LambdaMatrix":
        if self.rows == 0 or self.cols == 0:
            return LambdaMatrix.zeros(self.cols, self.rows, self.ring)
        return LambdaMatrix(
            self.ring,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def eval_at_one(self):
        """Entrywise t = 1; ring Z only.  Returns a plain int matrix."""
        if self.ring.kind != "Z":
            raise RingMismatchError("eval_at_one needs ring Z")
        return [[x.eval_one() for x in row] for row in self.entries]

    def map_ring(self, ring: Ring) -> "LambdaMatrix":
        if self.rows == 0:
            return LambdaMatrix.zeros(0, self.cols, ring)
        return LambdaMatrix(ring, [[x.map_ring(ring) for x in row] for row in self.entries])

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def column(self, j: int) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def delete_row(self, i: int) -> "LambdaMatrix":
        if not 0 <= i < self.rows:
            raise ValueError(f"row {i} out of range")
        kept = [list(row) for k, row in enumerate(self.entries) if k != i]
        if not kept:
            return LambdaMatrix.zeros(0, self.cols, self.ring)
        return LambdaMatrix(self.ring, kept)

    def hstack(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        if self.ring != other.ring:
            raise RingMismatchError("hstack over different rings")
        if self.rows == 0:
            return LambdaMatrix.zeros(0, self.cols + other.cols, self.ring)
        return LambdaMatrix(
            self.ring,
            [list(self.entries[i]) + list(other.entries[i]) for i in range(self.rows)],
        )

    @staticmethod
    def from_columns(rows: int, columns, ring: Ring = ZZ) -> "LambdaMatrix":
        if not columns:
            return LambdaMatrix.zeros(rows, 0, ring)
        for col in columns:
            if len(col) != rows:
                raise ValueError("column length mismatch")
        return LambdaMatrix(ring, [[col[i] for col in columns] for i in range(rows)])

    @staticmethod
    def block_diag(blocks, ring: Ring = ZZ) -> "LambdaMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        z = LaurentPoly.zero(ring)
        out = [[z] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            if b.ring != ring:
                raise RingMismatchError("block ring differs")
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b.entries[i][j]
            r0 += b.rows
            c0 += b.cols
        if rows == 0:
            return LambdaMatrix.zeros(0, cols, ring)
        return LambdaMatrix(ring, out)

    # -- JSON: {"gens": g, "relations": [[poly, ...], ...]} column-major ----

    def to_json(self) -> dict:
        return {
            "gens": self.rows,
            "relations": [
                [self.entries[i][j].to_text() for i in range(self.rows)]
                for j in range(self.cols)
            ],
        }

    @staticmethod
    def from_json(data: dict, ring: Ring = ZZ) -> "LambdaMatrix":
        g = int(data["gens"])
        cols = data.get("relations", [])
        parsed = []
        for col in cols:
            if len(col) != g:
                raise ParseError("relation column length differs from generator count")
            parsed.append([LaurentPoly.from_text(s, ring) for s in col])
        return LambdaMatrix.from_columns(g, parsed, ring)
