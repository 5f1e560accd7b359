"""Laurent arithmetic: spec examples, ring axioms, normal forms, text/JSON."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from alexmod.errors import ExactDivisionError, ParseError, RingMismatchError
from alexmod.laurent import GF, LambdaMatrix, LaurentPoly, QQ, ZZ, gcd_field_laurent
from oracles import naive_poly_mul, unit_orbit_canonical

P = LaurentPoly.from_text


def coeffs_strategy():
    return st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6)


def poly_strategy():
    return coeffs_strategy().map(lambda d: LaurentPoly(ZZ, d))


def test_binomial_square():
    assert P("t - 1") * P("t - 1") == P("t^2 - 2*t + 1")


def test_additive_inverse():
    assert (P("t + 1") + P("-t - 1")).is_zero()


def test_hand_multiplication():
    a, b = P("2*t - 1"), P("t^-1")
    expected = LaurentPoly(ZZ, naive_poly_mul(a.coeffs, b.coeffs))
    assert a * b == expected == P("2 - t^-1")


def test_ring_mismatch_raises():
    with pytest.raises(RingMismatchError):
        P("t") + LaurentPoly.from_text("t", QQ)


@settings(max_examples=150, deadline=None)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert LaurentPoly(ZZ, naive_poly_mul(a.coeffs, b.coeffs)) == a * b


@settings(max_examples=100, deadline=None)
@given(poly_strategy())
def test_conjugate_involution(a):
    assert a.conjugate().conjugate() == a


@settings(max_examples=100, deadline=None)
@given(poly_strategy())
def test_normalize_unit_idempotent_and_canonical(a):
    n = a.normalize_unit()
    assert n.normalize_unit() == n
    if not a.is_zero():
        assert n == unit_orbit_canonical(a)
        assert n.valuation() == 0 and n.coeffs[0] > 0


def test_normalize_unit_examples():
    # -t^3 + t^2 and t^-1 - 1 lie in the same unit orbit; the canonical
    # representative has valuation 0 and positive constant term
    assert P("-t^3 + t^2").normalize_unit() == P("1 - t")
    assert P("t^-1 - 1").normalize_unit() == P("1 - t")
    assert P("5").normalize_unit() == P("5")


def test_is_unit():
    assert P("t^3").is_unit()
    assert P("-t^-2").is_unit()
    assert not P("2*t").is_unit()
    assert not P("t + 1").is_unit()
    assert LaurentPoly.from_text("3*t", GF(5)).is_unit()


def test_exact_division():
    q = P("t^2 - 2*t + 1").divide_exact(P("t - 1"))
    assert q == P("t - 1")
    with pytest.raises(ExactDivisionError):
        P("t^2 + 1").divide_exact(P("t - 1"))
    with pytest.raises(ExactDivisionError):
        P("3*t - 3").divide_exact(P("2"))
    assert P("2*t - 2").divide_exact(P("-t")) == P("2*t^-1 - 2")


def test_field_divmod():
    a = LaurentPoly.from_text("t^2 - 1", QQ)
    b = LaurentPoly.from_text("2*t - 2", QQ)
    q, r = a.divmod(b)
    assert r.is_zero()
    assert q * b == a
    f3 = GF(3)
    a3 = LaurentPoly.from_text("t^2 + 1", f3)
    q3, r3 = a3.divmod(LaurentPoly.from_text("t + 1", f3))
    assert q3 * LaurentPoly.from_text("t + 1", f3) + r3 == a3


def test_gcd_field_laurent():
    a = LaurentPoly.from_text("t^2 - 2*t + 1", QQ)
    b = LaurentPoly.from_text("2*t - 2", QQ)
    assert gcd_field_laurent(a, b) == LaurentPoly.from_text("t - 1", QQ)
    f3 = GF(3)
    c = LaurentPoly.from_text("t + 1", f3)
    assert gcd_field_laurent(c, c) == c
    assert gcd_field_laurent(a, LaurentPoly.zero(QQ)) == a.normalize_unit()
    zero = LaurentPoly.zero(QQ)
    assert gcd_field_laurent(zero, zero).is_zero()


def test_pow_and_inverse_units():
    t = LaurentPoly.t(ZZ)
    assert t ** 3 == P("t^3")
    assert t ** -2 == P("t^-2")
    assert (P("-t") ** -1) == P("-t^-1")
    with pytest.raises(ValueError):
        P("t + 1") ** -1


def test_text_round_trip():
    for s in ("0", "t^2 - t + 1", "-1 + 2*t^-1", "7", "-t", "3*t^5 - 2*t^-3"):
        assert P(s).to_text() == P(P(s).to_text()).to_text()
    assert P("t^2-t+1") == P("t^2 - t + 1")
    with pytest.raises(ParseError):
        P("t^^2")
    with pytest.raises(ParseError):
        P("3/4*t")  # fraction outside ring Q
    assert LaurentPoly.from_text("3/4*t", QQ).coeffs[1] == Fraction(3, 4)


def test_json_round_trip():
    p = P("2*t^-1 - 1")
    assert LaurentPoly.from_json(p.to_json(), ZZ) == p
    q = LaurentPoly.from_text("3/4*t^2 - 1/2", QQ)
    assert LaurentPoly.from_json(q.to_json(), QQ) == q


def test_eval_one_matrix_and_multiplicativity():
    A = LambdaMatrix(ZZ, [[P("t^2 - 2*t + 1"), P("2*t - 2")]])
    assert A.eval_at_one() == [[0, 0]]
    B = LambdaMatrix(ZZ, [[P("t + 1"), P("0")], [P("2*t - 1"), P("t")]])
    C = LambdaMatrix(ZZ, [[P("t - 1"), P("1")], [P("t^-1"), P("2")]])
    lhs = (B * C).eval_at_one()
    from alexmod.snf import int_mat_mul

    assert lhs == int_mat_mul(B.eval_at_one(), C.eval_at_one())


def test_matrix_json_round_trip():
    A = LambdaMatrix(ZZ, [[P("t + 1"), P("3")], [P("0"), P("t^-1 - 2")]])
    assert LambdaMatrix.from_json(A.to_json(), ZZ) == A


def test_fp_arithmetic_reduces():
    f2 = GF(2)
    a = LaurentPoly.from_text("t + 1", f2)
    assert (a * a) == LaurentPoly.from_text("t^2 + 1", f2)
    assert (a + a).is_zero()


def test_gf_rejects_composites():
    with pytest.raises(ValueError):
        GF(6)
