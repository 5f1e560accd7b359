"""The compiled kernel must agree with the pure kernel on everything."""

import random

import pytest

from alexmod import _purekernel

speedups = pytest.importorskip("alexmod._speedups")


def random_poly(rng):
    return {rng.randint(-8, 8): rng.randint(-50, 50) or 1 for _ in range(rng.randint(0, 10))}


def random_vec(rng):
    return {
        (rng.randrange(5), rng.randint(0, 9)): rng.randint(-9, 9) or 1
        for _ in range(rng.randint(0, 12))
    }


def test_poly_ops_agree():
    rng = random.Random(7)
    for _ in range(300):
        a, b = random_poly(rng), random_poly(rng)
        assert speedups.padd(a, b) == _purekernel.padd(a, b)
        assert speedups.psub(a, b) == _purekernel.psub(a, b)
        assert speedups.pneg(a) == _purekernel.pneg(a)
        assert speedups.pmul(a, b) == _purekernel.pmul(a, b)
        assert speedups.pconj(a) == _purekernel.pconj(a)
        c, k = rng.randint(-5, 5), rng.randint(-3, 3)
        assert speedups.pscale(a, c, k) == _purekernel.pscale(a, c, k)


def test_modular_ops_agree():
    rng = random.Random(11)
    for p in (2, 3, 5, 13):
        for _ in range(100):
            a = {e: c % p for e, c in random_poly(rng).items() if c % p}
            b = {e: c % p for e, c in random_poly(rng).items() if c % p}
            assert speedups.padd_mod(a, b, p) == _purekernel.padd_mod(a, b, p)
            assert speedups.pmul_mod(a, b, p) == _purekernel.pmul_mod(a, b, p)
            c, k = rng.randint(-5, 5), rng.randint(-3, 3)
            assert speedups.pscale_mod(a, c, k, p) == _purekernel.pscale_mod(a, c, k, p)


def test_vector_ops_agree():
    rng = random.Random(13)
    for _ in range(300):
        a, b = random_vec(rng), random_vec(rng)
        c, k = rng.randint(-5, 5) or 1, rng.randint(0, 4)
        assert speedups.vadd_scaled(a, b, c, k) == _purekernel.vadd_scaled(a, b, c, k)
        assert speedups.vscale(a, c, k) == _purekernel.vscale(a, c, k)


def test_no_zero_coefficients_stored():
    a = {0: 1, 1: 2}
    b = {0: -1, 1: -2}
    for k in (speedups, _purekernel):
        assert k.padd(a, b) == {}
        assert k.pmul(a, {}) == {}
