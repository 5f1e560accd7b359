"""Seeded random inputs for the selftest subcommand and the test suite.

Everything is driven by an explicit random.Random so identical seeds give
identical streams across runs and platforms.
"""

from __future__ import annotations

from random import Random

from alexmod.diagrams import GaussCode, Pass
from alexmod.laurent import LambdaMatrix, LaurentPoly, ZZ
from alexmod.modules import PresentedModule, is_cokernel_free
from alexmod.words import Word


def random_letters(rng: Random, ngens: int = 6, maxlen: int = 40) -> list[tuple[int, int]]:
    """Unreduced letter list; Word() reduces it on construction."""
    n = rng.randint(0, maxlen)
    return [(rng.randrange(ngens), rng.choice((1, -1))) for _ in range(n)]


def random_word(rng: Random, ngens: int = 6, maxlen: int = 40) -> Word:
    return Word(random_letters(rng, ngens, maxlen))


def random_gauss_code(rng: Random, max_crossings: int = 6, max_components: int = 3) -> GaussCode:
    """Uniformly scatter O/U pass pairs over circular components; the result
    is always a valid code (each crossing once over, once under, same sign)."""
    ncross = rng.randint(0, max_crossings)
    ncomp = rng.randint(1, max_components)
    tokens = []
    for cid in range(1, ncross + 1):
        sign = rng.choice((1, -1))
        tokens.append(Pass(cid, True, sign))
        tokens.append(Pass(cid, False, sign))
    rng.shuffle(tokens)
    comps: list[list[Pass]] = [[] for _ in range(ncomp)]
    for tok in tokens:
        comps[rng.randrange(ncomp)].append(tok)
    return GaussCode(comps)


def random_laurent(rng: Random, max_span: int = 3, max_coeff: int = 3) -> LaurentPoly:
    lo = rng.randint(-2, 1)
    coeffs = {}
    for e in range(lo, lo + max_span + 1):
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            coeffs[e] = c
    return LaurentPoly(ZZ, coeffs)


def random_cokernel_free_matrix(rng: Random, max_rows: int = 3, max_cols: int = 4,
                                max_span: int = 3, max_coeff: int = 3) -> LambdaMatrix:
    """Rejection-sample small matrices until the t=1 cokernel is free."""
    while True:
        rows = rng.randint(1, max_rows)
        cols = rng.randint(0, max_cols)
        mat = LambdaMatrix(
            ZZ,
            [[random_laurent(rng, max_span, max_coeff) for _ in range(cols)] for _ in range(rows)],
        ) if cols else LambdaMatrix.zeros(rows, 0, ZZ)
        if is_cokernel_free(PresentedModule(rows, mat)):
            return mat
