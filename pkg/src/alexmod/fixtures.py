"""Named fixtures: diagrams, presentations and matrices used by the CLI
selftest and the test suite.

The two searched codes were found by exhaustive enumeration of small signed
Gauss codes and verified through the full invariant battery; they are frozen
here so every run sees identical inputs.
"""

from alexmod.diagrams import Arc, DiskArcPresentation, parse_gauss_code
from alexmod.groups import GroupPresentation
from alexmod.laurent import LambdaMatrix, LaurentPoly, ZZ
from alexmod.modules import PresentedModule, direct_sum
from alexmod.words import Word

_P = LaurentPoly.from_text

# classical knots
TREFOIL_CODE = "O1+ U2+ O3+ U1+ O2+ U3+"
FIGURE_EIGHT_CODE = "O1+ U2- O3- U1+ O4+ U3- O2- U4+"

# one-crossing kink (classically trivial) and trivial multi-component codes
KINK_CODE = "O1+ U1+"
UNKNOT_CODE = ""
TRIVIAL_2LINK_CODE = ","

# 4-crossing 2-component virtual link whose module is Λ/((t-1)^2, 2(t-1));
# its maximal finite submodule has order 2, so it is not any classical 2-link
NONCLASSICAL_2LINK_CODE = "O1+ U2+ O3+ U4-, U1+ O2+ U3+ O4-"


def trefoil():
    return parse_gauss_code(TREFOIL_CODE)


def figure_eight():
    return parse_gauss_code(FIGURE_EIGHT_CODE)


def nonclassical_2link():
    return parse_gauss_code(NONCLASSICAL_2LINK_CODE)


def hopf_presentation() -> GroupPresentation:
    """<a, b | a b a^-1 b^-1>: commuting weight-one generators."""
    return GroupPresentation(2, [Word([(0, 1), (1, 1), (0, -1), (1, -1)])])


def torus_pair_presentation() -> GroupPresentation:
    """Two generators, each conjugated by a word in the other; the module is
    Λ/((t-1)^2, 2(t-1)).  Tietze-reduced form of the nonclassical 2-link."""
    w1 = Word([(1, 1), (0, -1), (1, -1)])  # y x^-1 y^-1
    w2 = Word([(0, -1), (1, 1), (0, -1)])  # x^-1 y x^-1
    x, y = Word.gen(0), Word.gen(1)
    r1 = x * w1 * x.inverse() * w1.inverse()
    r2 = y * w2 * y.inverse() * w2.inverse()
    return GroupPresentation(2, [r1, r2])


def torus_pair_diskarc() -> DiskArcPresentation:
    """Two disks, two arcs, each arc looping at its own disk through the
    conjugating words of torus_pair_presentation: a ribbon 2-component link
    of total genus 2."""
    return DiskArcPresentation(
        2,
        [
            Arc(0, 0, ((1, 1), (0, -1), (1, -1))),
            Arc(1, 1, ((0, -1), (1, 1), (0, -1))),
        ],
    )


# matrix fixtures
def matrix_t_plus_1_3() -> LambdaMatrix:
    return LambdaMatrix(ZZ, [[_P("t + 1"), _P("3")]])


def matrix_2t_minus_1_5() -> LambdaMatrix:
    return LambdaMatrix(ZZ, [[_P("2*t - 1"), _P("5")]])


def matrix_tm1_squared() -> LambdaMatrix:
    return LambdaMatrix(ZZ, [[_P("t^2 - 2*t + 1"), _P("2*t - 2")]])


def module_t_plus_1_3() -> PresentedModule:
    return PresentedModule.cyclic(_P("t + 1"), _P("3"))


def module_2t_minus_1_5() -> PresentedModule:
    return PresentedModule.cyclic(_P("2*t - 1"), _P("5"))


def module_tm1_squared() -> PresentedModule:
    return PresentedModule.cyclic(_P("t^2 - 2*t + 1"), _P("2*t - 2"))


def witness_family(n: int, r: int, k: int = 5) -> PresentedModule:
    """Λ^{r-1} + (Λ/(2t-1, k))^n: the family separating consecutive genus
    classes (the bound e(E^2)/2 is attained only in halves on it)."""
    summands = [PresentedModule.free(r - 1)]
    summands += [
        PresentedModule.cyclic(_P(f"2*t - 1"), _P(str(k))) for _ in range(n)
    ]
    return direct_sum(*summands)
