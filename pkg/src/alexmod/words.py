"""Reduced words in a free group and the weighted Fox derivative.

Every generator has weight 1; gamma(w) is the exponent sum.  The composite
derivative used throughout sends a word to an integer Laurent polynomial by
the recursion d(uv) = d(u) + t^gamma(u) * d(v), with d(x_i)/d(x_j) = delta
and d(x_i^-1)/d(x_j) = -delta * t^-1.
"""

from __future__ import annotations

import re

from alexmod.laurent import LaurentPoly, ZZ
from alexmod.errors import ParseError

_LETTER_RE = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


class Word:
    """Freely reduced word; letters are (generator index, exponent +-1)."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        stack: list[tuple[int, int]] = []
        for gen, exp in letters:
            if exp not in (1, -1):
                # split powers into unit letters
                if exp == 0:
                    continue
                sign = 1 if exp > 0 else -1
                for _ in range(abs(exp)):
                    self._push(stack, int(gen), sign)
                continue
            self._push(stack, int(gen), exp)
        object.__setattr__(self, "letters", tuple(stack))

    @staticmethod
    def _push(stack, gen, exp):
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def gen(i: int, exp: int = 1) -> "Word":
        return Word([(i, exp)])

    @staticmethod
    def from_text(text: str) -> "Word":
        letters = []
        for tok in text.split():
            m = _LETTER_RE.match(tok)
            if not m:
                raise ParseError(f"bad word letter {tok!r}")
            letters.append((int(m.group(1)), int(m.group(2) or 1)))
        return Word(letters)

    @staticmethod
    def from_json(data) -> "Word":
        return Word([(int(g), int(e)) for g, e in data])

    # -- queries --------------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({self.to_text()!r})"

    def max_generator(self) -> int:
        """Largest generator index used; -1 for the empty word."""
        return max((g for g, _ in self.letters), default=-1)

    # -- group operations ------------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word([(g, -e) for g, e in reversed(self.letters)])

    def gamma(self) -> int:
        """Total weight: the exponent sum."""
        return sum(e for _, e in self.letters)

    # -- Fox calculus ------------------------------------------------------------

    def fox_derivative(self, i: int) -> LaurentPoly:
        """Weighted Fox derivative with respect to generator i, in Z[t,t^-1]."""
        coeffs: dict[int, int] = {}
        prefix = 0
        for g, e in self.letters:
            if e == 1:
                if g == i:
                    coeffs[prefix] = coeffs.get(prefix, 0) + 1
                prefix += 1
            else:
                prefix -= 1
                if g == i:
                    coeffs[prefix] = coeffs.get(prefix, 0) - 1
        return LaurentPoly(ZZ, coeffs)

    def fox_row(self, n: int) -> list[LaurentPoly]:
        """All n Fox derivatives at once; generator indices must be < n."""
        if self.letters and self.max_generator() >= n:
            raise IndexError(
                f"word uses generator {self.max_generator()} but only {n} are declared"
            )
        rows: list[dict[int, int]] = [dict() for _ in range(n)]
        prefix = 0
        for g, e in self.letters:
            if e == 1:
                c = rows[g]
                c[prefix] = c.get(prefix, 0) + 1
                prefix += 1
            else:
                prefix -= 1
                c = rows[g]
                c[prefix] = c.get(prefix, 0) - 1
        return [LaurentPoly(ZZ, c) for c in rows]

    # -- text and JSON forms ----------------------------------------------------

    def to_text(self) -> str:
        return " ".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in self.letters)

    def to_json(self) -> list:
        return [[g, e] for g, e in self.letters]


def reduce_word(w: Word) -> Word:
    """Free reduction; Words are reduced on construction, so this is identity."""
    return Word(w.letters)


def conjugate_word(w: Word, by: Word) -> Word:
    return by * w * by.inverse()
