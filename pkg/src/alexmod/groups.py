"""Weighted group presentations, Fox Jacobians, module extraction.

Presentations here are conjugation-type: every generator has weight 1 and
every relator has weight 0.  The first module of such a presentation is the
cokernel of the Fox Jacobian with one generator row deleted.
"""

from __future__ import annotations

import re

from alexmod.errors import ParseError, ValidationError
from alexmod.laurent import LambdaMatrix, ZZ
from alexmod.modules import PresentedModule
from alexmod.words import Word


class GroupPresentation:
    """Finite presentation with weight map gamma(x_i) = 1 for every i."""

    __slots__ = ("ngens", "relators")

    def __init__(self, ngens: int, relators=()):
        relators = tuple(Word(r.letters) for r in relators)
        if ngens < 1:
            raise ValidationError("a presentation needs at least one generator")
        for r in relators:
            if r.letters and r.max_generator() >= ngens:
                raise ValidationError(
                    f"relator {r.to_text()} uses generator {r.max_generator()} of {ngens}"
                )
            if r.gamma() != 0:
                raise ValidationError(
                    f"relator {r.to_text()} has weight {r.gamma()}; this toolkit "
                    "only handles weight-0 relators"
                )
        object.__setattr__(self, "ngens", ngens)
        object.__setattr__(self, "relators", relators)

    def __setattr__(self, *a):
        raise AttributeError("GroupPresentation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GroupPresentation)
            and self.ngens == other.ngens
            and self.relators == other.relators
        )

    def __hash__(self):
        return hash((self.ngens, self.relators))

    def __repr__(self):
        rels = ", ".join(r.to_text() for r in self.relators)
        return f"GroupPresentation(<x0..x{self.ngens - 1} | {rels}>)"

    # -- text form: "gens: 3; rel: x1 x2 x1^-1 x0^-1; rel: ..." -------------

    def to_text(self) -> str:
        parts = [f"gens: {self.ngens}"]
        parts.extend(f"rel: {r.to_text()}" for r in self.relators)
        return "; ".join(parts)

    @staticmethod
    def from_text(text: str) -> "GroupPresentation":
        ngens = None
        relators = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            m = re.match(r"gens:\s*(\d+)$", chunk)
            if m:
                ngens = int(m.group(1))
                continue
            m = re.match(r"rel:\s*(.*)$", chunk)
            if m:
                relators.append(Word.from_text(m.group(1)))
                continue
            raise ParseError(f"bad presentation chunk {chunk!r}")
        if ngens is None:
            raise ParseError("missing 'gens:' declaration")
        return GroupPresentation(ngens, relators)

    def to_json(self) -> dict:
        return {"gens": self.ngens, "relators": [r.to_json() for r in self.relators]}

    @staticmethod
    def from_json(data: dict) -> "GroupPresentation":
        return GroupPresentation(
            int(data["gens"]), [Word.from_json(r) for r in data.get("relators", [])]
        )


def jacobian(G: GroupPresentation) -> LambdaMatrix:
    """Fox Jacobian: entry (i, j) is the weighted derivative of relator j by x_i."""
    cols = [r.fox_row(G.ngens) for r in G.relators]
    return LambdaMatrix.from_columns(G.ngens, cols, ZZ)


def alexander_module(G: GroupPresentation, drop: int = 0) -> PresentedModule:
    """First module of the presentation: Jacobian with generator row `drop` deleted."""
    if not 0 <= drop < G.ngens:
        raise ValidationError(f"drop index {drop} out of range")
    jac = jacobian(G)
    return PresentedModule(G.ngens - 1, jac.delete_row(drop))


def abelianization_rank(G: GroupPresentation) -> int:
    """Rank of G/[G,G] (these presentations always produce free abelianizations)."""
    from alexmod.snf import smith_int

    if not G.relators:
        return G.ngens
    cols = [[p.eval_one() for p in r.fox_row(G.ngens)] for r in G.relators]
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(G.ngens)]
    return G.ngens - smith_int(mat).rank
