"""Virtual-link diagrams as Gauss codes, disk-arc presentations, Satoh map.

A Gauss code records only the real crossings (virtual crossings change
nothing group-theoretic and are represented by absence).  Disk-arc
presentations are the combinatorial form of ribbon surface-links: oriented
disks plus arcs whose interiors pierce disk interiors transversely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from alexmod.errors import ParseError, ValidationError
from alexmod.groups import GroupPresentation
from alexmod.words import Word

_PASS_RE = re.compile(r"([OU])(\d+)([+-])$")


@dataclass(frozen=True)
class Pass:
    crossing: int
    over: bool
    sign: int


class GaussCode:
    """Signed Gauss code: circular pass sequences, one per link component."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(tuple(p for p in comp) for comp in components)
        if len(comps) < 1:
            raise ValidationError("a diagram needs at least one component")
        seen: dict[int, list[Pass]] = {}
        for comp in comps:
            for p in comp:
                seen.setdefault(p.crossing, []).append(p)
        for cid, passes in sorted(seen.items()):
            if len(passes) != 2:
                raise ValidationError(f"crossing {cid} appears {len(passes)} times, need 2")
            a, b = passes
            if a.over == b.over:
                role = "over" if a.over else "under"
                raise ValidationError(f"crossing {cid} has two {role} passes")
            if a.sign != b.sign:
                raise ValidationError(f"crossing {cid} has mismatched signs")
        object.__setattr__(self, "components", comps)

    def __setattr__(self, *a):
        raise AttributeError("GaussCode is immutable")

    def __eq__(self, other):
        return isinstance(other, GaussCode) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"GaussCode({self.to_text()!r})"

    @property
    def ncomponents(self) -> int:
        return len(self.components)

    def crossings(self) -> list[int]:
        return sorted({p.crossing for comp in self.components for p in comp})

    def to_text(self) -> str:
        return ", ".join(
            " ".join(
                f"{'O' if p.over else 'U'}{p.crossing}{'+' if p.sign > 0 else '-'}"
                for p in comp
            )
            for comp in self.components
        )

    def to_json(self) -> dict:
        return {
            "components": [
                [[p.crossing, "O" if p.over else "U", p.sign] for p in comp]
                for comp in self.components
            ]
        }

    @staticmethod
    def from_json(data: dict) -> "GaussCode":
        return GaussCode(
            [
                [Pass(int(c), role == "O", int(s)) for c, role, s in comp]
                for comp in data["components"]
            ]
        )


def parse_gauss_code(text: str) -> GaussCode:
    """Parse the grammar ([OU]<id>[+-])+ with ',' separating components."""
    components = []
    for chunk in text.split(","):
        passes = []
        for tok in chunk.split():
            m = _PASS_RE.match(tok)
            if not m:
                raise ParseError(f"bad Gauss-code token {tok!r}")
            passes.append(Pass(int(m.group(2)), m.group(1) == "O", 1 if m.group(3) == "+" else -1))
        components.append(passes)
    return GaussCode(components)


@dataclass(frozen=True)
class Arc:
    """Arc of a disk-arc presentation: endpoints on disk boundaries, with the
    ordered sequence of signed interior intersections along the arc."""

    start: int
    end: int
    through: tuple

    def word(self) -> Word:
        return Word([(disk, sign) for disk, sign in self.through])


class DiskArcPresentation:
    """Oriented disks plus arcs; the combinatorial ribbon surface-link."""

    __slots__ = ("ndisks", "arcs")

    def __init__(self, ndisks: int, arcs=()):
        arcs = tuple(arcs)
        if ndisks < 1:
            raise ValidationError("a disk-arc presentation needs at least one disk")
        for a in arcs:
            if not (0 <= a.start < ndisks and 0 <= a.end < ndisks):
                raise ValidationError(f"arc endpoints {a.start}->{a.end} out of range")
            for disk, sign in a.through:
                if not 0 <= disk < ndisks:
                    raise ValidationError(f"arc pierces unknown disk {disk}")
                if sign not in (1, -1):
                    raise ValidationError("intersection signs are +-1")
        object.__setattr__(self, "ndisks", ndisks)
        object.__setattr__(self, "arcs", arcs)

    def __setattr__(self, *a):
        raise AttributeError("DiskArcPresentation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, DiskArcPresentation)
            and self.ndisks == other.ndisks
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.ndisks, self.arcs))

    def __repr__(self):
        return f"DiskArcPresentation(disks={self.ndisks}, arcs={len(self.arcs)})"

    # -- surface bookkeeping -------------------------------------------------

    def surface_components(self) -> list[list[int]]:
        """Connected components of the surface: disks joined by arc endpoints."""
        parent = list(range(self.ndisks))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arcs:
            ra, rb = find(a.start), find(a.end)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for d in range(self.ndisks):
            groups.setdefault(find(d), []).append(d)
        return [groups[r] for r in sorted(groups)]

    def genus_partition(self) -> list[int]:
        """Genus of each surface component: arcs minus disks plus one, per
        component (1-handle surgery adds a handle exactly when it does not
        join two different components)."""
        comps = self.surface_components()
        index = {}
        for ci, disks in enumerate(comps):
            for d in disks:
                index[d] = ci
        arc_count = [0] * len(comps)
        for a in self.arcs:
            arc_count[index[a.start]] += 1
        return [arc_count[ci] - len(disks) + 1 for ci, disks in enumerate(comps)]

    def total_genus(self) -> int:
        return sum(self.genus_partition())

    # -- JSON: {"disks": N, "arcs": [{"from": a, "to": b, "through": [[d, s]...]}]}

    def to_json(self) -> dict:
        return {
            "disks": self.ndisks,
            "arcs": [
                {"from": a.start, "to": a.end, "through": [[d, s] for d, s in a.through]}
                for a in self.arcs
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "DiskArcPresentation":
        arcs = [
            Arc(int(a["from"]), int(a["to"]), tuple((int(d), int(s)) for d, s in a["through"]))
            for a in data.get("arcs", [])
        ]
        return DiskArcPresentation(int(data["disks"]), arcs)


# ---------------------------------------------------------------------------
# Wirtinger presentations
# ---------------------------------------------------------------------------


def _diagram_generators(code: GaussCode):
    """Assign one generator per arc between consecutive under-passes.

    Returns (ngens, over_gen, in_gen, out_gen) where the three maps send a
    crossing id to the generator of its over strand, its incoming under
    strand, and its outgoing under strand.
    """
    over_gen: dict[int, int] = {}
    in_gen: dict[int, int] = {}
    out_gen: dict[int, int] = {}
    gen_of_position: list[dict[int, int]] = []
    next_gen = 0
    for comp in code.components:
        under_positions = [k for k, p in enumerate(comp) if not p.over]
        posmap: dict[int, int] = {}
        if not under_positions:
            # under-pass-free component: a single free generator
            for k in range(len(comp)):
                posmap[k] = next_gen
            gen_of_position.append(posmap)
            next_gen += 1
            continue
        # arc j ends at under_positions[j]; positions after the previous
        # under-pass (cyclically) up to and including it belong to arc j
        arc_gen = {}
        for j, _ in enumerate(under_positions):
            arc_gen[j] = next_gen
            next_gen += 1
        L = len(comp)
        for j, u in enumerate(under_positions):
            prev_u = under_positions[j - 1]
            k = (prev_u + 1) % L
            while True:
                posmap[k] = arc_gen[j]
                if k == u:
                    break
                k = (k + 1) % L
        for j, u in enumerate(under_positions):
            p = comp[u]
            in_gen[p.crossing] = arc_gen[j]
            out_gen[p.crossing] = arc_gen[(j + 1) % len(under_positions)]
        gen_of_position.append(posmap)
    for ci, comp in enumerate(code.components):
        for k, p in enumerate(comp):
            if p.over:
                over_gen[p.crossing] = gen_of_position[ci][k]
    return next_gen, over_gen, in_gen, out_gen


def wirtinger_from_diagram(code: GaussCode) -> GroupPresentation:
    """Wirtinger presentation of the diagram group.

    Crossing with sign s, over strand a, incoming under c, outgoing under b
    imposes b = a^-s c a^s; the relator is emitted as x_a^-s x_c x_a^s x_b^-1.
    """
    ngens, over_gen, in_gen, out_gen = _diagram_generators(code)
    relators = []
    for cid in code.crossings():
        a = over_gen[cid]
        c = in_gen[cid]
        b = out_gen[cid]
        s = next(
            p.sign for comp in code.components for p in comp if p.crossing == cid
        )
        relators.append(
            Word([(a, -s), (c, 1), (a, s), (b, -1)])
        )
    return GroupPresentation(ngens, relators)


def wirtinger_from_diskarc(d: DiskArcPresentation) -> GroupPresentation:
    """Wirtinger presentation of a disk-arc presented surface-link.

    One generator per disk; an arc from disk a to disk b traversing the word
    w of its intersections contributes the relator w^-1 x_a w x_b^-1.
    """
    relators = []
    for a in d.arcs:
        w = a.word()
        relators.append(w.inverse() * Word.gen(a.start) * w * Word.gen(a.end, -1))
    return GroupPresentation(max(d.ndisks, 1), relators)


def satoh_map(code: GaussCode) -> DiskArcPresentation:
    """Disk-arc presentation with the same Wirtinger presentation as the code.

    One disk per Wirtinger generator; each crossing contributes an arc from
    the incoming-under disk to the outgoing-under disk piercing the over
    disk once with the crossing sign.  Components with at least one crossing
    acquire genus one, matching the torus components of the geometric map.
    """
    ngens, over_gen, in_gen, out_gen = _diagram_generators(code)
    arcs = []
    for cid in code.crossings():
        s = next(p.sign for comp in code.components for p in comp if p.crossing == cid)
        arcs.append(Arc(in_gen[cid], out_gen[cid], ((over_gen[cid], s),)))
    return DiskArcPresentation(max(ngens, 1), arcs)
