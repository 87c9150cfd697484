"""Rainbow geometrization: glue squares along consecutive-color bicolor cycles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .graph import Cliffordinkra, GraphError, bicolor_cycles


class Rainbow:
    """A cyclic order of the colors 1..n, equal up to rotation and reflection."""

    __slots__ = ("order",)

    def __init__(self, order: Sequence[int]):
        order = tuple(int(c) for c in order)
        if sorted(order) != list(range(1, len(order) + 1)):
            raise ValueError(f"rainbow must be a permutation of 1..{len(order)}: {order}")
        self.order = order

    @classmethod
    def parse(cls, text: str) -> "Rainbow":
        return cls([int(t) for t in text.replace(",", " ").split()])

    @classmethod
    def standard(cls, n: int) -> "Rainbow":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.order)

    def canonical(self) -> Tuple[int, ...]:
        o = self.order
        variants = []
        for seq in (o, o[::-1]):
            for k in range(len(seq)):
                variants.append(seq[k:] + seq[:k])
        return min(variants)

    def adjacent_pairs(self) -> set:
        o = self.order
        return {frozenset((o[k], o[(k + 1) % len(o)])) for k in range(len(o))}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rainbow):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"Rainbow({list(self.order)})"


@dataclass(frozen=True)
class SurfaceStats:
    V: int
    E: int
    F: int
    euler: int
    genus: int
    faces: Tuple[Tuple[int, int, Tuple[int, ...]], ...] = ()

    def record(self) -> str:
        return f"V={self.V} E={self.E} F={self.F} chi={self.euler} genus={self.genus}"

    def to_dict(self, with_faces: bool = False) -> dict:
        d = {"V": self.V, "E": self.E, "F": self.F, "euler": self.euler, "genus": self.genus}
        if with_faces:
            d["faces"] = [{"colors": [i, j], "cycle": list(c)} for i, j, c in self.faces]
        return d


def geometrize(g: Cliffordinkra, rainbow) -> SurfaceStats:
    if not isinstance(rainbow, Rainbow):
        rainbow = Rainbow(rainbow)
    if rainbow.n != g.n:
        raise ValueError(f"rainbow has {rainbow.n} colors, graph has {g.n}")
    if g.n < 3:
        raise ValueError("geometrization needs at least 3 colors to close a surface")
    if not g.is_connected():
        raise GraphError("geometrization needs a connected graph")
    pairs = rainbow.adjacent_pairs()
    faces = [(i + 1, j + 1, cyc) for i, j, cyc in bicolor_cycles(g)
             if frozenset((i + 1, j + 1)) in pairs]
    incidence: Counter = Counter()
    for i, j, (v0, v1, v2, v3) in faces:
        for c, v in ((i, v0), (j, v1), (i, v2), (j, v3)):
            w = g.partner[c - 1][v]
            incidence[(c, min(v, w))] += 1
    edges = g.edges()
    for e in edges:
        if incidence[(e.color, e.u)] != 2:
            raise GraphError(f"edge {e} lies on {incidence[(e.color, e.u)]} faces, "
                             f"so the glued complex is not a closed surface")
    V, E, F = g.num_vertices, len(edges), len(faces)
    chi = V - E + F
    if chi % 2:
        raise GraphError(f"odd Euler characteristic {chi}")
    return SurfaceStats(V, E, F, chi, (2 - chi) // 2, tuple(faces))


def genus_formula(n: int, k: int) -> int:
    """Genus ``1 + (n - 4) 2^(n-k-3)`` of a geometrized cube quotient."""
    if n - k >= 3:
        return 1 + (n - 4) * 2 ** (n - k - 3)
    # Small exponents: count cells exactly and insist on an integral genus.
    size = Fraction(2) ** (n - k)
    chi = size - n * size / 2 + n * size / 4
    genus = 1 - chi / 2
    if genus.denominator != 1 or genus < 0:
        raise ValueError(f"(n={n}, k={k}) does not give a closed surface (genus {genus})")
    return int(genus)
