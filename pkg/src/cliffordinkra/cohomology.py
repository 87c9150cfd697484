"""F2 cubical cochains on a Cliffordinkra.

Cells of dimension 2 and 3 are orbits of a vertex under two or three colors.
A cell's boundary is the mod-2 sum of the cells one dimension down that its
closed color walk traverses, so folded cells (from codes with weight-2
words) get boundaries that cancel, exactly as the images of cube faces do.
Every ``d_k`` is a list of bit-packed rows, one per ``(k+1)``-cell.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import f2linalg
from .graph import Cliffordinkra, Edge, GraphError


@dataclass(frozen=True)
class Cell:
    colors: Tuple[int, ...]
    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class Cochain:
    degree: int
    size: int
    values: int

    def __getitem__(self, k: int) -> int:
        return (self.values >> k) & 1

    def bits(self) -> List[int]:
        return [(self.values >> k) & 1 for k in range(self.size)]

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.degree, self.size) != (other.degree, other.size):
            raise ValueError("cochains live on different cell sets")
        return Cochain(self.degree, self.size, self.values ^ other.values)

    def to_hex(self) -> str:
        width = max(1, (self.size + 3) // 4)
        return format(self.values, f"0{width}x")

    @classmethod
    def from_hex(cls, degree: int, size: int, text: str) -> "Cochain":
        values = int(text, 16)
        if values >> size:
            raise ValueError("hex string has bits beyond the cell count")
        return cls(degree, size, values)

    @classmethod
    def ones(cls, degree: int, size: int) -> "Cochain":
        return cls(degree, size, (1 << size) - 1)

    @classmethod
    def indicator(cls, degree: int, size: int, cells) -> "Cochain":
        return cls(degree, size, sum(1 << k for k in set(cells)))


class CubicalComplex:
    """Vertices, edges, bicolor 2-cells and tricolor 3-cells of a graph."""

    def __init__(self, graph: Cliffordinkra):
        self.graph = graph
        g = graph
        self.vertices = list(range(g.num_vertices))
        self.edges: List[Edge] = g.edges()
        edge_at = g.edge_index()
        self.boundary: List[List[int]] = [[], [], [], []]
        for e in self.edges:
            self.boundary[1].append((1 << e.u) ^ (1 << e.v))

        self.faces: List[Cell] = []
        face_at = {}
        for i, j in itertools.combinations(range(g.n), 2):
            for v in range(g.num_vertices):
                if (i, j, v) in face_at:
                    continue
                orbit = _orbit(g, (i, j), v)
                k = len(self.faces)
                self.faces.append(Cell((i + 1, j + 1), orbit))
                for w in orbit:
                    face_at[(i, j, w)] = k
                self.boundary[2].append(_face_boundary(g, i, j, v, edge_at))

        self.solids: List[Cell] = []
        seen = set()
        for i, j, l in itertools.combinations(range(g.n), 3):
            for v in range(g.num_vertices):
                if (i, j, l, v) in seen:
                    continue
                orbit = _orbit(g, (i, j, l), v)
                seen.update((i, j, l, w) for w in orbit)
                self.solids.append(Cell((i + 1, j + 1, l + 1), orbit))
                row = 0
                for (a, b), c in (((i, j), l), ((i, l), j), ((j, l), i)):
                    row ^= 1 << face_at[(a, b, v)]
                    row ^= 1 << face_at[(a, b, g.partner[c][v])]
                self.boundary[3].append(row)

    @property
    def counts(self) -> Tuple[int, int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces), len(self.solids)

    def cell_count(self, k: int) -> int:
        return self.counts[k]

    def coboundary(self, k: int) -> List[int]:
        """Rows of ``d_k``: one per ``(k+1)``-cell, bits over ``k``-cells."""
        if k not in (0, 1, 2):
            raise ValueError(f"coboundary degree must be 0, 1 or 2, got {k}")
        return list(self.boundary[k + 1])

    def apply(self, k: int, mu: Cochain) -> Cochain:
        if mu.degree != k or mu.size != self.cell_count(k):
            raise ValueError("cochain does not match the degree")
        rows = self.coboundary(k)
        return Cochain(k + 1, len(rows), f2linalg.matvec(rows, mu.values))

    def rank(self, k: int) -> int:
        return f2linalg.rank(self.coboundary(k))


def _orbit(g: Cliffordinkra, colors, v: int) -> Tuple[int, ...]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for c in colors:
            y = g.partner[c][x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return tuple(sorted(seen))


def _face_boundary(g: Cliffordinkra, i: int, j: int, v: int, edge_at) -> int:
    row = 0
    x = v
    for c in (i, j, i, j):
        row ^= 1 << edge_at[(c, x)]
        x = g.partner[c][x]
    if x != v:
        raise GraphError(f"colors {i + 1},{j + 1} do not close a square at vertex {v}")
    return row


def build_complex(g: Cliffordinkra) -> CubicalComplex:
    return CubicalComplex(g)


def coboundary(k: int, complex_: CubicalComplex) -> List[int]:
    return complex_.coboundary(k)


def compose_is_zero(complex_: CubicalComplex, k: int) -> bool:
    """``d_{k+1} d_k = 0``."""
    outer = complex_.coboundary(k + 1)
    inner = complex_.coboundary(k)
    return not any(f2linalg.matmul(outer, inner, complex_.cell_count(k)))


def cohomology_dims(complex_: CubicalComplex) -> Tuple[int, int, int]:
    """Dimensions of H^0, H^1, H^2 of the complex truncated at 3-cells."""
    r0, r1, r2 = (complex_.rank(k) for k in range(3))
    c0, c1, c2, _ = complex_.counts
    return c0 - r0, (c1 - r1) - r0, (c2 - r2) - r1


def solve_totally_odd(complex_: CubicalComplex) -> Optional[Cochain]:
    """A dashing with an odd number of dashes on every 2-cell, or ``None``."""
    rows = complex_.coboundary(1)
    x = f2linalg.solve(rows, len(complex_.edges), (1 << len(rows)) - 1)
    return None if x is None else Cochain(1, len(complex_.edges), x)


def dashing_kernel(complex_: CubicalComplex) -> List[Cochain]:
    """Basis of ``ker d_1``: the differences between totally odd dashings."""
    size = len(complex_.edges)
    return [Cochain(1, size, z) for z in f2linalg.nullspace(complex_.coboundary(1), size)]


def count_dashings(complex_: CubicalComplex) -> Optional[Tuple[int, int]]:
    """``(total, classes up to vertex switching)``; ``None`` if none exist."""
    if solve_totally_odd(complex_) is None:
        return None
    nullity = len(complex_.edges) - complex_.rank(1)
    h1 = cohomology_dims(complex_)[1]
    return 2 ** nullity, 2 ** h1


def solve_bipartition(complex_: CubicalComplex) -> Optional[Cochain]:
    """``f`` with ``d_0 f = 1`` (every edge joins a 0 to a 1), or ``None``."""
    rows = complex_.coboundary(0)
    x = f2linalg.solve(rows, len(complex_.vertices), (1 << len(rows)) - 1)
    return None if x is None else Cochain(0, len(complex_.vertices), x)


def dashing_cochain(g: Cliffordinkra) -> Cochain:
    """The graph's current dashing as a 1-cochain in :meth:`Cliffordinkra.edges` order."""
    edges = g.edges()
    return Cochain(1, len(edges), sum(1 << k for k, e in enumerate(edges) if e.dashed))


def install_dashing(g: Cliffordinkra, mu: Cochain) -> Cliffordinkra:
    if mu.degree != 1:
        raise ValueError("a dashing is a 1-cochain")
    return g.with_edge_dashing(mu.bits())


def switch_cochain(complex_: CubicalComplex, vertices) -> Cochain:
    """``d_0 1_S``: the edges whose dash a vertex switch on ``S`` toggles."""
    ind = Cochain.indicator(0, len(complex_.vertices), vertices)
    return complex_.apply(0, ind)
