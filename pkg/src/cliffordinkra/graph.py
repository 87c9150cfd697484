"""Cliffordinkras: edge-colored bipartite graphs with a dashing.

Colors are numbered 1..n wherever they appear in the public surface (edge
lists, JSON, violation witnesses, rainbows). The per-color link arrays are
indexed by ``color - 1``.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import f2linalg

BOSON = "b"
FERMION = "f"


class GraphError(ValueError):
    """Malformed graph data: not an involution, bad vertex ids, and so on."""


class RelationError(ValueError):
    """Matrices fail the Clifford relations."""


@dataclass(frozen=True)
class Edge:
    color: int
    u: int
    v: int
    dashed: bool


class Cliffordinkra:
    """Immutable colored graph with per-color ``(partner, dashed)`` arrays.

    Construction checks only that each color is an involution and that a dash
    belongs to its edge. Everything else (bipartite, quadrilateral, totally
    odd) is reported by :func:`validate`, so that deliberately broken
    fixtures can still be represented.
    """

    __slots__ = ("n", "parity", "partner", "dashed", "labels")

    def __init__(self, n: int, parity: Sequence[str], partner: Sequence[Sequence[int]],
                 dashed: Sequence[Sequence[bool]], labels: Optional[Sequence[str]] = None):
        nv = len(parity)
        if len(partner) != n or len(dashed) != n:
            raise GraphError(f"expected {n} colors of links")
        for p in parity:
            if p not in (BOSON, FERMION):
                raise GraphError(f"parity must be 'b' or 'f', got {p!r}")
        part = tuple(tuple(int(w) for w in row) for row in partner)
        dash = tuple(tuple(bool(d) for d in row) for row in dashed)
        for c in range(n):
            if len(part[c]) != nv or len(dash[c]) != nv:
                raise GraphError(f"color {c + 1}: link arrays have wrong length")
            for v, w in enumerate(part[c]):
                if not 0 <= w < nv:
                    raise GraphError(f"color {c + 1}: vertex {v} links to missing vertex {w}")
                if part[c][w] != v:
                    raise GraphError(f"color {c + 1}: partner is not an involution at vertex {v}")
                if dash[c][w] != dash[c][v]:
                    raise GraphError(f"color {c + 1}: edge {v}-{w} has inconsistent dashing")
        if labels is not None and len(labels) != nv:
            raise GraphError("labels must match the vertex count")
        self.n = n
        self.parity = tuple(parity)
        self.partner = part
        self.dashed = dash
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edges(cls, n: int, parity: Sequence[str], edges: Iterable,
                   labels: Optional[Sequence[str]] = None) -> "Cliffordinkra":
        """Build from ``(color, u, v, dashed)`` tuples or :class:`Edge` records."""
        nv = len(parity)
        partner = [[-1] * nv for _ in range(n)]
        dashed = [[False] * nv for _ in range(n)]
        for e in edges:
            color, u, v, d = (e.color, e.u, e.v, e.dashed) if isinstance(e, Edge) else e
            if not 1 <= color <= n:
                raise GraphError(f"color {color} out of range 1..{n}")
            c = color - 1
            for a, b in ((u, v), (v, u)):
                if not 0 <= a < nv:
                    raise GraphError(f"vertex {a} out of range")
                if partner[c][a] not in (-1, b):
                    raise GraphError(f"vertex {a} has two edges of color {color}")
                partner[c][a] = b
                dashed[c][a] = bool(d)
        for c in range(n):
            for v in range(nv):
                if partner[c][v] == -1:
                    raise GraphError(f"vertex {v} has no edge of color {c + 1}")
        return cls(n, parity, partner, dashed, labels)

    @property
    def num_vertices(self) -> int:
        return len(self.parity)

    def __len__(self) -> int:
        return len(self.parity)

    @property
    def bosons(self) -> List[int]:
        return [v for v, p in enumerate(self.parity) if p == BOSON]

    @property
    def fermions(self) -> List[int]:
        return [v for v, p in enumerate(self.parity) if p == FERMION]

    def edges(self) -> List[Edge]:
        """Each edge once, as ``(color, u <= v)``, sorted by color then ``u``."""
        out = []
        for c in range(self.n):
            for v, w in enumerate(self.partner[c]):
                if v <= w:
                    out.append(Edge(c + 1, v, w, self.dashed[c][v]))
        return out

    def edge_index(self) -> Dict[Tuple[int, int], int]:
        """Map ``(color - 1, vertex)`` to the position of its edge in :meth:`edges`."""
        index = {}
        for k, e in enumerate(self.edges()):
            index[(e.color - 1, e.u)] = k
            index[(e.color - 1, e.v)] = k
        return index

    def with_dashing(self, dashed: Sequence[Sequence[bool]]) -> "Cliffordinkra":
        return Cliffordinkra(self.n, self.parity, self.partner, dashed, self.labels)

    def with_edge_dashing(self, values: Sequence[int]) -> "Cliffordinkra":
        """Install a dashing given as one bit per edge in :meth:`edges` order."""
        dashed = [list(row) for row in self.dashed]
        for k, e in enumerate(self.edges()):
            dashed[e.color - 1][e.u] = bool(values[k])
            dashed[e.color - 1][e.v] = bool(values[k])
        return self.with_dashing(dashed)

    def edge_dashing(self) -> List[int]:
        return [int(e.dashed) for e in self.edges()]

    def relabel(self, phi: Sequence[int]) -> "Cliffordinkra":
        """Move vertex ``v`` to position ``phi[v]``."""
        nv = self.num_vertices
        if sorted(phi) != list(range(nv)):
            raise GraphError("relabeling must be a permutation of the vertices")
        parity = [None] * nv
        for v in range(nv):
            parity[phi[v]] = self.parity[v]
        partner = [[0] * nv for _ in range(self.n)]
        dashed = [[False] * nv for _ in range(self.n)]
        for c in range(self.n):
            for v in range(nv):
                partner[c][phi[v]] = phi[self.partner[c][v]]
                dashed[c][phi[v]] = self.dashed[c][v]
        labels = None
        if self.labels is not None:
            labels = [None] * nv
            for v in range(nv):
                labels[phi[v]] = self.labels[v]
        return Cliffordinkra(self.n, parity, partner, dashed, labels)

    def components(self) -> List[List[int]]:
        seen = [False] * self.num_vertices
        comps = []
        for start in range(self.num_vertices):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for c in range(self.n):
                    w = self.partner[c][v]
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subgraph(self, vertices: Sequence[int]) -> "Cliffordinkra":
        """Induced graph on a union of components, renumbered in the given order."""
        pos = {v: k for k, v in enumerate(vertices)}
        try:
            partner = [[pos[self.partner[c][v]] for v in vertices] for c in range(self.n)]
        except KeyError as exc:
            raise GraphError("vertex set is not closed under the edges") from exc
        dashed = [[self.dashed[c][v] for v in vertices] for c in range(self.n)]
        parity = [self.parity[v] for v in vertices]
        labels = [self.labels[v] for v in vertices] if self.labels else None
        return Cliffordinkra(self.n, parity, partner, dashed, labels)

    def _key(self):
        return (self.n, self.parity, self.partner, self.dashed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cliffordinkra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (f"<Cliffordinkra n={self.n} vertices={self.num_vertices} "
                f"dashed={sum(e.dashed for e in self.edges())}>")

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "parity": list(self.parity),
            "edges": [{"color": e.color, "u": e.u, "v": e.v, "dashed": e.dashed}
                      for e in self.edges()],
        }
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Cliffordinkra":
        try:
            n = int(data["n"])
            parity = list(data["parity"])
            edges = [(int(e["color"]), int(e["u"]), int(e["v"]), bool(e["dashed"]))
                     for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph record: {exc}") from exc
        return cls.from_edges(n, parity, edges, data.get("labels"))

    @classmethod
    def from_json(cls, text: str) -> "Cliffordinkra":
        return cls.from_dict(json.loads(text))


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: tuple
    message: str = ""


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __len__(self) -> int:
        return len(self.violations)

    def rules(self) -> set:
        return {v.rule for v in self.violations}

    def by_rule(self, rule: str) -> List[Violation]:
        return [v for v in self.violations if v.rule == rule]

    def to_dict(self) -> dict:
        return {
            "valid": self.ok,
            "violations": [{"rule": v.rule, "witness": list(v.witness), "message": v.message}
                           for v in self.violations],
        }


def bicolor_walk(g: Cliffordinkra, i: int, j: int, v: int) -> Tuple[int, int, int, int, int]:
    """Follow colors ``i, j, i, j`` (0-based) from ``v``; returns the 5 visited vertices."""
    a = g.partner[i][v]
    b = g.partner[j][a]
    c = g.partner[i][b]
    d = g.partner[j][c]
    return v, a, b, c, d


def bicolor_cycles(g: Cliffordinkra):
    """Yield ``(i, j, (v0, v1, v2, v3))`` once per quadrilateral bicolor cycle.

    ``i < j`` are 0-based colors, and ``v0`` is the cycle's least vertex with
    ``v0 -i- v1 -j- v2 -i- v3 -j- v0``. Degenerate walks are skipped.
    """
    for i, j in itertools.combinations(range(g.n), 2):
        seen = set()
        for v in range(g.num_vertices):
            if v in seen:
                continue
            walk = bicolor_walk(g, i, j, v)
            if walk[4] != v or len(set(walk[:4])) != 4:
                continue
            seen.update(walk[:4])
            yield i, j, walk[:4]


def _cycle_dashes(g: Cliffordinkra, i: int, j: int, cyc) -> int:
    v0, v1, v2, v3 = cyc
    return (g.dashed[i][v0] + g.dashed[j][v1] + g.dashed[i][v2] + g.dashed[j][v3])


def _structure_violations(g: Cliffordinkra) -> List[Violation]:
    out = []
    for c in range(g.n):
        for v, w in enumerate(g.partner[c]):
            if w == v:
                out.append(Violation("regular", (c + 1, v),
                                     f"color {c + 1} edge at vertex {v} is a loop"))
            elif v < w and g.parity[v] == g.parity[w]:
                out.append(Violation("bipartite", (c + 1, v, w),
                                     f"color {c + 1} edge {v}-{w} joins equal parities"))
    for i, j in itertools.combinations(range(g.n), 2):
        reported = set()
        for v in range(g.num_vertices):
            if v in reported:
                continue
            walk = bicolor_walk(g, i, j, v)
            if walk[4] == v and len(set(walk[:4])) == 4:
                continue
            # Collect the whole bicolor component so it is reported once.
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for c in (i, j):
                    y = g.partner[c][x]
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            reported |= comp
            out.append(Violation("quadrilateral", (i + 1, j + 1, tuple(sorted(comp))),
                                 f"colors {i + 1},{j + 1}: bicolor component of size "
                                 f"{len(comp)} at vertex {v} is not a 4-cycle"))
    return out


def validate(g: Cliffordinkra) -> ValidationReport:
    """Check bipartite, regular, quadrilateral, totally odd; list every failure."""
    violations = _structure_violations(g)
    for i, j, cyc in bicolor_cycles(g):
        if _cycle_dashes(g, i, j, cyc) % 2 == 0:
            violations.append(Violation("totally_odd", (i + 1, j + 1, cyc),
                                        f"colors {i + 1},{j + 1}: cycle {cyc} has an even "
                                        f"number of dashes"))
    return ValidationReport(violations)


def vertex_switch(g: Cliffordinkra, s: Iterable[int]) -> Cliffordinkra:
    """Toggle the dash on every edge with exactly one endpoint in ``s``."""
    inside = [False] * g.num_vertices
    for v in s:
        inside[v] = True
    dashed = [[d ^ (inside[v] != inside[w]) for v, (w, d) in enumerate(zip(pc, dc))]
              for pc, dc in zip(g.partner, g.dashed)]
    return g.with_dashing(dashed)


# -- signed permutation matrices ------------------------------------------


@dataclass(frozen=True)
class SignedPermMatrix:
    """``M e_j = signs[j] * e_{perm[j]}``, so ``M[perm[j], j] = signs[j]``."""

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.perm) != len(self.signs):
            raise ValueError("perm and signs differ in length")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a bijection")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def dimension(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, dim: int, sign: int = 1) -> "SignedPermMatrix":
        return cls(tuple(range(dim)), (sign,) * dim)

    @classmethod
    def from_dense(cls, m) -> "SignedPermMatrix":
        m = np.asarray(m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("expected a square matrix")
        perm, signs = [], []
        for j in range(m.shape[1]):
            nz = np.flatnonzero(m[:, j])
            if len(nz) != 1 or m[nz[0], j] not in (1, -1):
                raise ValueError(f"column {j} is not a signed unit vector")
            perm.append(int(nz[0]))
            signs.append(int(m[nz[0], j]))
        return cls(tuple(perm), tuple(signs))

    def dense(self) -> np.ndarray:
        dim = self.dimension
        m = np.zeros((dim, dim), dtype=int)
        m[list(self.perm), list(range(dim))] = self.signs
        return m

    def to_rows(self) -> List[List[int]]:
        return self.dense().tolist()

    def __matmul__(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.dimension))
        signs = tuple(other.signs[j] * self.signs[other.perm[j]] for j in range(self.dimension))
        return SignedPermMatrix(perm, signs)

    def __neg__(self) -> "SignedPermMatrix":
        return SignedPermMatrix(self.perm, tuple(-s for s in self.signs))

    def transpose(self) -> "SignedPermMatrix":
        dim = self.dimension
        perm = [0] * dim
        signs = [0] * dim
        for j, (i, s) in enumerate(zip(self.perm, self.signs)):
            perm[i] = j
            signs[i] = s
        return SignedPermMatrix(tuple(perm), tuple(signs))

    def abs(self) -> "SignedPermMatrix":
        return SignedPermMatrix(self.perm, (1,) * self.dimension)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_graded(self, num_bosons: int) -> bool:
        """Block off-diagonal when the first ``num_bosons`` indices are bosons."""
        return all((j < num_bosons) != (i < num_bosons) for j, i in enumerate(self.perm))


def default_order(g: Cliffordinkra) -> List[int]:
    return g.bosons + g.fermions


def to_matrices(g: Cliffordinkra, order: Optional[Sequence[int]] = None,
                check: bool = True) -> List[SignedPermMatrix]:
    """One signed permutation matrix per color; ``order[p]`` is the vertex at index ``p``.

    The default order lists bosons then fermions, each in vertex-id order.
    """
    if check:
        report = validate(g)
        if not report.ok:
            raise GraphError(f"not a valid Cliffordinkra: {report.violations[0].message}")
    if order is None:
        order = default_order(g)
    order = list(order)
    if sorted(order) != list(range(g.num_vertices)):
        raise GraphError("order must enumerate every vertex once")
    pos = {v: p for p, v in enumerate(order)}
    mats = []
    for c in range(g.n):
        perm = tuple(pos[g.partner[c][v]] for v in order)
        signs = tuple(-1 if g.dashed[c][v] else 1 for v in order)
        mats.append(SignedPermMatrix(perm, signs))
    return mats


def verify_clifford(mats: Sequence[SignedPermMatrix], signature: Tuple[int, int] = None) -> bool:
    """Exact check of ``{G_i, G_j} = 2 eta_ij I``.

    ``signature=(p, q)``: the first ``p`` generators square to ``-I`` and the
    remaining ``q`` to ``+I``. Default is ``(0, len(mats))``.
    """
    mats = list(mats)
    if not mats:
        return True
    dims = {m.dimension for m in mats}
    if len(dims) != 1:
        raise ValueError(f"dimension mismatch: {sorted(dims)}")
    dim = dims.pop()
    if signature is None:
        signature = (0, len(mats))
    p, q = signature
    if p + q != len(mats):
        raise ValueError(f"signature {signature} does not match {len(mats)} generators")
    for i, a in enumerate(mats):
        expect = SignedPermMatrix.identity(dim, -1 if i < p else 1)
        if a @ a != expect:
            return False
        for b in mats[i + 1:]:
            if a @ b != -(b @ a):
                return False
    return True


def from_matrices(mats: Sequence, parity) -> Cliffordinkra:
    """Graph with a color-``c`` edge wherever ``G_c`` is nonzero, dashed where -1.

    ``parity`` is either a list of ``'b'``/``'f'`` per index or the number of
    bosons, which then occupy the first indices.
    """
    mats = [m if isinstance(m, SignedPermMatrix) else SignedPermMatrix.from_dense(m)
            for m in mats]
    if not mats:
        raise ValueError("need at least one matrix")
    dim = mats[0].dimension
    if isinstance(parity, int):
        parity = [BOSON] * parity + [FERMION] * (dim - parity)
    parity = list(parity)
    if len(parity) != dim:
        raise ValueError("parity length does not match matrix dimension")
    for c, m in enumerate(mats):
        if m.dimension != dim:
            raise ValueError("dimension mismatch")
        for j, i in enumerate(m.perm):
            if parity[i] == parity[j]:
                raise GraphError(f"matrix {c + 1} is not graded: {j} -> {i}")
    if not verify_clifford(mats, (0, len(mats))):
        raise RelationError("matrices do not satisfy the Cl(0,n) relations")
    partner = [list(m.perm) for m in mats]
    dashed = [[s < 0 for s in m.signs] for m in mats]
    return Cliffordinkra(len(mats), parity, partner, dashed)


# -- isomorphism up to vertex switching -----------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """``relabel(vertex_switch(g1, switch), bijection) == g2``."""

    bijection: Tuple[int, ...]
    switch: FrozenSet[int]


def _color_map(g1: Cliffordinkra, g2: Cliffordinkra, comp1: Sequence[int],
               anchor_image: int) -> Optional[Dict[int, int]]:
    """Extend ``comp1[0] -> anchor_image`` along colors; None if it breaks."""
    anchor = comp1[0]
    phi = {anchor: anchor_image}
    used = {anchor_image}
    queue = deque([anchor])
    while queue:
        v = queue.popleft()
        w = phi[v]
        if g1.parity[v] != g2.parity[w]:
            return None
        for c in range(g1.n):
            v2 = g1.partner[c][v]
            w2 = g2.partner[c][w]
            if v2 in phi:
                if phi[v2] != w2:
                    return None
            else:
                if w2 in used:
                    return None
                phi[v2] = w2
                used.add(w2)
                queue.append(v2)
    return phi if len(phi) == len(comp1) else None


def _min_switch(comp: Sequence[int], s: FrozenSet[int]) -> FrozenSet[int]:
    other = frozenset(comp) - s
    return min(s, other, key=lambda t: (len(t), sorted(t)))


class _SwitchSolver:
    """Decides whether an edge cochain is a vertex-switch coboundary ``d0 x``."""

    def __init__(self, g: Cliffordinkra, comp: Sequence[int]):
        self.comp = list(comp)
        self.pos = {v: k for k, v in enumerate(self.comp)}
        self.edges = [e for e in g.edges() if e.u in self.pos]
        self.rows = [(1 << self.pos[e.u]) | (1 << self.pos[e.v]) for e in self.edges]
        # Cycle space = kernel of the transpose of d0; delta is a coboundary
        # exactly when it pairs to zero with every cycle.
        self.cycles = f2linalg.nullspace(f2linalg.transpose(self.rows, len(self.comp)),
                                         len(self.rows))

    def solve(self, delta: int) -> Optional[FrozenSet[int]]:
        for z in self.cycles:
            if f2linalg.popcount(z & delta) & 1:
                return None
        x = f2linalg.solve(self.rows, len(self.comp), delta)
        assert x is not None
        return frozenset(v for k, v in enumerate(self.comp) if (x >> k) & 1)


def _component_iso(g1, g2, comp1, comp2) -> Optional[Tuple[Dict[int, int], FrozenSet[int]]]:
    if len(comp1) != len(comp2):
        return None
    solver = None
    for w in comp2:
        if g2.parity[w] != g1.parity[comp1[0]]:
            continue
        phi = _color_map(g1, g2, comp1, w)
        if phi is None:
            continue
        if solver is None:
            solver = _SwitchSolver(g1, comp1)
        delta = 0
        for k, e in enumerate(solver.edges):
            if e.dashed != g2.dashed[e.color - 1][phi[e.u]]:
                delta |= 1 << k
        s = solver.solve(delta)
        if s is not None:
            return phi, _min_switch(comp1, s)
    return None


def is_isomorphic(g1: Cliffordinkra, g2: Cliffordinkra) -> Optional[IsoWitness]:
    """Color- and parity-preserving isomorphism up to vertex switching.

    For each component the candidate maps are fixed by the image of one
    anchor vertex; dashing equivalence is an F2 solve for the switch set.
    Candidates are tried in increasing vertex order, and the switch set is
    the smaller (then lexicographically least) of the two solutions per
    component, so the witness is deterministic.
    """
    if g1.n != g2.n or g1.num_vertices != g2.num_vertices:
        return None
    if sorted(g1.parity) != sorted(g2.parity):
        return None
    comps2 = g2.components()
    free = list(range(len(comps2)))
    bijection = [-1] * g1.num_vertices
    switch = set()
    for comp1 in g1.components():
        for idx in free:
            found = _component_iso(g1, g2, comp1, comps2[idx])
            if found is not None:
                phi, s = found
                for v, w in phi.items():
                    bijection[v] = w
                switch |= s
                free.remove(idx)
                break
        else:
            return None
    return IsoWitness(tuple(bijection), frozenset(switch))


def apply_witness(g1: Cliffordinkra, w: IsoWitness) -> Cliffordinkra:
    return vertex_switch(g1, w.switch).relabel(w.bijection)


# -- DOT export --------------------------------------------------------------

PALETTE = ("black", "red", "blue", "green", "orange", "purple", "brown", "cyan",
           "magenta", "gold", "gray", "navy", "olive", "pink", "teal", "maroon")


def to_dot(g: Cliffordinkra, name: str = "cliffordinkra") -> str:
    """Graphviz source: open circles for bosons, filled for fermions."""
    lines = [f"graph {name} {{", "  node [shape=circle, width=0.25, label=\"\"];"]
    for v, p in enumerate(g.parity):
        label = g.labels[v] if g.labels else str(v)
        style = "style=filled, fillcolor=black" if p == FERMION else "style=solid"
        lines.append(f"  {v} [{style}, xlabel=\"{label}\"];")
    for e in g.edges():
        color = PALETTE[(e.color - 1) % len(PALETTE)]
        style = ", style=dashed" if e.dashed else ""
        lines.append(f"  {e.u} -- {e.v} [color={color}{style}, penwidth=2];")
    lines.append("}")
    return "\n".join(lines) + "\n"
