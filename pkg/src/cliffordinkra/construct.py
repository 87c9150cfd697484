"""Cube Cliffordinkras, their quotients by doubly even codes, and code recovery."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import f2code
from .f2code import BitWord, LinearCode
from .f2linalg import popcount
from .graph import (BOSON, FERMION, Cliffordinkra, GraphError, SignedPermMatrix,
                    ValidationReport, Violation, _structure_violations, bicolor_cycles,
                    default_order, to_matrices, validate)
from .monomial import left_gamma_sign, parse_signs, projector_product, reorder_sign


def _word_key(x: int, n: int) -> str:
    return str(BitWord(x, n))


def _numbered(words: Sequence[int], n: int) -> List[int]:
    """Bosons (even weight) first, then fermions; each in printed-string order."""
    ordered = sorted(words, key=lambda x: _word_key(x, n))
    return [x for x in ordered if popcount(x) % 2 == 0] + \
           [x for x in ordered if popcount(x) % 2 == 1]


def cube(n: int) -> Cliffordinkra:
    """The n-cube dashed by left multiplication: ``G_i G_x = -G_{x+e_i}`` means dashed."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    words = _numbered(range(1 << n), n)
    index = {x: v for v, x in enumerate(words)}
    partner = [[index[x ^ (1 << i)] for x in words] for i in range(n)]
    dashed = [[left_gamma_sign(i, x) < 0 for x in words] for i in range(n)]
    parity = [BOSON if popcount(x) % 2 == 0 else FERMION for x in words]
    return Cliffordinkra(n, parity, partner, dashed, [_word_key(x, n) for x in words])


@dataclass(frozen=True)
class QuotientSpec:
    n: int
    code: LinearCode
    signs: Tuple[int, ...]

    def __post_init__(self):
        if self.code.length != self.n:
            raise ValueError(f"code length {self.code.length} differs from n={self.n}")
        if len(self.signs) != self.code.dimension:
            raise ValueError(f"{self.code.dimension} generators need as many signs, "
                             f"got {len(self.signs)}")
        if not f2code.is_doubly_even(self.code):
            raise ValueError(f"code {self.code!r} is not doubly even")
        projector_product(self.code.rows, self.signs, self.n)

    @classmethod
    def make(cls, n: int, code, signs=None) -> "QuotientSpec":
        if not isinstance(code, LinearCode):
            code = LinearCode(n, code)
        if signs is None:
            signs = (1,) * code.dimension
        return cls(n, code, parse_signs(signs))

    @property
    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def to_dict(self) -> dict:
        return {"n": self.n, "code": [str(r) for r in self.code.rows],
                "signs": self.sign_string}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "QuotientSpec":
        n = int(data["n"])
        return cls.make(n, LinearCode(n, data.get("code", [])), data.get("signs", ""))

    @classmethod
    def from_json(cls, text: str) -> "QuotientSpec":
        return cls.from_dict(json.loads(text))


def coset_representative(code: LinearCode, x: int) -> int:
    """Lexicographically least member of ``x + code`` in printed-string order.

    Clearing the RREF pivot positions gives it: every nonzero codeword has its
    leftmost 1 on a pivot, so it would raise the first pivot it touches.
    """
    return code.reduce(x)


def _generator_combinations(code: LinearCode) -> Dict[int, Tuple[int, ...]]:
    """Each codeword as the tuple of original generator indices summing to it."""
    combos = {0: ()}
    for k, g in enumerate(code.rows):
        combos.update({c ^ g.bits: idx + (k,) for c, idx in list(combos.items())})
    return combos


class _Identifier:
    """Expresses ``G_y pi`` as ``+/- G_r pi`` with ``r`` the coset representative."""

    def __init__(self, code: LinearCode, signs: Sequence[int], sign_of=reorder_sign):
        self.code = code
        self.gens = [g.bits for g in code.rows]
        self.signs = tuple(signs)
        self.combos = _generator_combinations(code)
        self.sign_of = sign_of

    def __call__(self, y: int) -> Tuple[int, int]:
        r = coset_representative(self.code, y)
        sign = 1
        cur = y
        # G_cur pi = s_g * (G_cur G_g) pi, one generator at a time.
        for k in self.combos[y ^ r]:
            g = self.gens[k]
            sign *= self.signs[k] * self.sign_of(cur, g)
            cur ^= g
        assert cur == r
        return sign, r


def identify(spec: QuotientSpec, y) -> Tuple[int, BitWord]:
    """``(sign, r)`` with ``G_y pi = sign * G_r pi`` for the spec's projector ``pi``."""
    y = f2code.as_word(y, spec.n)
    sign, r = _Identifier(spec.code, spec.signs)(y.bits)
    return sign, BitWord(r, spec.n)


def identification_pairs(spec: QuotientSpec) -> List[Tuple[BitWord, int, BitWord]]:
    """Every relation ``a_y = sign * a_{y + c}`` for nonzero codewords ``c``."""
    ident = _Identifier(spec.code, spec.signs)
    out = []
    for y in range(1 << spec.n):
        sy, r = ident(y)
        for c in spec.code.codeword_ints():
            if c == 0:
                continue
            sz, rz = ident(y ^ c)
            assert rz == r
            out.append((BitWord(y, spec.n), sy * sz, BitWord(y ^ c, spec.n)))
    return out


def _quotient_graph(n: int, code: LinearCode, edge_sign) -> Cliffordinkra:
    reps = sorted({coset_representative(code, x) for x in range(1 << n)})
    words = _numbered(reps, n)
    index = {x: v for v, x in enumerate(words)}
    partner = [[0] * len(words) for _ in range(n)]
    dashed = [[False] * len(words) for _ in range(n)]
    for v, y in enumerate(words):
        for i in range(n):
            sign, target = edge_sign(i, y)
            partner[i][v] = index[target]
            dashed[i][v] = sign < 0
    parity = [BOSON if popcount(x) % 2 == 0 else FERMION for x in words]
    for i in range(n):
        for v in range(len(words)):
            w = partner[i][v]
            if partner[i][w] != v or dashed[i][w] != dashed[i][v]:
                raise AssertionError(f"inconsistent quotient edge at color {i + 1}, "
                                     f"vertex {_word_key(words[v], n)}")
    return Cliffordinkra(n, parity, partner, dashed, [_word_key(x, n) for x in words])


def quotient(spec: QuotientSpec) -> Cliffordinkra:
    """Image of right multiplication by the projector product of ``spec``.

    Vertex ``[y]`` stands for ``G_r pi`` with ``r`` the least member of
    ``y + C``. The color-``i`` edge is dashed when ``G_i G_r pi`` equals
    minus the basis element of its target coset.
    """
    ident = _Identifier(spec.code, spec.signs)

    def edge_sign(i, y):
        s1 = left_gamma_sign(i, y)
        s2, r = ident(y ^ (1 << i))
        return s1 * s2, r

    return _quotient_graph(spec.n, spec.code, edge_sign)


def quotient_topology(n: int, code) -> Cliffordinkra:
    """Undashed ``Z2^n / C`` for any code; no validity requirements.

    Used for fixtures that are deliberately not Cliffordinkras (odd or
    non-doubly-even codes). Parity follows the representative's weight.
    """
    if not isinstance(code, LinearCode):
        code = LinearCode(n, code)
    reps = sorted({coset_representative(code, x) for x in range(1 << n)},
                  key=lambda x: _word_key(x, n))
    index = {x: v for v, x in enumerate(reps)}
    partner = [[index[coset_representative(code, y ^ (1 << i))] for y in reps]
               for i in range(n)]
    dashed = [[False] * len(reps) for _ in range(n)]
    par = [BOSON if popcount(x) % 2 == 0 else FERMION for x in reps]
    return Cliffordinkra(n, par, partner, dashed, [_word_key(x, n) for x in reps])


def color_words(g: Cliffordinkra, v0: int = 0) -> Tuple[List[int], List[int]]:
    """BFS word of each vertex in ``v0``'s component, plus closed-walk words.

    Returns ``(word, loops)`` where ``word[v]`` is -1 outside the component.
    """
    word = [-1] * g.num_vertices
    word[v0] = 0
    loops = []
    queue = deque([v0])
    while queue:
        v = queue.popleft()
        for c in range(g.n):
            w = g.partner[c][v]
            step = word[v] ^ (1 << c)
            if word[w] < 0:
                word[w] = step
                queue.append(w)
            elif step != word[w]:
                loops.append(step ^ word[w])
    return word, loops


def recover_code(g: Cliffordinkra, v0: int = 0) -> LinearCode:
    """Stabilizer of ``v0`` under the color-word action: the graph's code."""
    word, loops = color_words(g, v0)
    if min(word) < 0:
        raise GraphError("graph is disconnected; recover the code per component")
    return LinearCode(g.n, [BitWord(x, g.n) for x in loops])


@dataclass(frozen=True)
class MinimalRepresentation:
    n: int
    code: LinearCode
    graph: Cliffordinkra
    matrices: List[SignedPermMatrix]

    @property
    def dimension(self) -> int:
        return self.graph.num_vertices


def minimal_representation(n: int, signs=None) -> MinimalRepresentation:
    """Graded signed-permutation representation of Cl(0,n) from a maximal code."""
    code = f2code.max_code(n)
    spec = QuotientSpec.make(n, code, signs)
    g = quotient(spec)
    return MinimalRepresentation(n, code, g, to_matrices(g, check=False))


# -- other signatures ----------------------------------------------------------
#
# Colors 1..p square to -I, colors p+1..p+q to +I. An edge's dash is read at
# its boson end: solid when G_i sends the boson v to +w.


def _signature_mask(p: int) -> int:
    return (1 << p) - 1


def clpq_reorder_sign(p: int):
    """Normal-ordering sign of ``G_x G_y`` when the first ``p`` generators square to -1."""
    neg = _signature_mask(p)

    def sign_of(x: int, y: int) -> int:
        s = reorder_sign(x, y)
        return -s if popcount(x & y & neg) & 1 else s

    return sign_of


def clpq_square_sign(x: int, p: int) -> int:
    w = popcount(x)
    s = -1 if (w * (w - 1) // 2) & 1 else 1
    return -s if popcount(x & _signature_mask(p)) & 1 else s


def clpq_cube(p: int, q: int) -> Cliffordinkra:
    """Cube for Cl(p,q) with boson-anchored dashing."""
    return clpq_quotient(p, q, LinearCode(p + q), ())


def clpq_code_ok(code: LinearCode, p: int) -> bool:
    """Every codeword's first-p and last-q weights agree mod 4."""
    neg = _signature_mask(p)
    return all((popcount(c & neg) - popcount(c & ~neg)) % 4 == 0 for c in code.codeword_ints())


def clpq_quotient(p: int, q: int, code, signs=()) -> Cliffordinkra:
    """Quotient of the Cl(p,q) cube by a code meeting the split-weight condition."""
    n = p + q
    if not isinstance(code, LinearCode):
        code = LinearCode(n, code)
    if code.length != n:
        raise ValueError("code length must be p + q")
    if not f2code.is_even(code) or not clpq_code_ok(code, p):
        raise ValueError("codewords must be even with first-p and last-q weights equal mod 4")
    # A weight-2 word such as 11 in Cl(1,1) meets the split condition but
    # folds a bicolor square into a digon.
    if any(popcount(c) == 2 for c in code.codeword_ints()):
        raise ValueError("a weight-2 codeword collapses bicolor squares into digons")
    signs = parse_signs(signs) if signs else (1,) * code.dimension
    if len(signs) != code.dimension:
        raise ValueError("one sign per generator required")
    sign_of = clpq_reorder_sign(p)
    for g in code.rows:
        if clpq_square_sign(g.bits, p) != 1:
            raise ValueError(f"generator {g} does not square to +1")
    for a in code.rows:
        for b in code.rows:
            if sign_of(a.bits, b.bits) != sign_of(b.bits, a.bits):
                raise ValueError(f"generators {a} and {b} do not commute")

    ident = _Identifier(code, signs, sign_of)

    def edge_sign(i, y):
        # Always evaluate G_i on the boson end of the edge.
        if popcount(y) % 2 == 0:
            s1 = sign_of(1 << i, y)
            s2, r = ident(y ^ (1 << i))
            return s1 * s2, r
        r_target = coset_representative(code, y ^ (1 << i))
        s1 = sign_of(1 << i, r_target)
        s2, back = ident(r_target ^ (1 << i))
        assert back == y
        return s1 * s2, r_target

    return _quotient_graph(n, code, edge_sign)


def clpq_validate(g: Cliffordinkra, p: int, q: int) -> ValidationReport:
    """Cl(p,q) rules: same-kind cycles odd, mixed cycles even, split code weights."""
    if p + q != g.n:
        raise ValueError(f"p + q = {p + q} but the graph has {g.n} colors")
    violations = _structure_violations(g)
    for i, j, cyc in bicolor_cycles(g):
        v0, v1, v2, v3 = cyc
        dashes = g.dashed[i][v0] + g.dashed[j][v1] + g.dashed[i][v2] + g.dashed[j][v3]
        mixed = (i < p) != (j < p)
        if mixed and dashes % 2:
            violations.append(Violation("mixed_even", (i + 1, j + 1, cyc),
                                        f"mixed colors {i + 1},{j + 1}: cycle {cyc} has an "
                                        f"odd number of dashes"))
        elif not mixed and dashes % 2 == 0:
            violations.append(Violation("totally_odd", (i + 1, j + 1, cyc),
                                        f"colors {i + 1},{j + 1}: cycle {cyc} has an even "
                                        f"number of dashes"))
    if not _structure_violations(g):
        neg = _signature_mask(p)
        for comp in g.components():
            code = recover_code(g, comp[0]) if len(comp) == g.num_vertices else \
                recover_code(g.subgraph(comp))
            for c in code.codeword_ints():
                a, b = popcount(c & neg), popcount(c & ~neg)
                if (a - b) % 4:
                    violations.append(Violation("code_split", (str(BitWord(c, g.n)), comp[0]),
                                                f"codeword {BitWord(c, g.n)} has split weights "
                                                f"({a},{b}) not equal mod 4"))
    return ValidationReport(violations)


def clpq_matrices(g: Cliffordinkra, p: int, q: int,
                  order: Optional[Sequence[int]] = None) -> List[SignedPermMatrix]:
    """Boson-anchored matrices: ``-I`` colors get ``+s`` from boson and ``-s`` back."""
    report = clpq_validate(g, p, q)
    if not report.ok:
        raise GraphError(f"not a valid Cl({p},{q}) graph: {report.violations[0].message}")
    if order is None:
        order = default_order(g)
    order = list(order)
    pos = {v: k for k, v in enumerate(order)}
    mats = []
    for c in range(g.n):
        perm, signs = [], []
        for v in order:
            w = g.partner[c][v]
            s = -1 if g.dashed[c][v] else 1
            if c < p and g.parity[v] == FERMION:
                s = -s
            perm.append(pos[w])
            signs.append(s)
        mats.append(SignedPermMatrix(tuple(perm), tuple(signs)))
    return mats
