"""Binary linear block codes over F2.

Words are stored as int bitmasks with the leftmost printed bit at bit index
0, so ``BitWord.parse("1000").bits == 1``. Printed and serialized forms always
use the left-to-right string order.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import f2linalg
from .f2linalg import popcount

DEFAULT_ENUMERATION_LIMIT = 8


class LengthMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive search is asked to run beyond its size limit."""


@dataclass(frozen=True, order=True)
class BitWord:
    bits: int
    n: int

    def __post_init__(self):
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.n}")

    @classmethod
    def parse(cls, s: str) -> "BitWord":
        s = s.strip()
        if any(c not in "01" for c in s):
            raise ValueError(f"not a binary string: {s!r}")
        return cls(sum(1 << i for i, c in enumerate(s) if c == "1"), len(s))

    @classmethod
    def zero(cls, n: int) -> "BitWord":
        return cls(0, n)

    @classmethod
    def unit(cls, i: int, n: int) -> "BitWord":
        """Standard basis word with a 1 in (0-based) position ``i``."""
        if not 0 <= i < n:
            raise IndexError(f"position {i} out of range for length {n}")
        return cls(1 << i, n)

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"BitWord('{self}')"

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self):
        return (((self.bits >> i) & 1) for i in range(self.n))

    def _check(self, other: "BitWord"):
        if self.n != other.n:
            raise LengthMismatch(f"lengths differ: {self.n} vs {other.n}")

    def __xor__(self, other: "BitWord") -> "BitWord":
        self._check(other)
        return BitWord(self.bits ^ other.bits, self.n)

    def __and__(self, other: "BitWord") -> "BitWord":
        self._check(other)
        return BitWord(self.bits & other.bits, self.n)

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def concat(self, other: "BitWord") -> "BitWord":
        return BitWord(self.bits | (other.bits << self.n), self.n + other.n)


WordLike = Union[BitWord, str]


def as_word(w: WordLike, n: Optional[int] = None) -> BitWord:
    if isinstance(w, str):
        w = BitWord.parse(w)
    if n is not None and w.n != n:
        raise LengthMismatch(f"expected length {n}, got {w.n}")
    return w


def weight(w: WordLike) -> int:
    return as_word(w).weight


def xor(v: WordLike, w: WordLike) -> BitWord:
    return as_word(v) ^ as_word(w)


def and_(v: WordLike, w: WordLike) -> BitWord:
    return as_word(v) & as_word(w)


def _common_length(words: Sequence[BitWord], n: Optional[int]) -> int:
    lengths = {w.n for w in words}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise LengthMismatch(f"mixed lengths {sorted(lengths)}")
    if not lengths:
        raise ValueError("length is unknown for an empty generator list")
    return lengths.pop()


def _span_ints(rows: Sequence[int]) -> List[int]:
    out = [0]
    for r in rows:
        out += [x ^ r for x in out]
    return out


def span(generators: Iterable[WordLike], n: Optional[int] = None) -> set:
    """All XOR combinations of the generators, as a set of BitWords."""
    gens = [as_word(g) for g in generators]
    n = _common_length(gens, n)
    basis, _ = f2linalg.echelon(g.bits for g in gens)
    return {BitWord(x, n) for x in _span_ints(basis)}


class LinearCode:
    """A subspace of F2^n, held as its reduced row echelon generator matrix.

    Equality and hashing are those of the subspace. ``rows`` keeps the
    generator rows in the order they were supplied (duplicates and dependent
    rows dropped), which is what gets printed and serialized.
    """

    __slots__ = ("length", "_rows", "_basis", "_pivots", "name")

    def __init__(self, length: int, generators: Iterable[WordLike] = (), name: str = ""):
        self.length = length
        rows: List[int] = []
        basis: List[int] = []
        pivots: List[int] = []
        for g in generators:
            g = as_word(g, length)
            if f2linalg.reduce_vector(g.bits, basis, pivots):
                rows.append(g.bits)
                basis, pivots = f2linalg.echelon(rows)
        self._rows = tuple(rows)
        self._basis = tuple(basis)
        self._pivots = tuple(pivots)
        self.name = name

    @classmethod
    def from_strings(cls, rows: Sequence[str], length: Optional[int] = None, name: str = ""):
        if length is None:
            if not rows:
                raise ValueError("length required for a code with no generators")
            length = len(rows[0])
        return cls(length, rows, name=name)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    k = dimension

    @property
    def rows(self) -> Tuple[BitWord, ...]:
        return tuple(BitWord(r, self.length) for r in self._rows)

    generators = rows

    @property
    def rref(self) -> Tuple[BitWord, ...]:
        return tuple(BitWord(r, self.length) for r in self._basis)

    def codeword_ints(self) -> List[int]:
        return sorted(_span_ints(self._basis))

    def codewords(self) -> List[BitWord]:
        return [BitWord(x, self.length) for x in self.codeword_ints()]

    def __len__(self) -> int:
        return 1 << self.dimension

    def __contains__(self, w: WordLike) -> bool:
        w = as_word(w, self.length)
        return f2linalg.reduce_vector(w.bits, self._basis, self._pivots) == 0

    def reduce(self, w: int) -> int:
        """Remainder of an int word modulo the code's pivot columns."""
        return f2linalg.reduce_vector(w, self._basis, self._pivots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and self._basis == other._basis

    def __hash__(self) -> int:
        return hash((self.length, self._basis))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        rows = ", ".join(str(r) for r in self.rows)
        return f"<LinearCode{label} n={self.length} k={self.dimension} [{rows}]>"

    def weight_distribution(self) -> Tuple[int, ...]:
        counts = [0] * (self.length + 1)
        for x in _span_ints(self._basis):
            counts[popcount(x)] += 1
        return tuple(counts)

    def permuted(self, perm: Sequence[int]) -> "LinearCode":
        """Code whose position ``perm[i]`` carries the old position ``i``."""
        rows = [_permute_bits(r, perm) for r in self._rows]
        return LinearCode(self.length, [BitWord(r, self.length) for r in rows])

    def to_json(self) -> str:
        return json.dumps([str(r) for r in self.rows])

    @classmethod
    def from_json(cls, text: str, length: Optional[int] = None) -> "LinearCode":
        return cls.from_strings(json.loads(text), length)


def _permute_bits(x: int, perm: Sequence[int]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if (x >> i) & 1:
            out |= 1 << j
    return out


def is_even(c: LinearCode) -> bool:
    return all(popcount(g) % 2 == 0 for g in c._rows)


def is_doubly_even(c: LinearCode) -> bool:
    """Generator criterion: weights divisible by 4 and pairwise overlaps even."""
    rows = c._rows
    if any(popcount(g) % 4 for g in rows):
        return False
    return all(popcount(a & b) % 2 == 0 for a, b in itertools.combinations(rows, 2))


def is_doubly_even_exhaustive(c: LinearCode) -> bool:
    return all(popcount(x) % 4 == 0 for x in _span_ints(c._basis))


def trivial_code(n: int) -> LinearCode:
    return LinearCode(n, (), name=f"t_{n}")


def d_code(n: int) -> LinearCode:
    if n < 4 or n % 2:
        raise ValueError(f"d_n needs even n >= 4, got {n}")
    rows = []
    for r in range(n // 2 - 1):
        rows.append(BitWord(0b1111 << (2 * r), n))
    return LinearCode(n, rows, name=f"d_{n}")


E7_ROWS = ("1111000", "0011110", "1010101")
E8_ROWS = ("11110000", "00111100", "00001111", "10101010")


def standard_code(name: str, n: Optional[int] = None) -> LinearCode:
    """One of ``t``, ``d``, ``e7``, ``e8``; names like ``"d_6"`` also accepted."""
    key = name.lower().replace("_", "")
    if key.startswith("t") or key.startswith("d"):
        family, suffix = key[0], key[1:]
        if suffix:
            if n is not None and int(suffix) != n:
                raise ValueError(f"{name} conflicts with n={n}")
            n = int(suffix)
        if n is None:
            raise ValueError(f"{name} needs a length")
        if n < 1:
            raise ValueError(f"invalid length {n}")
        return trivial_code(n) if family == "t" else d_code(n)
    if key == "e7":
        if n not in (None, 7):
            raise ValueError("e_7 has length 7")
        return LinearCode.from_strings(E7_ROWS, name="e_7")
    if key == "e8":
        if n not in (None, 8):
            raise ValueError("e_8 has length 8")
        return LinearCode.from_strings(E8_ROWS, name="e_8")
    raise ValueError(f"unknown code family {name!r}")


def direct_sum(*codes: LinearCode) -> LinearCode:
    """Concatenation code; generators of each summand padded into its block."""
    length = 0
    rows: List[BitWord] = []
    for c in codes:
        rows = [BitWord(r.bits, length + c.length) for r in rows]
        rows += [BitWord(r.bits << length, length + c.length) for r in c.rows]
        length += c.length
    name = " + ".join(c.name for c in codes) if all(c.name for c in codes) else ""
    return LinearCode(length, rows, name=name)


PERMUTATION_SEARCH_LIMIT = 10


def permutation_equivalent(c1: LinearCode, c2: LinearCode,
                           limit: int = PERMUTATION_SEARCH_LIMIT) -> bool:
    """Is there a column permutation carrying ``c1`` onto ``c2``?

    Backtracks over column images; partial assignments are pruned by
    requiring that every codeword of ``c1`` restricted to the assigned
    columns is matched by some codeword of ``c2``.
    """
    return find_column_permutation(c1, c2, limit) is not None


def find_column_permutation(c1: LinearCode, c2: LinearCode,
                            limit: int = PERMUTATION_SEARCH_LIMIT) -> Optional[Tuple[int, ...]]:
    if c1.length != c2.length:
        raise LengthMismatch(f"lengths differ: {c1.length} vs {c2.length}")
    n = c1.length
    if c1.dimension != c2.dimension or c1.weight_distribution() != c2.weight_distribution():
        return None
    if n > limit:
        raise BudgetExceeded(f"permutation search limited to n <= {limit}")
    words1 = c1.codeword_ints()
    words2 = c2.codeword_ints()
    # Column profile invariant: how many codewords of each weight touch a column.
    def profile(words, i):
        return tuple(sorted(popcount(x) for x in words if (x >> i) & 1))
    prof1 = [profile(words1, i) for i in range(n)]
    prof2 = [profile(words2, i) for i in range(n)]
    set2 = set(words2)
    perm = [-1] * n
    used = [False] * n

    def consistent(depth: int) -> bool:
        # Image of each c1 codeword on the first ``depth`` columns must be the
        # restriction of some c2 codeword to the image columns.
        mask2 = sum(1 << perm[i] for i in range(depth))
        restricted2 = {x & mask2 for x in set2}
        for x in words1:
            y = 0
            for i in range(depth):
                if (x >> i) & 1:
                    y |= 1 << perm[i]
            if y not in restricted2:
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        for j in range(n):
            if used[j] or prof1[depth] != prof2[j]:
                continue
            perm[depth] = j
            used[j] = True
            if consistent(depth + 1) and extend(depth + 1):
                return True
            used[j] = False
        perm[depth] = -1
        return False

    if extend(0):
        mapped = c1.permuted(perm)
        assert mapped == c2
        return tuple(perm)
    return None


def _doubly_even_words(n: int) -> List[int]:
    return [x for x in range(1, 1 << n) if popcount(x) % 4 == 0]


def enumerate_doubly_even(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> List[LinearCode]:
    """Every doubly even subspace of F2^n, sorted by (dimension, RREF rows).

    Codes are grown one generator at a time from the zero code; a candidate
    generator must have weight divisible by 4 and even overlap with every
    word already in the code. Results are deduplicated by RREF.
    """
    if n > limit:
        raise BudgetExceeded(f"exhaustive enumeration limited to n <= {limit}")
    if n < 0:
        raise ValueError(n)
    candidates = _doubly_even_words(n)
    found: Dict[Tuple[int, ...], LinearCode] = {}
    frontier = [LinearCode(n)]
    found[()] = frontier[0]
    while frontier:
        nxt = []
        for code in frontier:
            for w in candidates:
                if code.reduce(w) == 0:
                    continue
                if any(popcount(w & x) % 2 for x in code._basis):
                    continue
                new = LinearCode(n, [*code.rows, BitWord(w, n)])
                if new._basis not in found:
                    found[new._basis] = new
                    nxt.append(new)
        frontier = nxt
    return sorted(found.values(), key=lambda c: (c.dimension, c._basis))


# Largest doubly even code for each residue of n mod 8.
_RESIDUE_FAMILY = {0: None, 1: "t_1", 2: "t_2", 3: "t_3", 4: "d_4",
                   5: ("d_4", "t_1"), 6: "d_6", 7: "e_7"}


def _residue_codes(r: int) -> List[LinearCode]:
    fam = _RESIDUE_FAMILY[r]
    if fam is None:
        return []
    if isinstance(fam, tuple):
        return [standard_code(f) for f in fam]
    return [standard_code(fam)]


def max_code(n: int) -> LinearCode:
    """The tabulated maximal doubly even code: ``e_8`` blocks plus a residue."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q, r = divmod(n, 8)
    parts = [standard_code("e_8") for _ in range(q)] + _residue_codes(r)
    return direct_sum(*parts)


def max_doubly_even_dimension(n: int, mode: str = "constructive",
                              limit: int = DEFAULT_ENUMERATION_LIMIT) -> Tuple[int, LinearCode]:
    """Maximal dimension of a doubly even code of length ``n`` and a witness.

    ``mode="exhaustive"`` searches all codes (n <= limit) and returns the
    first maximal one in enumeration order.
    """
    if mode == "constructive":
        c = max_code(n)
        return c.dimension, c
    if mode == "exhaustive":
        codes = enumerate_doubly_even(n, limit)
        best = max(c.dimension for c in codes)
        witness = next(c for c in codes if c.dimension == best)
        return best, witness
    raise ValueError(f"unknown mode {mode!r}")
