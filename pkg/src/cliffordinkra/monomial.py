"""Signed Clifford monomials in Cl(0,n) and symbolic right projectors.

``SignedMonomial(sign, x)`` stands for ``sign * G_1^x_1 ... G_n^x_n`` with
factors in ascending index order. Every generator squares to +1 and distinct
generators anticommute.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Tuple

from .f2code import BitWord, LengthMismatch, WordLike, as_word
from .f2linalg import popcount


@dataclass(frozen=True)
class SignedMonomial:
    sign: int
    word: BitWord

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def of(cls, word: WordLike, sign: int = 1) -> "SignedMonomial":
        return cls(sign, as_word(word))

    @classmethod
    def parse(cls, text: str) -> "SignedMonomial":
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        body = text.lstrip("+-")
        if not body.startswith("G_"):
            raise ValueError(f"expected '+G_<bits>', got {text!r}")
        return cls(sign, BitWord.parse(body[2:]))

    @property
    def n(self) -> int:
        return self.word.n

    def __neg__(self) -> "SignedMonomial":
        return SignedMonomial(-self.sign, self.word)

    def __mul__(self, other: "SignedMonomial") -> "SignedMonomial":
        return multiply(self, other)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}G_{self.word}"


def reorder_sign(x: int, y: int) -> int:
    """Sign picked up normalizing ``G_x G_y``.

    Each generator ``j`` of ``y`` moves left past every generator ``i > j``
    of ``x``; repeated indices then cancel with no further sign.
    """
    swaps = 0
    while y:
        low = y & -y
        j = low.bit_length() - 1
        swaps += popcount(x >> (j + 1))
        y ^= low
    return -1 if swaps & 1 else 1


def multiply(a: SignedMonomial, b: SignedMonomial) -> SignedMonomial:
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    sign = a.sign * b.sign * reorder_sign(a.word.bits, b.word.bits)
    return SignedMonomial(sign, BitWord(a.word.bits ^ b.word.bits, a.n))


def square_sign(x: WordLike) -> int:
    """Sign of ``G_x G_x``: +1 when wt(x) is 0 or 1 mod 4, else -1."""
    return 1 if as_word(x).weight % 4 in (0, 1) else -1


def left_gamma_sign(i: int, x: int) -> int:
    """Sign in ``G_i G_x = +/- G_{x + e_i}`` for a 0-based color ``i``."""
    return -1 if popcount(x & ((1 << i) - 1)) & 1 else 1


def left_gamma(i: int, m: SignedMonomial) -> SignedMonomial:
    """Left multiplication by generator ``i`` (1-based, as colors are printed)."""
    if not 1 <= i <= m.n:
        raise IndexError(f"color {i} out of range 1..{m.n}")
    bits = m.word.bits
    sign = m.sign * left_gamma_sign(i - 1, bits)
    return SignedMonomial(sign, BitWord(bits ^ (1 << (i - 1)), m.n))


class ProjectorError(ValueError):
    pass


@dataclass(frozen=True)
class Projector:
    """``(1 + s G_x) / 2`` acting by right multiplication, kept symbolic."""

    word: BitWord
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.word.weight % 4:
            raise ProjectorError(f"weight of {self.word} is not a multiple of 4")

    def __str__(self) -> str:
        return f"pi_{self.word},{'+' if self.sign > 0 else '-'}"


def parse_signs(signs) -> Tuple[int, ...]:
    """Accept ``"+-"``, ``["+", "-"]`` or ``[1, -1]``."""
    out = []
    for s in signs:
        if s in ("+", 1, "+1"):
            out.append(1)
        elif s in ("-", -1, "-1"):
            out.append(-1)
        else:
            raise ValueError(f"bad sign {s!r}")
    return tuple(out)


@dataclass(frozen=True)
class ProjectorProduct:
    """Ordered product of commuting projectors; never expanded."""

    factors: Tuple[Projector, ...]
    n: int

    @property
    def generators(self) -> Tuple[BitWord, ...]:
        return tuple(p.word for p in self.factors)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(p.sign for p in self.factors)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.factors) or "1"


def projector_product(generators: Sequence[WordLike], signs, n: int = None) -> ProjectorProduct:
    gens = [as_word(g) for g in generators]
    sgn = parse_signs(signs)
    if len(gens) != len(sgn):
        raise ValueError(f"{len(gens)} generators but {len(sgn)} signs")
    if n is None:
        if not gens:
            raise ValueError("n required when there are no generators")
        n = gens[0].n
    for g in gens:
        if g.n != n:
            raise LengthMismatch(f"generator {g} has length {g.n}, expected {n}")
    factors = tuple(Projector(g, s) for g, s in zip(gens, sgn))
    for g, h in itertools.combinations(gens, 2):
        if (g & h).weight % 2:
            raise ProjectorError(f"projectors for {g} and {h} do not commute")
    return ProjectorProduct(factors, n)
