"""Bit-packed linear algebra over F2.

Vectors are Python ints; bit ``j`` holds coordinate ``j``. A matrix is a list
of row ints together with its column count.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple


def popcount(x: int) -> int:
    return bin(x).count("1")


def echelon(rows: Iterable[int]) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form.

    Returns ``(basis, pivots)`` where ``basis[r]`` has its lowest set bit at
    ``pivots[r]`` and no other basis row has that bit set.
    """
    basis: List[int] = []
    pivots: List[int] = []
    for row in rows:
        for b, p in zip(basis, pivots):
            if (row >> p) & 1:
                row ^= b
        if not row:
            continue
        p = (row & -row).bit_length() - 1
        for i, b in enumerate(basis):
            if (b >> p) & 1:
                basis[i] = b ^ row
        basis.append(row)
        pivots.append(p)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [basis[i] for i in order], [pivots[i] for i in order]


def rank(rows: Iterable[int]) -> int:
    return len(echelon(rows)[0])


def reduce_vector(vec: int, basis: Sequence[int], pivots: Sequence[int]) -> int:
    """Remainder of ``vec`` after clearing the pivot bits of an echelon basis."""
    for b, p in zip(basis, pivots):
        if (vec >> p) & 1:
            vec ^= b
    return vec


def in_span(vec: int, rows: Iterable[int]) -> bool:
    basis, pivots = echelon(rows)
    return reduce_vector(vec, basis, pivots) == 0


def transpose(rows: Sequence[int], n_cols: int) -> List[int]:
    cols = [0] * n_cols
    for r, row in enumerate(rows):
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= 1 << r
            row ^= low
    return cols


def solve(rows: Sequence[int], n_cols: int, rhs: int) -> Optional[int]:
    """Find ``x`` with ``A x = rhs`` where ``A`` has the given rows.

    ``rhs`` packs one bit per row. Returns ``None`` when inconsistent.
    """
    # Augment each row with its right-hand-side bit above the last column.
    aug_bit = 1 << n_cols
    aug = [row | (aug_bit if (rhs >> r) & 1 else 0) for r, row in enumerate(rows)]
    basis, pivots = echelon(aug)
    x = 0
    for b, p in zip(basis, pivots):
        if p == n_cols:
            return None
        if b & aug_bit:
            x |= 1 << p
    return x


def nullspace(rows: Sequence[int], n_cols: int) -> List[int]:
    """Basis of ``{x : A x = 0}``."""
    basis, pivots = echelon(rows)
    pivot_set = set(pivots)
    kernel = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for b, p in zip(basis, pivots):
            if (b >> free) & 1:
                v |= 1 << p
        kernel.append(v)
    return kernel


def matvec(rows: Sequence[int], x: int) -> int:
    out = 0
    for r, row in enumerate(rows):
        if popcount(row & x) & 1:
            out |= 1 << r
    return out


def matmul(a_rows: Sequence[int], b_rows: Sequence[int], b_cols: int) -> List[int]:
    """Product ``A B`` where ``B`` has ``len(b_rows)`` rows and ``b_cols`` columns."""
    b_t = transpose(b_rows, b_cols)
    return [matvec(b_t, row) for row in a_rows]
