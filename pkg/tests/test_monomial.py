import itertools

import pytest
from hypothesis import given, strategies as st

from cliffordinkra.f2code import BitWord, LengthMismatch
from cliffordinkra.monomial import (Projector, ProjectorError, SignedMonomial, left_gamma,
                                    left_gamma_sign, multiply, parse_signs, projector_product,
                                    reorder_sign, square_sign)


def bubble_sign(x: int, y: int, n: int, negative_squares: int = 0) -> int:
    """Sign of G_x G_y by literally sorting the generator word.

    Adjacent distinct generators anticommute; then equal neighbours cancel,
    contributing -1 for generators numbered below ``negative_squares``.
    """
    seq = [i for i in range(n) if x >> i & 1] + [j for j in range(n) if y >> j & 1]
    sign = 1
    for end in range(len(seq) - 1, 0, -1):
        for k in range(end):
            if seq[k] > seq[k + 1]:
                seq[k], seq[k + 1] = seq[k + 1], seq[k]
                sign = -sign
    k = 0
    while k < len(seq) - 1:
        if seq[k] == seq[k + 1]:
            if seq[k] < negative_squares:
                sign = -sign
            del seq[k:k + 2]
        else:
            k += 1
    assert sum(1 << i for i in seq) == x ^ y
    return sign


@pytest.mark.parametrize("n", range(1, 6))
def test_reorder_sign_exhaustive(n):
    for x, y in itertools.product(range(1 << n), repeat=2):
        assert reorder_sign(x, y) == bubble_sign(x, y, n), (n, x, y)


words = st.integers(1, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1)))


@given(words)
def test_reorder_sign_random(case):
    n, x, y = case
    assert reorder_sign(x, y) == bubble_sign(x, y, n)


@given(words, st.data())
def test_multiplication_is_associative(case, data):
    n, x, y = case
    z = data.draw(st.integers(0, (1 << n) - 1))
    a, b, c = (SignedMonomial.of(BitWord(w, n)) for w in (x, y, z))
    assert (a * b) * c == a * (b * c)


def test_printed_examples():
    a = SignedMonomial.parse("+G_0011")
    b = SignedMonomial.parse("+G_1111")
    assert str(a * b) == "-G_1100"
    assert str(SignedMonomial.parse("+G_0001") * b) == "-G_1110"
    assert str(SignedMonomial.parse("-G_01") * SignedMonomial.parse("+G_10")) == "+G_11"
    assert str(-a) == "-G_0011"


def test_square_sign():
    for n in range(1, 7):
        for x in range(1 << n):
            w = BitWord(x, n)
            assert square_sign(w) == (SignedMonomial.of(w) * SignedMonomial.of(w)).sign
    assert square_sign("1111") == 1 and square_sign("11") == -1 and square_sign("111") == -1


def test_generators_anticommute():
    n = 5
    for i, j in itertools.combinations(range(n), 2):
        gi, gj = SignedMonomial.of(BitWord.unit(i, n)), SignedMonomial.of(BitWord.unit(j, n))
        assert gi * gj == -(gj * gi)


def test_left_gamma_matches_multiply():
    n = 6
    for x in range(1 << n):
        m = SignedMonomial.of(BitWord(x, n), -1)
        for i in range(1, n + 1):
            expected = SignedMonomial.of(BitWord.unit(i - 1, n)) * m
            assert left_gamma(i, m) == expected
            assert left_gamma_sign(i - 1, x) == reorder_sign(1 << (i - 1), x)
    with pytest.raises(IndexError):
        left_gamma(0, SignedMonomial.of("01"))


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        SignedMonomial.of("01") * SignedMonomial.of("011")


def test_parse_errors():
    with pytest.raises(ValueError):
        SignedMonomial.parse("+H_01")
    with pytest.raises(ValueError):
        SignedMonomial(2, BitWord.parse("01"))


def test_parse_signs():
    assert parse_signs("+-+") == (1, -1, 1)
    assert parse_signs([1, -1]) == (1, -1)
    assert parse_signs(["-"]) == (-1,)
    with pytest.raises(ValueError):
        parse_signs("+x")


def test_projector_needs_weight_multiple_of_four():
    with pytest.raises(ProjectorError):
        Projector(BitWord.parse("110000"), 1)
    assert str(Projector(BitWord.parse("1111"), -1)) == "pi_1111,-"


def test_projector_product():
    pp = projector_product(["111100", "001111"], "+-")
    assert pp.signs == (1, -1) and [str(g) for g in pp.generators] == ["111100", "001111"]
    assert str(pp) == "pi_111100,+ pi_001111,-"
    with pytest.raises(ProjectorError):
        # Overlap of weight 1 makes the projectors anticommute.
        projector_product(["11110000", "10001110"], "++")
    with pytest.raises(ValueError):
        projector_product(["1111"], "+-")
    assert str(projector_product([], "", n=3)) == "1"
