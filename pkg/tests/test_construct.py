import functools
import itertools

import numpy as np
import pytest

from cliffordinkra import construct
from cliffordinkra.construct import (QuotientSpec, clpq_code_ok, clpq_cube, clpq_matrices,
                                     clpq_quotient, clpq_reorder_sign, clpq_square_sign,
                                     clpq_validate, coset_representative, cube, identify,
                                     identification_pairs, minimal_representation, quotient,
                                     quotient_topology, recover_code)
from cliffordinkra.f2code import (BitWord, LinearCode, enumerate_doubly_even, max_code,
                                  standard_code)
from cliffordinkra.graph import GraphError, to_matrices, validate, verify_clifford

from test_monomial import bubble_sign


@functools.lru_cache(maxsize=None)
def regular_algebra(n, negative_squares=0):
    """Left and right multiplication matrices on the basis G_x of the algebra."""
    dim = 1 << n

    def mult(x, y):
        return bubble_sign(x, y, n, negative_squares), x ^ y

    left, right = [], []
    for g in range(dim):
        lm = np.zeros((dim, dim), dtype=int)
        rm = np.zeros((dim, dim), dtype=int)
        for y in range(dim):
            s, z = mult(g, y)
            lm[z, y] = s
            s, z = mult(y, g)
            rm[z, y] = s
        left.append(lm)
        right.append(rm)
    return left, right


def projected_edges(n, code, signs, negative_squares=0):
    """For each generator i and representative r, G_i (G_r pi) = s * G_r' pi."""
    left, right = regular_algebra(n, negative_squares)
    dim = 1 << n
    proj = np.eye(dim, dtype=float)
    for g, s in zip(code.rows, signs):
        proj = proj @ (np.eye(dim) + s * right[g.bits]) / 2
    reps = sorted({coset_representative(code, x) for x in range(dim)})
    # Entries are multiples of 2^-k, so scaled vectors are exact integer keys.
    scale = 2 ** code.dimension

    def key(v):
        return tuple(np.rint(v * scale).astype(int))

    lookup = {}
    for t in reps:
        for s in (1, -1):
            assert key(s * proj[:, t]) not in lookup
            lookup[key(s * proj[:, t])] = (s, t)
    return {(i, r): lookup[key(left[1 << i] @ proj[:, r])] for i in range(n) for r in reps}


def graph_edges(g, n):
    words = {v: BitWord.parse(lab).bits for v, lab in enumerate(g.labels)}
    out = {}
    for i in range(n):
        for v, x in words.items():
            out[(i, x)] = (-1 if g.dashed[i][v] else 1, words[g.partner[i][v]])
    return out


def all_sign_vectors(k):
    return list(itertools.product((1, -1), repeat=k))


# -- cube ---------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_cube_is_valid(n):
    g = cube(n)
    assert g.num_vertices == 2 ** n
    assert validate(g).ok
    assert recover_code(g) == LinearCode(n)
    assert verify_clifford(to_matrices(g))


def test_cube_labels_and_parity():
    g = cube(2)
    assert g.labels == ("00", "11", "01", "10")
    assert g.parity == ("b", "b", "f", "f")
    with pytest.raises(ValueError):
        cube(0)


@pytest.mark.parametrize("n", range(1, 5))
def test_cube_matches_left_regular_action(n):
    assert graph_edges(cube(n), n) == projected_edges(n, LinearCode(n), ())


# -- quotients against the projected regular representation -------------------


@pytest.mark.parametrize("n", [4, 5, 6])
def test_quotients_match_projection_oracle(n):
    for code in enumerate_doubly_even(n):
        if code.dimension == 0:
            continue
        for signs in all_sign_vectors(code.dimension):
            g = quotient(QuotientSpec.make(n, code, signs))
            assert graph_edges(g, n) == projected_edges(n, code, signs), (code, signs)


def test_e7_and_e8_match_projection_oracle():
    for name in ("e_7", "e_8"):
        code = standard_code(name)
        for signs in [(1,) * code.dimension, (-1,) + (1,) * (code.dimension - 1)]:
            g = quotient(QuotientSpec.make(code.length, code, signs))
            assert graph_edges(g, code.length) == projected_edges(code.length, code, signs)


# The printed sign lists for the two d4 quotients: (y, sign, y + 1111).
A_LIST = [("0000", 1, "1111"), ("0011", -1, "1100"), ("0101", 1, "1010"), ("0110", -1, "1001"),
          ("0001", -1, "1110"), ("0010", 1, "1101"), ("0100", -1, "1011"), ("1000", 1, "0111")]
B_LIST = [("0000", -1, "1111"), ("0011", 1, "1100"), ("0101", -1, "1010"), ("0110", 1, "1001"),
          ("0001", 1, "1110"), ("0010", -1, "1101"), ("0100", 1, "1011"), ("1000", -1, "0111")]


@pytest.mark.parametrize("signs,table", [("+", A_LIST), ("-", B_LIST)])
def test_d4_identifications(signs, table):
    spec = QuotientSpec.make(4, standard_code("d_4"), signs)
    pairs = {(str(y), str(z)): s for y, s, z in identification_pairs(spec)}
    for y, s, z in table:
        assert pairs[(y, z)] == s
        assert pairs[(z, y)] == s


def test_identify_returns_representative():
    spec = QuotientSpec.make(4, standard_code("d_4"), "+")
    assert identify(spec, "1111") == (1, BitWord.parse("0000"))
    assert identify(spec, "1110") == (-1, BitWord.parse("0001"))
    assert identify(spec, "0011") == (1, BitWord.parse("0011"))


def test_quotient_spec_json():
    spec = QuotientSpec.make(6, standard_code("d_6"), "+-")
    assert spec.to_json() == '{"code": ["111100", "001111"], "n": 6, "signs": "+-"}'
    assert QuotientSpec.from_json(spec.to_json()) == spec


def test_quotient_spec_rejects_bad_codes():
    with pytest.raises(ValueError):
        QuotientSpec.make(6, LinearCode.from_strings(["110000"]))
    with pytest.raises(ValueError):
        QuotientSpec.make(4, standard_code("d_4"), "+-")
    with pytest.raises(ValueError):
        QuotientSpec.make(5, standard_code("d_4"))


@pytest.mark.parametrize("n", range(1, 9))
def test_recover_code_all_small_codes(n):
    codes = enumerate_doubly_even(n)
    for code in codes[:: max(1, len(codes) // 40)]:
        for signs in all_sign_vectors(code.dimension)[:4]:
            g = quotient(QuotientSpec.make(n, code, signs))
            assert recover_code(g) == code
            assert recover_code(g, g.num_vertices - 1) == code


def test_recover_code_needs_connected_graph():
    g = quotient(QuotientSpec.make(4, standard_code("d_4"), "+"))
    from test_graph import _disjoint
    with pytest.raises(GraphError):
        recover_code(_disjoint(g, g))


def test_quotient_topology_for_non_doubly_even_code():
    g = quotient_topology(4, ["1100"])
    assert g.num_vertices == 8
    assert recover_code(g) == LinearCode.from_strings(["1100"])
    assert "totally_odd" in validate(g).rules()


# -- minimal representations ---------------------------------------------------


def test_minimal_representation_dimensions():
    dims = [minimal_representation(n).dimension for n in range(1, 17)]
    assert dims == [2, 4, 8, 8, 16, 16, 16, 16, 32, 64, 128, 128, 256, 256, 256, 256]


@pytest.mark.parametrize("n", range(1, 11))
def test_minimal_representation_relations(n):
    rep = minimal_representation(n)
    assert rep.code == max_code(n)
    assert verify_clifford(rep.matrices)
    assert validate(rep.graph).ok
    assert recover_code(rep.graph) == rep.code


# -- other signatures ---------------------------------------------------------


@pytest.mark.parametrize("p", range(0, 4))
def test_clpq_sign_against_bubble_oracle(p):
    n = 4
    sign_of = clpq_reorder_sign(p)
    for x, y in itertools.product(range(1 << n), repeat=2):
        assert sign_of(x, y) == bubble_sign(x, y, n, negative_squares=p)
    for x in range(1 << n):
        assert clpq_square_sign(x, p) == bubble_sign(x, x, n, negative_squares=p)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5) if 1 <= p + q <= 4])
def test_clpq_cubes(p, q):
    g = clpq_cube(p, q)
    assert clpq_validate(g, p, q).ok
    mats = clpq_matrices(g, p, q)
    assert verify_clifford(mats, (p, q))
    for m in mats:
        assert m.is_graded(len(g.bosons))


def test_cl10_matrix():
    assert clpq_matrices(clpq_cube(1, 0), 1, 0)[0].to_rows() == [[0, -1], [1, 0]]


@pytest.mark.parametrize("p,q,code", [
    (2, 2, ["1111"]), (4, 0, ["1111"]), (0, 4, ["1111"]),
    (4, 2, ["111100"]), (3, 3, ["111111"]), (2, 4, ["110011"]),
])
def test_clpq_quotients(p, q, code):
    c = LinearCode(p + q, code)
    assert clpq_code_ok(c, p)
    for signs in ("+", "-"):
        g = clpq_quotient(p, q, c, signs)
        assert g.num_vertices == 2 ** (p + q - 1)
        assert clpq_validate(g, p, q).ok
        assert verify_clifford(clpq_matrices(g, p, q), (p, q))


def test_clpq_projection_oracle():
    for p, q, code in ((2, 2, ["1111"]), (4, 0, ["1111"]), (2, 3, ["11110"])):
        c = LinearCode(p + q, code)
        for s in (1, -1):
            g = clpq_quotient(p, q, c, [s])
            mats = clpq_matrices(g, p, q, order=range(g.num_vertices))
            words = [BitWord.parse(lab).bits for lab in g.labels]
            oracle = projected_edges(p + q, c, [s], negative_squares=p)
            for i, m in enumerate(mats):
                for col, x in enumerate(words):
                    sign, target = oracle[(i, x)]
                    assert words[m.perm[col]] == target
                    assert m.signs[col] == sign


def test_clpq_rejects_bad_codes():
    with pytest.raises(ValueError):
        clpq_quotient(1, 3, ["1111"])
    with pytest.raises(ValueError):
        clpq_quotient(2, 2, ["1100"])
    with pytest.raises(ValueError):
        # Split weights (1, 1) agree, but the fold is a digon.
        clpq_quotient(1, 1, ["11"])


def test_clpq_validate_flags_wrong_signature():
    g = clpq_quotient(2, 2, ["1111"])
    assert not clpq_validate(g, 0, 4).ok
    assert "mixed_even" in clpq_validate(g, 0, 4).rules() or \
        "totally_odd" in clpq_validate(g, 0, 4).rules()
    assert "code_split" in clpq_validate(quotient(QuotientSpec.make(4, standard_code("d_4"))), 1, 3).rules()
