import itertools

import pytest

from cliffordinkra.construct import QuotientSpec, cube, quotient
from cliffordinkra.f2code import LinearCode, enumerate_doubly_even, max_code, standard_code
from cliffordinkra.geometry import Rainbow, SurfaceStats, genus_formula, geometrize
from cliffordinkra.graph import Cliffordinkra, GraphError

from conftest import load_figure


def orbit_count(g, colors):
    """Components of the subgraph spanned by the given colors."""
    seen, count = set(), 0
    for v in range(g.num_vertices):
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for c in colors:
                y = g.partner[c - 1][x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def genus_by_orbits(g, order):
    faces = sum(orbit_count(g, (order[k], order[(k + 1) % len(order)])) for k in range(len(order)))
    chi = g.num_vertices - g.n * g.num_vertices // 2 + faces
    return (2 - chi) // 2


def test_rainbow_equality():
    assert Rainbow([1, 2, 3, 4]) == Rainbow([3, 4, 1, 2]) == Rainbow([4, 3, 2, 1])
    assert Rainbow([1, 2, 3, 4]) != Rainbow([1, 3, 2, 4])
    assert Rainbow.parse("2, 1, 3").canonical() == (1, 2, 3)
    assert Rainbow.standard(3).adjacent_pairs() == {frozenset(p) for p in ((1, 2), (2, 3), (1, 3))}
    with pytest.raises(ValueError):
        Rainbow([1, 1, 2])
    distinct = {Rainbow(p) for p in itertools.permutations(range(1, 6))}
    assert len(distinct) == 12


def test_three_cube_is_a_sphere():
    s = geometrize(cube(3), [1, 2, 3])
    assert (s.V, s.E, s.F, s.euler, s.genus) == (8, 12, 6, 2, 0)
    assert s.record() == "V=8 E=12 F=6 chi=2 genus=0"


@pytest.mark.parametrize("graph", [lambda: cube(4), lambda: load_figure("fig2_four_colors")])
def test_four_colors_give_tori(graph):
    g = graph()
    # Black, red, green, blue in the standard numbering is 1, 2, 4, 3.
    assert geometrize(g, [1, 2, 4, 3]).genus == 1
    for order in itertools.permutations(range(1, 5)):
        assert geometrize(g, order).genus == 1


@pytest.mark.parametrize("n", range(3, 9))
def test_cell_counts_match_closed_forms(n):
    code = max_code(n)
    k = code.dimension
    g = quotient(QuotientSpec.make(n, code))
    s = geometrize(g, Rainbow.standard(n))
    assert s.V == 2 ** (n - k)
    assert s.E == n * 2 ** (n - k - 1)
    assert s.F * 4 == n * 2 ** (n - k)
    assert s.genus == genus_formula(n, k) == genus_by_orbits(g, list(range(1, n + 1)))


@pytest.mark.parametrize("n", range(3, 8))
def test_every_code_and_rainbow_against_orbit_count(n):
    rainbows = sorted({Rainbow(p).canonical() for p in itertools.permutations(range(1, n + 1))})
    for code in enumerate_doubly_even(n)[::7]:
        g = quotient(QuotientSpec.make(n, code))
        for order in rainbows[:6]:
            s = geometrize(g, order)
            assert s.genus == genus_by_orbits(g, order) == genus_formula(n, code.dimension)


def test_genus_formula_values():
    assert [genus_formula(n, max_code(n).dimension) for n in range(3, 9)] == [0, 1, 3, 5, 7, 9]
    assert genus_formula(4, 0) == genus_formula(4, 1) == 1
    assert genus_formula(3, 0) == 0
    assert genus_formula(2, 0) == 0


def test_faces_cover_each_edge_twice():
    g = quotient(QuotientSpec.make(6, standard_code("d_6")))
    s = geometrize(g, [1, 2, 3, 4, 5, 6])
    assert isinstance(s, SurfaceStats) and len(s.faces) == s.F
    d = s.to_dict(with_faces=True)
    assert len(d["faces"]) == s.F and set(d) >= {"V", "E", "F", "euler", "genus"}


def test_geometrize_preconditions():
    with pytest.raises(ValueError):
        geometrize(cube(2), [1, 2])
    with pytest.raises(ValueError):
        geometrize(cube(3), [1, 2, 3, 4])
    g = quotient(QuotientSpec.make(4, standard_code("d_4")))
    from test_graph import _disjoint
    with pytest.raises(GraphError):
        geometrize(_disjoint(g, g), [1, 2, 3, 4])
