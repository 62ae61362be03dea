import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from flagfaces.complexes import (
    Complex,
    Graph,
    ParseError,
    boundary_of_simplex,
    clique_complex,
    clique_fvector,
    fvector_of_complex,
    format_edge_list,
    is_flag,
    is_flag_by_cliques,
    is_flag_by_nonfaces,
    maximal_cliques,
    minimal_nonfaces,
    parse_edge_list,
    parse_facet_list,
    parse_fvector,
)

from oracles import brute_clique_fvector

EMPTY_TRIANGLE = Complex(3, ((0, 1), (0, 2), (1, 2)))
FULL_TRIANGLE = Complex(3, ((0, 1, 2),))
TWO_POINTS = Complex(2, ((0,), (1,)))


def cycle(m):
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def petersen():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


graphs = st.integers(0, 12).flatmap(
    lambda m: st.lists(st.booleans(), min_size=m * (m - 1) // 2, max_size=m * (m - 1) // 2).map(
        lambda bits: Graph.from_edges(m, [e for e, b in zip(combinations(range(m), 2), bits) if b])
    )
)


class TestCliqueFVector:
    def test_k4(self):
        assert clique_fvector(Graph.complete(4)) == (4, 6, 4, 1)

    def test_four_cycle(self):
        assert clique_fvector(cycle(4)) == (4, 4)

    def test_petersen(self):
        g = petersen()
        assert brute_clique_fvector(10, g.edges()) == (10, 15)
        assert clique_fvector(g) == (10, 15)

    def test_empty_graph(self):
        assert clique_fvector(Graph(0, ())) == ()

    def test_isolated_vertices(self):
        assert clique_fvector(Graph.from_edges(3, [])) == (3,)

    @settings(max_examples=150, deadline=None)
    @given(graphs)
    def test_matches_brute_force(self, g):
        assert clique_fvector(g) == brute_clique_fvector(g.m, g.edges())

    @given(graphs)
    def test_vertex_and_edge_counts(self, g):
        f = clique_fvector(g) + (0, 0)
        assert f[0] == g.m
        assert f[1] == len(g.edges())

    def test_dense_random_15(self):
        rng = random.Random(3)
        for _ in range(5):
            edges = [e for e in combinations(range(15), 2) if rng.random() < 0.6]
            g = Graph.from_edges(15, edges)
            assert clique_fvector(g) == brute_clique_fvector(15, edges)

    def test_wide_graph_beyond_machine_word(self):
        # 70 vertices falls back to arbitrary-width bitsets
        g = Graph.complete(70)
        f = clique_fvector(g)
        assert len(f) == 70 and f[34] == __import__("math").comb(70, 35)


class TestFVectorOfComplex:
    def test_empty_triangle(self):
        assert fvector_of_complex(EMPTY_TRIANGLE) == (3, 3)

    def test_full_triangle(self):
        assert fvector_of_complex(FULL_TRIANGLE) == (3, 3, 1)

    def test_two_points(self):
        assert fvector_of_complex(TWO_POINTS) == (2,)

    @settings(deadline=None)
    @given(graphs)
    def test_clique_complex_roundtrip(self, g):
        assert fvector_of_complex(clique_complex(g)) == clique_fvector(g)


class TestFlag:
    def test_empty_triangle(self):
        assert not is_flag(EMPTY_TRIANGLE)

    def test_full_triangle(self):
        assert is_flag(FULL_TRIANGLE)

    @settings(deadline=None)
    @given(graphs)
    def test_clique_complexes_are_flag(self, g):
        c = clique_complex(g)
        assert is_flag_by_cliques(c) and is_flag_by_nonfaces(c)

    @pytest.mark.parametrize("k", range(3, 8))
    def test_boundaries_not_flag(self, k):
        c = boundary_of_simplex(k)
        assert not is_flag_by_cliques(c) and not is_flag_by_nonfaces(c)

    def test_characterisations_agree_on_random_complexes(self):
        rng = random.Random(11)
        for _ in range(200):
            m = rng.randint(1, 6)
            faces = [tuple(v for v in range(m) if rng.random() < 0.5) for _ in range(rng.randint(1, 5))]
            faces = [f for f in faces if f] + [(v,) for v in range(m)]
            c = Complex.from_faces(m, faces)
            assert is_flag_by_cliques(c) == is_flag_by_nonfaces(c)


class TestMinimalNonfaces:
    def test_empty_triangle(self):
        assert minimal_nonfaces(EMPTY_TRIANGLE, 3) == {(0, 1, 2)}

    def test_full_triangle(self):
        assert minimal_nonfaces(FULL_TRIANGLE, 3) == set()

    def test_two_points(self):
        assert minimal_nonfaces(TWO_POINTS, 2) == {(0, 1)}

    def test_size_bound(self):
        assert minimal_nonfaces(EMPTY_TRIANGLE, 2) == set()
        with pytest.raises(ValueError):
            minimal_nonfaces(EMPTY_TRIANGLE, 4)

    @settings(deadline=None)
    @given(graphs)
    def test_flag_nonfaces_are_nonedges(self, g):
        c = clique_complex(g)
        nonedges = {e for e in combinations(range(g.m), 2) if not g.has_edge(*e)}
        assert minimal_nonfaces(c, g.m) == nonedges


class TestBoundary:
    @pytest.mark.parametrize("k,f", [(2, (2,)), (3, (3, 3)), (4, (4, 6, 4))])
    def test_fvectors(self, k, f):
        assert fvector_of_complex(boundary_of_simplex(k)) == f

    def test_too_small(self):
        with pytest.raises(ValueError):
            boundary_of_simplex(1)


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(2, (0b01, 0))

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    @given(graphs)
    def test_encode_roundtrip(self, g):
        assert Graph.decode(g.encode()) == g

    def test_maximal_cliques_k4_minus_edge(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert maximal_cliques(g) == [(0, 1, 2), (0, 1, 3)]


class TestParsing:
    def test_edge_list(self):
        g = parse_edge_list("# comment\n\n4\n0 1\n1 2\n2 3\n0 3\n")
        assert clique_fvector(g) == (4, 4)

    def test_single_vertex(self):
        assert clique_fvector(parse_edge_list("1\n")) == (1,)

    def test_roundtrip(self):
        g = petersen()
        assert parse_edge_list(format_edge_list(g)) == g

    @pytest.mark.parametrize(
        "text,lineno,msg",
        [
            ("3\n0 1\n0 1\n", 3, "duplicate"),
            ("3\n1 0\n", 2, "violates"),
            ("3\n0 3\n", 2, "violates"),
            ("3\n0 x\n", 2, "integer"),
            ("3\n0 1 2\n", 2, "expected"),
            ("3 4\n", 1, "vertex count"),
        ],
    )
    def test_edge_list_errors(self, text, lineno, msg):
        with pytest.raises(ParseError, match=msg) as info:
            parse_edge_list(text)
        assert info.value.lineno == lineno

    def test_missing_header(self):
        with pytest.raises(ParseError, match="missing"):
            parse_edge_list("# nothing\n")

    def test_facet_list(self):
        c = parse_facet_list("3\n0 1\n1 2\n0 2\n")
        assert c == EMPTY_TRIANGLE

    @pytest.mark.parametrize(
        "text,lineno,msg",
        [
            ("3\n0 1 2\n0 1\n", 3, "dominated"),
            ("3\n1 0\n", 2, "strictly increasing"),
            ("3\n0 3\n", 2, "outside"),
        ],
    )
    def test_facet_list_errors(self, text, lineno, msg):
        with pytest.raises(ParseError, match=msg) as info:
            parse_facet_list(text)
        assert info.value.lineno == lineno

    def test_facet_list_ghost_vertex(self):
        with pytest.raises(ParseError, match="ghost"):
            parse_facet_list("3\n0 1\n")

    def test_fvector(self):
        assert parse_fvector("3, 3,1") == (3, 3, 1)
        assert parse_fvector("") == ()
        with pytest.raises(ParseError):
            parse_fvector("3,a")
