import random

import pytest

from chiptree import Divisor, FormatError, MultiGraph, TreeDecomposition
from chiptree.fixtures import banana_graph, c4_to_p3_morphism, example_graph
from chiptree.formats import (
    parse_divisor,
    parse_document,
    parse_gr,
    parse_graph_auto,
    parse_morphism,
    parse_refinement_map,
    parse_td,
    write_divisor,
    write_document,
    write_gr,
    write_morphism,
    write_refinement_map,
    write_td,
)

from conftest import random_connected_multigraph, random_refinement


class TestGr:
    def test_parse_simple(self):
        g = parse_gr("c a comment\np tw 3 2\n1 2\n2 3\n")
        assert g.n == 3 and g.num_edges == 2

    def test_duplicate_lines_stack(self):
        g = parse_gr("p tw 2 3\n1 2\n1 2\n2 1\n")
        assert g.multiplicity(0, 1) == 3

    def test_roundtrip_random(self):
        rng = random.Random(17)
        for _ in range(15):
            g = random_connected_multigraph(rng, rng.randint(2, 7))
            back = parse_gr(write_gr(g))
            assert back.n == g.n
            assert back.edge_list == g.edge_list

    def test_roundtrip_single_vertex(self):
        g = MultiGraph(1, [])
        assert parse_gr(write_gr(g)).n == 1

    @pytest.mark.parametrize("text", [
        "",
        "p tw x y\n",
        "p cep 2 1\n1 2\n",
        "p tw 2 1\n1 2 3\n",
        "p tw 2 1\n1 3\n",
        "p tw 2 2\n1 2\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_gr(text)


class TestTd:
    def test_parse_simple(self):
        td = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n")
        assert td.bags == [frozenset({0, 1}), frozenset({1, 2})]
        assert td.tree_edges == [(0, 1)]

    def test_empty_bag_allowed(self):
        td = parse_td("s td 1 0 2\nb 1\n")
        assert td.bags == [frozenset()]

    def test_roundtrip(self):
        td = TreeDecomposition(
            [frozenset({0, 1}), frozenset({1, 2}), frozenset()],
            [(0, 1), (1, 2)],
        )
        assert parse_td(write_td(td, 3)) == td

    @pytest.mark.parametrize("text", [
        "",
        "s td 2 2\n",
        "s td 1 1 2\nb 2 1\n",
        "s td 1 1 2\nb 1 3\n",
        "s td 2 1 2\nb 1 1\nb 2 2\n1 5\n",
        "s td 2 1 2\nb 1 1\n1 2\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_td(text)


class TestDivisorText:
    def test_sparse_parse(self):
        g = example_graph()
        d = parse_divisor("a:3", g)
        assert d == Divisor.single(7, 0, 3)

    def test_tokens_accumulate(self):
        g = example_graph()
        assert parse_divisor("a:1 a:2 b:1", g)[0] == 3

    def test_roundtrip(self):
        g = example_graph()
        d = parse_divisor("b:2 g:1", g)
        assert parse_divisor(write_divisor(d, g), g) == d

    def test_unlabeled_graph_uses_numbers(self):
        g = MultiGraph(3, [(0, 1), (1, 2)])
        assert parse_divisor("0:1 2:4", g) == Divisor((1, 0, 4))

    def test_bad_tokens(self):
        g = example_graph()
        with pytest.raises(FormatError):
            parse_divisor("a=3", g)
        with pytest.raises(FormatError):
            parse_divisor("a:x", g)


class TestDocument:
    def test_parse_with_divisor(self):
        g, d = parse_document(
            "format chiptree/1\nvertices a b\nedge a b\ndivisor a:2\n"
        )
        assert g.n == 2 and d == Divisor((2, 0))

    def test_dense_divisor(self):
        _, d = parse_document(
            "format chiptree/1\nvertices a b c\nedge a b\ndivisor-dense 1 0 2\n"
        )
        assert d == Divisor((1, 0, 2))

    def test_roundtrip_example(self, fixture_graph, fixture_divisor):
        text = write_document(fixture_graph, fixture_divisor)
        g, d = parse_document(text)
        assert g.edge_list == fixture_graph.edge_list
        assert [g.vertex_name(v) for v in range(g.n)] == list("abcdefg")
        assert d == fixture_divisor

    @pytest.mark.parametrize("text", [
        "vertices a b\n",
        "format chiptree/2\nvertices a\n",
        "format chiptree/1\nedge a b\n",
        "format chiptree/1\nvertices a b\nedge a c\n",
        "format chiptree/1\nvertices a b\nfrobnicate\n",
        "format chiptree/1\nvertices a b\ndivisor-dense 1\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_document(text)


class TestAutoDispatch:
    def test_detects_document(self):
        g, d = parse_graph_auto("format chiptree/1\nvertices a b\nedge a b\n")
        assert g.vertex_name(0) == "a" and d is None

    def test_detects_gr(self):
        g, d = parse_graph_auto("p tw 2 1\n1 2\n")
        assert g.n == 2 and d is None


class TestMorphismText:
    def test_roundtrip_fold(self):
        g, t, f = c4_to_p3_morphism()
        assert parse_morphism(write_morphism(f, g, t), g, t) == f

    def test_missing_edge_rejected(self):
        g, t, f = c4_to_p3_morphism()
        text = "\n".join(
            line for line in write_morphism(f, g, t).splitlines()
            if not line.startswith("e 3")
        )
        with pytest.raises(FormatError):
            parse_morphism(text, g, t)

    def test_bad_line_rejected(self):
        g, t, _ = c4_to_p3_morphism()
        with pytest.raises(FormatError):
            parse_morphism("q 1 2\n", g, t)


class TestRefinementMapText:
    def test_roundtrip_random(self):
        rng = random.Random(23)
        for _ in range(10):
            g = random_connected_multigraph(rng, rng.randint(2, 5))
            _, rmap = random_refinement(rng, g)
            back = parse_refinement_map(write_refinement_map(rmap))
            assert back == rmap

    def test_bad_lines(self):
        for text in ("orig 1\n", "sub 4 0 1 0\n", "leaf a 0\n", "huh\n"):
            with pytest.raises(FormatError):
                parse_refinement_map(text)
