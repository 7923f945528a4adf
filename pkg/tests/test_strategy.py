import random

import pytest

from chiptree import (
    Divisor,
    DomainError,
    MultiGraph,
    Position,
    build_mss,
    fire_set,
    good_firing_set,
    has_positive_rank,
    validate_mss,
)
from chiptree.strategy import GROW, LEAF, ROOT, SHRINK, SPLIT

from conftest import random_connected_multigraph
from chiptree.gonality import effective_divisors

# Positions of the golden strategy tree for the 7-vertex example, as
# (searchers, territory) label pairs.
GOLDEN_POSITIONS = [
    ("", "abcdefg"),
    ("a", "bcdefg"),
    ("abc", "defg"),
    ("bc", "defg"),
    ("bc", "d"),
    ("bc", "efg"),
    ("b", "d"),
    ("bd", ""),
    ("d", ""),
    ("bcg", "ef"),
    ("bg", "ef"),
    ("befg", ""),
    ("efg", ""),
    ("ef", ""),
]


def names(g, s):
    return "".join(g.vertex_name(v) for v in sorted(s))


def vset(g, text):
    return frozenset(g.vertex_index(ch) for ch in text)


def divisor(g, spec):
    chips = [0] * g.n
    for name, c in spec.items():
        chips[g.vertex_index(name)] = c
    return Divisor(tuple(chips))


class TestGoodFiringSet:
    def test_opening_move(self, fixture_graph, fixture_divisor):
        g = fixture_graph
        d2, u = good_firing_set(g, fixture_divisor, vset(g, "a"),
                               vset(g, "bcdefg"))
        assert d2 == fixture_divisor
        assert names(g, u) == "a"

    def test_advance_toward_d(self, fixture_graph):
        g = fixture_graph
        abc = divisor(g, {"a": 1, "b": 1, "c": 1})
        d2, u = good_firing_set(g, abc, vset(g, "b"), vset(g, "d"))
        assert names(g, u) == "abcefg"

    def test_advance_toward_ef(self, fixture_graph):
        g = fixture_graph
        bbg = divisor(g, {"b": 2, "g": 1})
        d2, u = good_firing_set(g, bbg, vset(g, "bg"), vset(g, "ef"))
        assert names(g, u) == "abcdg"

    def test_contract_holds_on_random_instances(self):
        rng = random.Random(321)
        checked = 0
        while checked < 25:
            g = random_connected_multigraph(rng, rng.randint(3, 6))
            d = next(
                (d for d in effective_divisors(g.n, rng.randint(2, 4))
                 if has_positive_rank(g, d)), None)
            if d is None:
                continue
            x = d.support
            flaps = g.flaps(x)
            if not flaps:
                continue
            r = flaps[0]
            d2, u = good_firing_set(g, d, x, r)
            assert x <= d2.support and not (r & d2.support)
            assert u & x and not (u & r)
            fired = fire_set(g, d2, u)  # must not raise
            assert fired.is_effective
            checked += 1


class TestBuildMss:
    def test_single_vertex(self):
        g = MultiGraph(1, [])
        tree = build_mss(g, Divisor((1,)))
        assert [n.position for n in tree.nodes] == [
            Position(frozenset(), frozenset({0})),
            Position(frozenset({0}), frozenset()),
        ]

    def test_golden_tree_positions(self, fixture_graph, fixture_divisor):
        tree = build_mss(fixture_graph, fixture_divisor)
        got = sorted(
            (names(fixture_graph, n.position.searchers),
             names(fixture_graph, n.position.territory))
            for n in tree.nodes
        )
        assert got == sorted(GOLDEN_POSITIONS)
        assert tree.searchers == 4
        assert tree.max_searchers_used() == 4

    def test_golden_tree_fired_sets(self, fixture_graph, fixture_divisor):
        trace = []
        build_mss(fixture_graph, fixture_divisor, trace=trace)
        g = fixture_graph
        fired = [(names(g, u), d2.format(g))
                 for step, _, (d2, u) in
                 ((s, p, det) for s, p, det in trace if s == "III")]
        # FIFO leaf order interleaves the two branches; the four fired
        # sets and their divisors are exactly the worked example's
        assert fired == [
            ("a", "a:3"),
            ("ac", "a:1 b:1 c:1"),
            ("abcefg", "a:1 b:1 c:1"),
            ("abcdg", "b:2 g:1"),
        ]

    def test_path_advances_one_searcher_pair(self):
        g = MultiGraph(3, [(0, 1), (1, 2)])
        tree = build_mss(g, Divisor((1, 0, 0)))
        assert tree.max_searchers_used() <= 2
        report = validate_mss(g, tree, 2)
        assert report.ok, report.first()

    def test_rejects_rankless_divisor(self):
        c4 = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        with pytest.raises(DomainError):
            build_mss(c4, Divisor((1, 0, 0, 0)))

    def test_rejects_disconnected_graph(self):
        g = MultiGraph(2, [])
        with pytest.raises(DomainError):
            build_mss(g, Divisor((1, 1)))

    def test_move_tags_are_consistent(self, fixture_graph, fixture_divisor):
        tree = build_mss(fixture_graph, fixture_divisor)
        assert tree.nodes[0].move == ROOT
        for node in tree.nodes[1:]:
            assert node.move in (GROW, SHRINK, SPLIT, LEAF)
            parent = tree.nodes[node.parent].position
            pos = node.position
            if node.move == GROW:
                assert pos.searchers > parent.searchers
            elif node.move == SHRINK:
                assert pos.searchers < parent.searchers

    def test_territory_shrinks_along_every_edge(self, fixture_graph,
                                                fixture_divisor):
        tree = build_mss(fixture_graph, fixture_divisor)
        for i, node in enumerate(tree.nodes):
            for c in node.children:
                child = tree.nodes[c].position
                assert child.territory <= node.position.territory
                assert child.searchers <= (node.position.searchers
                                           | node.position.territory)

    def test_leaf_divisors_respect_invariant(self, fixture_graph,
                                             fixture_divisor):
        tree = build_mss(fixture_graph, fixture_divisor)
        assert tree.leaf_divisors
        for i, d in tree.leaf_divisors.items():
            pos = tree.nodes[i].position
            assert pos.searchers <= d.support
            assert not (pos.territory & d.support)

    def test_potential_dominates_children(self, fixture_graph, fixture_divisor):
        # f(X,R) = |R| (|X| + |R|) bounds descendants, per the size argument
        tree = build_mss(fixture_graph, fixture_divisor)

        def f(pos):
            return len(pos.territory) * (len(pos.searchers) + len(pos.territory))

        for node in tree.nodes:
            # the bound concerns nodes still holding territory; the trailing
            # searcher-retraction chain after capture has f = 0 throughout
            if node.children and node.position.territory:
                child_sum = sum(f(tree.nodes[c].position) for c in node.children)
                assert f(node.position) >= child_sum + len(node.children)

    def test_size_bound_on_random_corpus(self):
        rng = random.Random(777)
        built = 0
        while built < 15:
            g = random_connected_multigraph(rng, rng.randint(2, 6))
            d = next(
                (d for d in effective_divisors(g.n, rng.randint(1, 3))
                 if has_positive_rank(g, d)), None)
            if d is None:
                continue
            tree = build_mss(g, d)
            assert len(tree.nodes) <= g.n * g.n + 1
            report = validate_mss(g, tree, d.degree + 1)
            assert report.ok, report.first()
            built += 1


class TestValidateMss:
    def test_accepts_golden_tree(self, fixture_graph, fixture_divisor):
        tree = build_mss(fixture_graph, fixture_divisor)
        assert validate_mss(fixture_graph, tree, 4).ok

    def test_rejects_incomplete_leaf(self, fixture_graph, fixture_divisor):
        tree = build_mss(fixture_graph, fixture_divisor)
        # chop off a subtree: the split node at (bc, defg) keeps one child
        for node in tree.nodes:
            if len(node.children) > 1:
                node.children.pop()
                break
        report = validate_mss(fixture_graph, tree, 4)
        assert not report.ok

    def test_rejects_bad_root(self, fixture_graph):
        g = fixture_graph
        from chiptree.strategy import MssNode, MssTree

        tree = MssTree(
            nodes=[MssNode(Position(frozenset({0}), frozenset(range(1, g.n))))],
            searchers=4,
        )
        report = validate_mss(g, tree, 4)
        assert not report.ok
        assert "root" in report.first().reason

    def test_rejects_searcher_overflow(self, fixture_graph, fixture_divisor):
        tree = build_mss(fixture_graph, fixture_divisor)
        report = validate_mss(fixture_graph, tree, 3)
        assert not report.ok
        assert "searchers" in report.first().reason


def test_dot_export_mentions_every_position(fixture_graph, fixture_divisor):
    tree = build_mss(fixture_graph, fixture_divisor)
    dot = tree.to_dot(fixture_graph)
    assert dot.count(" -> ") == len(tree.nodes) - 1
    assert "bcg | ef" in dot
