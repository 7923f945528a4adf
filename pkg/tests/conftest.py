"""Shared fixtures, random corpora and independent oracles.

The oracles here deliberately avoid the code paths they check: fireable
sets are found by exhaustive subset enumeration, equivalence by breadth
first search over all effective divisors reachable by firing.
"""

import random
from itertools import combinations

import pytest

from chiptree import Divisor, MultiGraph, fire_set, is_fireable
from chiptree.fixtures import example_divisor, example_graph


@pytest.fixture
def fixture_graph():
    return example_graph()


@pytest.fixture
def fixture_divisor(fixture_graph):
    return example_divisor(fixture_graph)


def random_connected_multigraph(rng: random.Random, n: int,
                                max_mult: int = 3) -> MultiGraph:
    """Random spanning tree plus random extra edges, multiplicities <= max_mult."""
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    extra = rng.randrange(0, n + 1)
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    expanded = []
    for (u, v) in edges:
        for _ in range(rng.randint(1, max_mult)):
            expanded.append((u, v))
    return MultiGraph(n, expanded)


def random_effective_divisor(rng: random.Random, n: int, degree: int) -> Divisor:
    chips = [0] * n
    for _ in range(degree):
        chips[rng.randrange(n)] += 1
    return Divisor(tuple(chips))


def all_fireable_subsets(g: MultiGraph, d: Divisor, forbidden=()):
    """Every nonempty fireable subset avoiding the forbidden vertices."""
    allowed = [v for v in range(g.n) if v not in set(forbidden)]
    out = []
    for size in range(1, len(allowed) + 1):
        for combo in combinations(allowed, size):
            if is_fireable(g, d, combo):
                out.append(frozenset(combo))
    return out


def maximal_fireable_subset(g: MultiGraph, d: Divisor, q: int):
    """The unique maximal fireable subset of V - {q}, by enumeration."""
    best = frozenset()
    for u in all_fireable_subsets(g, d, forbidden=(q,)):
        if len(u) > len(best):
            best = u
    return best


def reachable_effective_divisors(g: MultiGraph, d: Divisor) -> set:
    """All effective divisors reachable from d by firing subsets.

    By the level-set chain argument this is the whole effective part of
    the equivalence class, so membership decides equivalence.
    """
    seen = {d.chips}
    frontier = [d]
    while frontier:
        cur = frontier.pop()
        for u in all_fireable_subsets(g, cur):
            nxt = fire_set(g, cur, u)
            if nxt.chips not in seen:
                seen.add(nxt.chips)
                frontier.append(nxt)
    return seen


def random_refinement(rng: random.Random, g: MultiGraph):
    """Subdivide some edges and hang some leaves; returns (refined, map)."""
    from chiptree import RefinementMap

    next_id = g.n
    original = {v: v for v in range(g.n)}
    subdivision = {}
    leaves = {}
    edges = []
    copy_counter = {}
    for (u, w) in g.edge_list:
        key = (u, w)
        copy = copy_counter.get(key, 0)
        copy_counter[key] = copy + 1
        cuts = rng.randrange(0, 3)
        if cuts == 0:
            edges.append((u, w))
            continue
        prev = u
        for pos in range(cuts):
            subdivision[next_id] = (u, w, copy, pos)
            edges.append((prev, next_id))
            prev = next_id
            next_id += 1
        edges.append((prev, w))
    for _ in range(rng.randrange(0, 3)):
        anchor = rng.randrange(g.n)
        leaves[next_id] = anchor
        edges.append((anchor, next_id))
        next_id += 1
    refined = MultiGraph(next_id, edges)
    return refined, RefinementMap(original, subdivision, leaves)


def random_harmonic_covering(rng: random.Random, tree_size: int, degree: int):
    """Connected harmonic morphism built as a covering with merged fibers.

    Start from ``degree`` disjoint copies of a random tree glued along
    random permutations, then merge random groups inside vertex fibers;
    merging keeps harmonicity and raises m(v) above 1.
    """
    from chiptree import FiniteMorphism

    # random tree on tree_size vertices
    t_edges = [(rng.randrange(v), v) for v in range(1, tree_size)]
    t = MultiGraph(tree_size, t_edges)

    for _ in range(200):
        # group copies of each tree vertex into fiber classes
        classes = []   # (tree_vertex, set of copies)
        class_of = {}  # (tree_vertex, copy) -> class id
        for w in range(tree_size):
            copies = list(range(degree))
            rng.shuffle(copies)
            while copies:
                take = 1 if rng.random() < 0.7 else min(len(copies),
                                                        rng.randint(2, degree))
                group = copies[:take]
                copies = copies[take:]
                for c in group:
                    class_of[(w, c)] = len(classes)
                classes.append((w, frozenset(group)))
        g_edges = []
        edge_images = []
        for ti, (a, b) in enumerate(t.edge_list):
            perm = list(range(degree))
            rng.shuffle(perm)
            for s in range(degree):
                g_edges.append((class_of[(a, s)], class_of[(b, perm[s])]))
                edge_images.append(ti)
        g = MultiGraph(len(classes), g_edges)
        if not g.is_connected():
            continue
        # edge ids got re-sorted inside MultiGraph; rebuild the edge map by
        # matching sorted endpoint pairs
        want = sorted(
            ((min(u, v), max(u, v)), ti) for (u, v), ti in zip(g_edges, edge_images)
        )
        edge_map = tuple(ti for _pair, ti in want)
        assert [p for p, _ in want] == g.edge_list
        vertex_map = tuple(classes[i][0] for i in range(len(classes)))
        index = (1,) * len(edge_map)
        return g, t, FiniteMorphism(vertex_map, edge_map, index)
    raise AssertionError("could not generate a connected covering")


# one line per acceptance criterion in the terminal summary; populated by
# tests/test_acceptance.py
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if ok else "FAIL"
        line = f"criterion {num} ({name}): {verdict}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
