"""Tree decompositions: validation, conversion from a search strategy,
an exact brute-force treewidth oracle, and refinement contraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .errors import BudgetError, DomainError
from .graph import MultiGraph, VertexSet
from .strategy import MssTree, validate_mss


@dataclass
class TreeDecomposition:
    """Bags indexed 0..b-1 plus the undirected tree edges between them."""

    bags: list[VertexSet]
    tree_edges: list[tuple[int, int]]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbors(self) -> list[list[int]]:
        adj = [[] for _ in self.bags]
        for i, j in self.tree_edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def to_dot(self, g: Optional[MultiGraph] = None) -> str:
        lines = ["graph treedec {", "  node [shape=box];"]
        for i, bag in enumerate(self.bags):
            label = g.set_name(bag) if g else ",".join(map(str, sorted(bag)))
            lines.append(f'  b{i} [label="{label}"];')
        for i, j in self.tree_edges:
            lines.append(f"  b{i} -- b{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class TdReport:
    ok: bool
    width: int
    violations: list[str] = field(default_factory=list)


def validate_treedec(g: MultiGraph, td: TreeDecomposition) -> TdReport:
    """Check the three decomposition conditions plus tree shape."""
    violations = []
    b = len(td.bags)
    if b == 0:
        return TdReport(False, -1, ["decomposition has no bags"])

    # tree shape: connected and acyclic
    if len(td.tree_edges) != b - 1:
        violations.append(
            f"{len(td.tree_edges)} tree edges on {b} bags is not a tree"
        )
    else:
        seen = {0}
        stack = [0]
        adj = td.neighbors()
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != b:
            violations.append("bag tree is disconnected")

    # condition 1: bags cover all vertices
    covered = frozenset().union(*td.bags) if td.bags else frozenset()
    missing = set(range(g.n)) - covered
    if missing:
        violations.append(f"condition 1: vertices {sorted(missing)} in no bag")
    extra = covered - set(range(g.n))
    if extra:
        violations.append(f"bags mention unknown vertices {sorted(extra)}")

    # condition 2: every edge inside some bag
    for (u, v) in g.edge_multiplicities:
        if not any(u in bag and v in bag for bag in td.bags):
            violations.append(f"condition 2: edge ({u},{v}) in no bag")

    # condition 3: per-vertex bag sets induce subtrees
    adj = td.neighbors()
    for v in range(g.n):
        nodes = [i for i, bag in enumerate(td.bags) if v in bag]
        if not nodes:
            continue
        seen = {nodes[0]}
        stack = [nodes[0]]
        node_set = set(nodes)
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j in node_set and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if seen != node_set:
            violations.append(f"condition 3 at vertex {v}")

    return TdReport(not violations, td.width, violations)


def mss_to_treedec(g: MultiGraph, tree: MssTree) -> TreeDecomposition:
    """Forget orientation and territories: the searcher sets become bags.

    Bag ids follow a deterministic preorder of the strategy tree.
    """
    report = validate_mss(g, tree, tree.searchers)
    if not report.ok:
        raise DomainError(f"invalid search strategy: {report.first().reason}")
    order = []
    stack = [tree.root]
    while stack:
        i = stack.pop()
        order.append(i)
        stack.extend(reversed(tree.nodes[i].children))
    new_id = {old: new for new, old in enumerate(order)}
    bags = [tree.nodes[i].position.searchers for i in order]
    edges = [
        (new_id[i], new_id[c])
        for i in order
        for c in tree.nodes[i].children
    ]
    return TreeDecomposition(bags, edges)


def treewidth_bruteforce(g: MultiGraph, max_width: Optional[int] = None,
                         budget: int = 10) -> Optional[int]:
    """Exact treewidth by dynamic programming over elimination prefixes.

    Works on the underlying simple graph; hard-capped at ``budget`` vertices.
    Returns None if the treewidth exceeds ``max_width``.
    """
    n = g.n
    if n > budget:
        raise BudgetError(f"treewidth oracle capped at n={budget}, got n={n}")
    if n == 0:
        raise DomainError("treewidth of the empty graph is undefined")
    adj = [frozenset(g.adjacency(v)) for v in range(n)]
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def back_degree(eliminated: int, v: int) -> int:
        # neighbors of v reachable through the eliminated set
        seen = {v}
        stack = [v]
        out = set()
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in seen:
                    continue
                seen.add(w)
                if eliminated >> w & 1:
                    stack.append(w)
                else:
                    out.add(w)
        return len(out)

    @lru_cache(maxsize=None)
    def best(eliminated: int) -> int:
        if eliminated == full:
            return -1
        result = n
        for v in range(n):
            if eliminated >> v & 1:
                continue
            width = max(back_degree(eliminated, v),
                        best(eliminated | (1 << v)))
            result = min(result, width)
        return result

    tw = best(0)
    best.cache_clear()
    back_degree.cache_clear()
    if max_width is not None and tw > max_width:
        return None
    return tw


def treedec_by_elimination(g: MultiGraph,
                           order: Optional[Iterable[int]] = None) -> TreeDecomposition:
    """Valid (not necessarily optimal) decomposition from an elimination order.

    Defaults to the min-degree heuristic; used to produce nontrivial
    decompositions of refined graphs in tests and demos.
    """
    if not g.is_connected():
        raise DomainError("graph must be connected")
    n = g.n
    adj = [set(g.adjacency(v)) for v in range(n)]
    if order is None:
        remaining = set(range(n))
        work = [set(a) for a in adj]
        order = []
        while remaining:
            v = min(remaining, key=lambda u: (len(work[u]), u))
            order.append(v)
            for a in work[v]:
                work[a].discard(v)
            for a in work[v]:
                for b in work[v]:
                    if a != b:
                        work[a].add(b)
            remaining.discard(v)
        order = list(order)
    else:
        order = list(order)
        if sorted(order) != list(range(n)):
            raise DomainError("elimination order must be a permutation of V")

    pos = {v: i for i, v in enumerate(order)}
    work = [set(a) for a in adj]
    bags: list[VertexSet] = []
    edges: list[tuple[int, int]] = []
    bag_of: dict[int, int] = {}
    for idx, v in enumerate(order):
        later = {w for w in work[v] if pos[w] > idx}
        bags.append(frozenset({v} | later))
        bag_of[v] = idx
        for a in later:
            work[a].discard(v)
            work[a].update(later - {a})
    for idx, v in enumerate(order):
        later = bags[idx] - {v}
        if later:
            nxt = min(later, key=lambda w: pos[w])
            edges.append((idx, bag_of[nxt]))
    return TreeDecomposition(bags, edges)


@dataclass(frozen=True)
class RefinementMap:
    """How a refined graph's vertices relate to the original graph.

    ``original`` maps refined vertex ids to original vertex ids,
    ``subdivision`` maps a subdivision vertex to the original edge it sits
    on (endpoints u < w, parallel-edge copy, position along the path), and
    ``added_leaves`` maps an added leaf to its anchor (refined vertex id).
    """

    original: dict[int, int]
    subdivision: dict[int, tuple[int, int, int, int]]
    added_leaves: dict[int, int]

    @staticmethod
    def identity(n: int) -> "RefinementMap":
        return RefinementMap({v: v for v in range(n)}, {}, {})

    def check(self, g_original: MultiGraph, g_refined: MultiGraph) -> None:
        classified = set(self.original) | set(self.subdivision) | set(self.added_leaves)
        if classified != set(range(g_refined.n)):
            raise DomainError("refinement map does not classify every refined vertex")
        if len(self.original) != g_original.n or \
                sorted(self.original.values()) != list(range(g_original.n)):
            raise DomainError("original vertices must biject with V(G)")

    def collapse(self, v: int) -> Optional[int]:
        """Original vertex standing in for refined vertex v, or None for leaves."""
        if v in self.original:
            return self.original[v]
        if v in self.subdivision:
            u, _w, _copy, _pos = self.subdivision[v]
            return u
        return None


def contract_refinement(g_original: MultiGraph, g_refined: MultiGraph,
                        td: TreeDecomposition,
                        rmap: RefinementMap) -> TreeDecomposition:
    """Turn a decomposition of a refinement into one of the original graph.

    Subdivision vertices are replaced by an endpoint of their edge; added
    leaves are simply dropped from all bags.  Width never increases.
    """
    rmap.check(g_original, g_refined)
    report = validate_treedec(g_refined, td)
    if not report.ok:
        raise DomainError(f"invalid decomposition of the refinement: {report.violations[0]}")
    bags = []
    for bag in td.bags:
        new_bag = {c for c in map(rmap.collapse, bag) if c is not None}
        bags.append(frozenset(new_bag))
    return TreeDecomposition(bags, list(td.tree_edges))
