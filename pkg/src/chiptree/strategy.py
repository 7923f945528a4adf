"""Monotone search strategies and their construction from a divisor.

A strategy is a rooted tree of positions (X, R): searcher locations X and
remaining fugitive territory R.  Given a positive-rank effective divisor of
degree k, ``build_mss`` produces a complete strategy for k+1 searchers by
repeatedly splitting territory into flaps, retracting unneeded searchers,
and advancing into the territory along a fireable set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .divisors import Divisor, dhar, fire_set
from .errors import DomainError, InternalError
from .graph import MultiGraph, VertexSet

SPLIT = "split"    # case (c), construction step I
SHRINK = "shrink"  # case (a), construction step II
GROW = "grow"      # case (b), construction step III
LEAF = "leaf"
ROOT = "root"

STEP_LABEL = {SPLIT: "I", SHRINK: "II", GROW: "III"}


@dataclass(frozen=True)
class Position:
    searchers: VertexSet   # X
    territory: VertexSet   # R

    def label(self, g: MultiGraph) -> str:
        return f"{g.set_name(self.searchers)} | {g.set_name(self.territory)}"


@dataclass
class MssNode:
    position: Position
    move: str = LEAF
    parent: Optional[int] = None
    children: list[int] = field(default_factory=list)


@dataclass
class MssTree:
    """Rooted strategy tree; node 0 is the root (empty X, full territory)."""

    nodes: list[MssNode]
    searchers: int
    # effective divisor kept for each leaf during construction
    leaf_divisors: dict[int, Divisor] = field(default_factory=dict)

    @property
    def root(self) -> int:
        return 0

    def position(self, i: int) -> Position:
        return self.nodes[i].position

    def positions(self) -> list[Position]:
        return [node.position for node in self.nodes]

    def leaves(self) -> list[int]:
        return [i for i, node in enumerate(self.nodes) if not node.children]

    def max_searchers_used(self) -> int:
        return max(len(node.position.searchers) for node in self.nodes)

    def to_dot(self, g: MultiGraph) -> str:
        lines = ["digraph mss {", "  node [shape=record];"]
        for i, node in enumerate(self.nodes):
            x, r = node.position.searchers, node.position.territory
            lines.append(
                f'  n{i} [label="{g.set_name(x)} | {g.set_name(r)}"];'
            )
        for i, node in enumerate(self.nodes):
            for c in node.children:
                tag = STEP_LABEL.get(self.nodes[c].move, "")
                attr = f' [label="{tag}"]' if tag else ""
                lines.append(f"  n{i} -> n{c}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class MssViolation:
    node: Optional[int]
    reason: str


@dataclass
class MssReport:
    ok: bool
    violations: list[MssViolation]

    def first(self) -> Optional[MssViolation]:
        return self.violations[0] if self.violations else None


def good_firing_set(g: MultiGraph, d: Divisor, x: VertexSet,
                    r: VertexSet, trace=None) -> tuple[Divisor, VertexSet]:
    """Find d'' ~ d and a fireable set meeting X but avoiding the flap r.

    Repeatedly runs Dhar's algorithm at the smallest vertex of r, firing
    the result while it stays disjoint from X.  Termination within
    deg(d) * n rounds follows from the distance-decrease argument.
    """
    if not r:
        raise DomainError("territory flap must be nonempty")
    q = min(r)
    bound = max(1, d.degree * g.n)
    cur = d
    for _ in range(bound + 1):
        u = dhar(g, cur, q)
        if not u:
            raise InternalError(
                "Dhar returned the empty set during good_firing_set; "
                "the divisor does not have positive rank"
            )
        if u & x:
            if u & r:
                raise InternalError("fireable set meets the territory flap")
            return cur, u
        nxt = fire_set(g, cur, u)
        if trace is not None:
            trace.append((cur, u, nxt))
        cur = nxt
    raise InternalError(
        f"good_firing_set did not finish within {bound} iterations"
    )


def build_mss(g: MultiGraph, d: Divisor, trace=None) -> MssTree:
    """Construct a complete monotone search strategy for deg(d)+1 searchers.

    ``trace``, if given, collects (step, position, detail) tuples describing
    the construction for auditing.
    """
    from .gonality import has_positive_rank  # local import avoids a cycle

    if not g.is_connected():
        raise DomainError("graph must be connected")
    if not d.is_effective:
        raise DomainError("divisor must be effective")
    if not has_positive_rank(g, d):
        raise DomainError("divisor does not have positive rank")

    k = d.degree
    everything = frozenset(range(g.n))
    root_pos = Position(frozenset(), everything)
    supp = d.support
    first = Position(supp, everything - supp)

    tree = MssTree(nodes=[MssNode(root_pos, move=ROOT)], searchers=k + 1)

    def add_node(parent: int, pos: Position, move: str,
                 divisor: Optional[Divisor] = None) -> int:
        idx = len(tree.nodes)
        tree.nodes.append(MssNode(pos, move=move, parent=parent))
        tree.nodes[parent].children.append(idx)
        tree.leaf_divisors.pop(parent, None)
        if divisor is not None:
            tree.leaf_divisors[idx] = divisor
        return idx

    pending: deque[int] = deque()
    first_idx = add_node(0, first, GROW, d)
    if first.territory:
        pending.append(first_idx)

    rounds = 0
    max_rounds = g.n * g.n + 1
    while pending:
        rounds += 1
        if rounds > max_rounds:
            raise InternalError("construction exceeded the n^2 node bound")
        i = pending.popleft()
        pos = tree.nodes[i].position
        x, r = pos.searchers, pos.territory
        d_cur = tree.leaf_divisors[i]
        flaps = g.flaps_within(x, r)

        if len(flaps) >= 2:
            # step I: split the territory into its flaps
            if trace is not None:
                trace.append(("I", pos, flaps))
            for flap in flaps:
                child = add_node(i, Position(x, flap), SPLIT, d_cur)
                pending.append(child)
            continue

        nr = g.neighborhood(r)
        if nr < x:
            # step II: retract searchers not bordering the territory
            if trace is not None:
                trace.append(("II", pos, nr))
            child = add_node(i, Position(nr, r), SHRINK, d_cur)
            pending.append(child)
            continue

        # step III: N(R) = X and R is a single flap; advance along a firing set
        d2, u = good_firing_set(g, d_cur, x, r)
        if trace is not None:
            trace.append(("III", pos, (d2, u)))
        movers = sorted(u & x)
        prev_x, prev_r = x, r
        parent = i
        for s in movers:
            xi = prev_x | (g.neighbors_in(s, r))
            ri = r - xi
            if (xi, ri) != (prev_x, prev_r):
                parent = add_node(parent, Position(xi, ri), GROW)
            xi_prime = xi - {s}
            parent = add_node(parent, Position(xi_prime, ri), SHRINK)
            prev_x, prev_r = xi_prime, ri
        tree.leaf_divisors[parent] = fire_set(g, d2, u)
        if prev_r:
            pending.append(parent)

    return tree


def validate_mss(g: MultiGraph, tree: MssTree, k: int) -> MssReport:
    """Check the defining clauses of a monotone search strategy.

    Trailing shrink moves with empty territory are accepted: the
    construction emits them after capture (see the worked golden trace).
    """
    violations: list[MssViolation] = []

    def bad(node, reason):
        violations.append(MssViolation(node, reason))

    n = g.n
    everything = frozenset(range(n))
    if not tree.nodes:
        return MssReport(False, [MssViolation(None, "empty tree")])

    if tree.nodes[0].position != Position(frozenset(), everything):
        bad(0, "root is not (empty, V)")
    if len(tree.nodes) > n * n + 1:
        bad(None, f"tree has {len(tree.nodes)} nodes, above the n^2+1 bound")

    for i, node in enumerate(tree.nodes):
        x, r = node.position.searchers, node.position.territory
        if x & r:
            bad(i, "searchers and territory overlap")
        if len(x) > k:
            bad(i, f"|X|={len(x)} exceeds {k} searchers")
        try:
            g.flaps_within(x, r)
        except Exception:
            bad(i, "territory is not a union of X-flaps")
            continue

        if not node.children:
            if r:
                bad(i, "incomplete leaf (territory nonempty)")
            continue

        kids = [tree.nodes[c].position for c in node.children]
        if len(kids) == 1:
            (child,) = kids
            cx, cr = child.searchers, child.territory
            if cx < x and cr == r:
                pass  # case (a): shrink
            elif cx > x and cx <= x | r and cr == r - cx:
                pass  # case (b): grow
            else:
                bad(i, "single child matches neither shrink nor grow")
        else:
            flaps = set(g.flaps_within(x, r))
            child_rs = [c.territory for c in kids]
            if any(c.searchers != x for c in kids):
                bad(i, "split children must keep the same searchers")
            elif set(child_rs) != flaps or len(child_rs) != len(flaps):
                bad(i, "split children are not exactly the X-flaps of R")
            elif len(kids) < 2:
                bad(i, "split with fewer than two children")

    return MssReport(not violations, violations)
