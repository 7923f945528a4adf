"""Loopless multigraphs and the structural queries everything else builds on.

Vertices are dense integers 0..n-1; optional display labels are attached at
parse time only.  Parallel edges are stored as multiplicities, not repeated
structure, so degree and cut computations stay exact integer arithmetic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import GraphError

VertexSet = frozenset


class MultiGraph:
    """Finite loopless multigraph, immutable after construction.

    Edges are given as (u, v) pairs; repeating a pair (in either order)
    raises its multiplicity.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        mult: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u} is not allowed")
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + 1
        self._mult = dict(sorted(mult.items()))
        adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for (u, v), m in self._mult.items():
            adj[u][v] = m
            adj[v][u] = m
        self._adj = adj
        if labels is not None:
            labels = list(labels)
            if len(labels) != n:
                raise GraphError("label list length does not match vertex count")
            if len(set(labels)) != n:
                raise GraphError("vertex labels must be unique")
        self.labels = labels
        self._label_index = (
            {name: i for i, name in enumerate(labels)} if labels else None
        )

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_multiplicities(self) -> dict[tuple[int, int], int]:
        """Normalized (min, max) pairs mapped to multiplicity."""
        return dict(self._mult)

    @property
    def edge_list(self) -> list[tuple[int, int]]:
        """Edges expanded with multiplicity, in sorted order.

        The position in this list serves as the edge id used by the
        harmonic-morphism module.
        """
        out = []
        for (u, v), m in self._mult.items():
            out.extend([(u, v)] * m)
        return out

    @property
    def num_edges(self) -> int:
        return sum(self._mult.values())

    def adjacency(self, v: int) -> dict[int, int]:
        """Neighbors of v with multiplicities."""
        return dict(self._adj[v])

    def degree(self, v: int) -> int:
        return sum(self._adj[v].values())

    def multiplicity(self, u: int, v: int) -> int:
        return self._adj[u].get(v, 0)

    def vertex_index(self, name) -> int:
        """Resolve a label or integer-like token to a vertex index."""
        if self._label_index is not None and name in self._label_index:
            return self._label_index[name]
        try:
            i = int(name)
        except (TypeError, ValueError):
            raise GraphError(f"unknown vertex {name!r}") from None
        if not 0 <= i < self.n:
            raise GraphError(f"vertex index {i} out of range")
        return i

    def vertex_name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def set_name(self, s: Iterable[int]) -> str:
        return "".join(self.vertex_name(v) for v in sorted(s)) or "{}"

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self):
        return hash((self.n, tuple(self._mult.items())))

    # -- structural queries ------------------------------------------------

    def laplacian(self) -> np.ndarray:
        """Integer Laplacian: degrees on the diagonal, minus multiplicities off it."""
        q = np.zeros((self.n, self.n), dtype=np.int64)
        for v in range(self.n):
            q[v, v] = self.degree(v)
            for w, m in self._adj[v].items():
                q[v, w] = -m
        return q

    def outdeg(self, u: Iterable[int], v: int) -> int:
        """Number of edges (with multiplicity) from v to vertices outside u."""
        uset = u if isinstance(u, (set, frozenset)) else frozenset(u)
        if v not in uset:
            raise GraphError(f"outdeg requires v in U, got v={v}")
        return sum(m for w, m in self._adj[v].items() if w not in uset)

    def neighbors_in(self, v: int, r: Iterable[int]) -> VertexSet:
        """Vertices of r adjacent to v."""
        rset = r if isinstance(r, (set, frozenset)) else frozenset(r)
        return frozenset(w for w in self._adj[v] if w in rset)

    def neighborhood(self, u: Iterable[int]) -> VertexSet:
        """N(U): vertices outside u with a neighbor in u."""
        uset = frozenset(u)
        out = set()
        for v in uset:
            for w in self._adj[v]:
                if w not in uset:
                    out.add(w)
        return frozenset(out)

    def flaps(self, x: Iterable[int]) -> list[VertexSet]:
        """Connected components of G - X, ordered by smallest member."""
        xset = frozenset(x)
        seen = set(xset)
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = {start}
            seen.add(start)
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        """True iff the graph has exactly one component (empty graph: false)."""
        cached = getattr(self, "_connected", None)
        if cached is None:
            cached = len(self.flaps(())) == 1
            object.__setattr__(self, "_connected", cached)
        return cached

    def flaps_within(self, x: Iterable[int], r: Iterable[int]) -> list[VertexSet]:
        """The X-flaps contained in r; r must be a union of X-flaps."""
        rset = frozenset(r)
        out = []
        for flap in self.flaps(x):
            if flap <= rset:
                out.append(flap)
            elif flap & rset:
                raise GraphError("r is not a union of X-flaps")
        return out
