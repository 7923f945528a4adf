"""Divisors, set firing, Dhar's burning algorithm and q-reduction.

A divisor is a chip count per vertex.  Equivalence of divisors is witnessed
by a firing script: the normalized integer vector x with D' = D - Qx,
nonnegative and zero somewhere.  All equivalence questions are routed
through q-reduction, whose fixed point is unique per class.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DomainError, InternalError, NotFireableError
from .graph import MultiGraph, VertexSet


@dataclass(frozen=True)
class Divisor:
    """Integer chip vector indexed by vertex."""

    chips: tuple[int, ...]

    @staticmethod
    def of(chips: Iterable[int]) -> "Divisor":
        return Divisor(tuple(int(c) for c in chips))

    @staticmethod
    def zero(n: int) -> "Divisor":
        return Divisor((0,) * n)

    @staticmethod
    def single(n: int, v: int, amount: int = 1) -> "Divisor":
        chips = [0] * n
        chips[v] = amount
        return Divisor(tuple(chips))

    def __len__(self):
        return len(self.chips)

    def __getitem__(self, v: int) -> int:
        return self.chips[v]

    @property
    def degree(self) -> int:
        return sum(self.chips)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.chips)

    @property
    def support(self) -> VertexSet:
        return frozenset(v for v, c in enumerate(self.chips) if c != 0)

    def format(self, g: MultiGraph) -> str:
        """Sparse `<vertex>:<chips>` form, e.g. ``a:3`` or ``0:2 4:1``."""
        parts = [f"{g.vertex_name(v)}:{c}" for v, c in enumerate(self.chips) if c]
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FiringScript:
    """Normalized firing counts: nonnegative, zero on at least one vertex."""

    x: tuple[int, ...]

    @staticmethod
    def normalized(values: Iterable[int]) -> "FiringScript":
        vals = [int(v) for v in values]
        lo = min(vals)
        return FiringScript(tuple(v - lo for v in vals))

    def __len__(self):
        return len(self.x)

    def __getitem__(self, v: int) -> int:
        return self.x[v]

    @property
    def is_zero(self) -> bool:
        return not any(self.x)

    @property
    def max(self) -> int:
        return max(self.x)


def _require_effective(d: Divisor, what: str = "divisor") -> None:
    if not d.is_effective:
        raise DomainError(f"{what} must be effective, got chips {d.chips}")


def _require_connected(g: MultiGraph) -> None:
    if not g.is_connected():
        raise DomainError("graph must be connected")


def check_divisor(g: MultiGraph, d: Divisor) -> None:
    if len(d) != g.n:
        raise DomainError(f"divisor length {len(d)} does not match n={g.n}")


def is_fireable(g: MultiGraph, d: Divisor, u: Iterable[int]) -> bool:
    """True iff every vertex of u keeps a nonnegative chip count when u fires."""
    check_divisor(g, d)
    _require_effective(d)
    uset = frozenset(u)
    return all(g.outdeg(uset, v) <= d[v] for v in uset)


def fire_set(g: MultiGraph, d: Divisor, u: Iterable[int]) -> Divisor:
    """Fire the set u: one chip moves along every edge leaving u."""
    check_divisor(g, d)
    _require_effective(d)
    uset = frozenset(u)
    chips = list(d.chips)
    for v in uset:
        out = g.outdeg(uset, v)
        if out > d[v]:
            raise NotFireableError(v, out, d[v])
        chips[v] -= out
        for w, m in g.adjacency(v).items():
            if w not in uset:
                chips[w] += m
    return Divisor(tuple(chips))


def apply_script(g: MultiGraph, d: Divisor, x: FiringScript) -> Divisor:
    """D - Qx, computed edge-wise in exact integer arithmetic."""
    check_divisor(g, d)
    chips = list(d.chips)
    for (u, v), m in g.edge_multiplicities.items():
        diff = x[u] - x[v]
        chips[u] -= m * diff
        chips[v] += m * diff
    return Divisor(tuple(chips))


def dhar(g: MultiGraph, d: Divisor, q: int) -> VertexSet:
    """Maximal fireable subset of V - {q}, or the empty set if d is q-reduced.

    Burning runs in O(|E|): out-degrees relative to the shrinking set are
    maintained incrementally and burnt vertices enter a FIFO worklist.
    """
    check_divisor(g, d)
    _require_effective(d)
    _require_connected(g)
    n = g.n
    alive = [True] * n
    alive[q] = False
    outdeg = [0] * n
    for v in range(n):
        if alive[v]:
            outdeg[v] = g.multiplicity(v, q)
    queue = deque(v for v in range(n) if alive[v] and outdeg[v] > d[v])
    queued = [v in queue for v in range(n)]
    while queue:
        v = queue.popleft()
        queued[v] = False
        if not alive[v] or outdeg[v] <= d[v]:
            continue
        alive[v] = False
        for w, m in g.adjacency(v).items():
            if alive[w]:
                outdeg[w] += m
                if outdeg[w] > d[w] and not queued[w]:
                    queue.append(w)
                    queued[w] = True
    return frozenset(v for v in range(n) if alive[v])


def is_q_reduced(g: MultiGraph, d: Divisor, q: int) -> bool:
    return not dhar(g, d, q)


def q_reduce(g: MultiGraph, d: Divisor, q: int) -> tuple[Divisor, FiringScript]:
    """The unique q-reduced divisor equivalent to d, plus the script reaching it.

    Fires Dhar's set until it comes back empty; the distance to the fixed
    point drops by one per iteration, so deg(d) * n iterations suffice.
    """
    check_divisor(g, d)
    _require_effective(d)
    _require_connected(g)
    bound = max(1, d.degree * g.n)
    x = [0] * g.n
    cur = d
    for _ in range(bound + 1):
        u = dhar(g, cur, q)
        if not u:
            return cur, FiringScript(tuple(x))
        cur = fire_set(g, cur, u)
        for v in u:
            x[v] += 1
    raise InternalError(
        f"q_reduce did not converge within {bound} iterations; this is a bug"
    )


def script_between(g: MultiGraph, d1: Divisor, d2: Divisor) -> Optional[FiringScript]:
    """Normalized script x with d2 = d1 - Qx, or None if not equivalent.

    Both divisors are reduced at vertex 0; equality of the reduced forms
    decides equivalence and the scripts compose by subtraction.
    """
    _require_effective(d1, "d1")
    _require_effective(d2, "d2")
    r1, x1 = q_reduce(g, d1, 0)
    r2, x2 = q_reduce(g, d2, 0)
    if r1 != r2:
        return None
    return FiringScript.normalized(a - b for a, b in zip(x1.x, x2.x))


def dist(g: MultiGraph, d1: Divisor, d2: Divisor) -> Optional[int]:
    """Max entry of the script between equivalent divisors; None otherwise."""
    x = script_between(g, d1, d2)
    return None if x is None else x.max


def level_set_chain(x: FiringScript) -> list[VertexSet]:
    """Increasing chain U_1 <= ... <= U_t with sum of indicators equal to x.

    U_i collects the vertices fired at least t+1-i times; firing the chain
    in order replays the script through effective intermediate divisors.
    """
    if x.is_zero:
        raise DomainError("zero script has no level-set chain")
    if min(x.x) != 0:
        raise DomainError("script must be normalized (minimum entry 0)")
    t = x.max
    return [
        frozenset(v for v, xv in enumerate(x.x) if xv >= t + 1 - i)
        for i in range(1, t + 1)
    ]
