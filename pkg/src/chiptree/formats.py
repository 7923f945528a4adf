"""Text formats: PACE-style .gr and .td files, sparse divisor strings,
morphism and refinement-map files, and the self-describing document format
that bundles a graph with a divisor for single-file fixtures.
"""

from __future__ import annotations

from typing import Optional

from .divisors import Divisor
from .errors import FormatError
from .graph import MultiGraph
from .morphism import FiniteMorphism
from .treedec import RefinementMap, TreeDecomposition

DOCUMENT_FORMAT = "chiptree/1"


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        out.append(line)
    return out


# -- PACE .gr graphs -------------------------------------------------------

def parse_gr(text: str) -> MultiGraph:
    """Header ``p tw <n> <m>``, then 1-based edge lines; duplicates stack."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty .gr input")
    header = lines[0].split()
    if len(header) != 4 or header[0] != "p" or header[1] != "tw":
        raise FormatError(f"bad .gr header: {lines[0]!r}")
    try:
        n, m = int(header[2]), int(header[3])
    except ValueError:
        raise FormatError(f"bad .gr header: {lines[0]!r}") from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"bad edge line: {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"edge ({u},{v}) outside 1..{n}")
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return MultiGraph(n, edges)


def write_gr(g: MultiGraph) -> str:
    lines = [f"p tw {g.n} {g.num_edges}"]
    for u, v in g.edge_list:
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


# -- PACE .td tree decompositions ------------------------------------------

def parse_td(text: str) -> TreeDecomposition:
    """Header ``s td <bags> <max bag size> <n>``, bag lines, tree edges."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty .td input")
    header = lines[0].split()
    if len(header) != 5 or header[0] != "s" or header[1] != "td":
        raise FormatError(f"bad .td header: {lines[0]!r}")
    try:
        num_bags = int(header[2])
        n = int(header[4])
    except ValueError:
        raise FormatError(f"bad .td header: {lines[0]!r}") from None
    bags: dict[int, frozenset] = {}
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "b":
            try:
                bag_id = int(parts[1])
                members = [int(p) for p in parts[2:]]
            except (ValueError, IndexError):
                raise FormatError(f"bad bag line: {line!r}") from None
            if not 1 <= bag_id <= num_bags:
                raise FormatError(f"bag id {bag_id} outside 1..{num_bags}")
            if any(not 1 <= v <= n for v in members):
                raise FormatError(f"bag {bag_id} mentions out-of-range vertices")
            bags[bag_id] = frozenset(v - 1 for v in members)
        else:
            if len(parts) != 2:
                raise FormatError(f"bad tree edge line: {line!r}")
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"bad tree edge line: {line!r}") from None
            edges.append((i - 1, j - 1))
    if set(bags) != set(range(1, num_bags + 1)):
        raise FormatError("bag ids must be exactly 1..<bags>")
    bag_list = [bags[i] for i in range(1, num_bags + 1)]
    for i, j in edges:
        if not (0 <= i < num_bags and 0 <= j < num_bags):
            raise FormatError(f"tree edge ({i + 1},{j + 1}) out of range")
    return TreeDecomposition(bag_list, edges)


def write_td(td: TreeDecomposition, n: int) -> str:
    max_bag = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {max_bag} {n}"]
    for i, bag in enumerate(td.bags):
        members = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {i + 1} {members}".rstrip())
    for i, j in td.tree_edges:
        lines.append(f"{i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


# -- divisors --------------------------------------------------------------

def parse_divisor(text: str, g: MultiGraph) -> Divisor:
    """Sparse ``<vertex>:<chips>`` tokens; omitted vertices hold 0 chips."""
    chips = [0] * g.n
    for token in text.split():
        if ":" not in token:
            raise FormatError(f"bad divisor token {token!r}")
        name, _, amount = token.rpartition(":")
        try:
            value = int(amount)
        except ValueError:
            raise FormatError(f"bad chip count in {token!r}") from None
        chips[g.vertex_index(name)] += value
    return Divisor(tuple(chips))


def write_divisor(d: Divisor, g: MultiGraph) -> str:
    return d.format(g)


# -- structured-text document ----------------------------------------------

def parse_document(text: str) -> tuple[MultiGraph, Optional[Divisor]]:
    """Single-file fixture: version line, vertices, edges, optional divisor.

    ::

        format chiptree/1
        vertices a b c
        edge a b
        edge b c
        divisor a:3
        divisor-dense 3 0 0    (alternative to the sparse form)
    """
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("format "):
        raise FormatError("document must start with a 'format' line")
    version = lines[0].split(None, 1)[1]
    if version != DOCUMENT_FORMAT:
        raise FormatError(f"unsupported document format {version!r}")
    labels: Optional[list[str]] = None
    edge_tokens: list[tuple[str, str]] = []
    divisor_line: Optional[str] = None
    dense_line: Optional[str] = None
    for line in lines[1:]:
        key, _, rest = line.partition(" ")
        if key == "vertices":
            labels = rest.split()
        elif key == "edge":
            parts = rest.split()
            if len(parts) != 2:
                raise FormatError(f"bad edge line: {line!r}")
            edge_tokens.append((parts[0], parts[1]))
        elif key == "divisor":
            divisor_line = rest
        elif key == "divisor-dense":
            dense_line = rest
        else:
            raise FormatError(f"unknown document line: {line!r}")
    if labels is None:
        raise FormatError("document is missing a 'vertices' line")
    index = {name: i for i, name in enumerate(labels)}
    try:
        edges = [(index[a], index[b]) for a, b in edge_tokens]
    except KeyError as exc:
        raise FormatError(f"edge uses unknown vertex {exc.args[0]!r}") from None
    g = MultiGraph(len(labels), edges, labels=labels)
    divisor = None
    if dense_line is not None:
        chips = [int(tok) for tok in dense_line.split()]
        if len(chips) != g.n:
            raise FormatError("divisor-dense length does not match vertex count")
        divisor = Divisor(tuple(chips))
    if divisor_line is not None:
        divisor = parse_divisor(divisor_line, g)
    return g, divisor


def write_document(g: MultiGraph, d: Optional[Divisor] = None) -> str:
    names = [g.vertex_name(v) for v in range(g.n)]
    lines = [f"format {DOCUMENT_FORMAT}", "vertices " + " ".join(names)]
    for u, v in g.edge_list:
        lines.append(f"edge {names[u]} {names[v]}")
    if d is not None:
        lines.append(f"divisor {d.format(g)}")
    return "\n".join(lines) + "\n"


def parse_graph_auto(text: str) -> tuple[MultiGraph, Optional[Divisor]]:
    """Dispatch between the .gr format and the document format."""
    lines = _content_lines(text)
    if lines and lines[0].startswith("format "):
        return parse_document(text)
    return parse_gr(text), None


# -- morphisms and refinement maps -----------------------------------------

def parse_morphism(text: str, g: MultiGraph, t: MultiGraph) -> FiniteMorphism:
    """Lines ``v <g-vertex> <t-vertex>`` and ``e <g-edge-id> <t-edge-id> <index>``."""
    vmap: dict[int, int] = {}
    emap: dict[int, tuple[int, int]] = {}
    for line in _content_lines(text):
        parts = line.split()
        if parts[0] == "v" and len(parts) == 3:
            vmap[g.vertex_index(parts[1])] = t.vertex_index(parts[2])
        elif parts[0] == "e" and len(parts) == 4:
            try:
                eid, tid, idx = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"bad morphism edge line: {line!r}") from None
            emap[eid] = (tid, idx)
        else:
            raise FormatError(f"bad morphism line: {line!r}")
    if set(vmap) != set(range(g.n)):
        raise FormatError("morphism must map every graph vertex")
    if set(emap) != set(range(g.num_edges)):
        raise FormatError("morphism must map every graph edge id")
    return FiniteMorphism(
        vertex_map=tuple(vmap[v] for v in range(g.n)),
        edge_map=tuple(emap[i][0] for i in range(g.num_edges)),
        index=tuple(emap[i][1] for i in range(g.num_edges)),
    )


def write_morphism(f: FiniteMorphism, g: MultiGraph, t: MultiGraph) -> str:
    lines = []
    for v, img in enumerate(f.vertex_map):
        lines.append(f"v {g.vertex_name(v)} {t.vertex_name(img)}")
    for i in range(len(f.edge_map)):
        lines.append(f"e {i} {f.edge_map[i]} {f.index[i]}")
    return "\n".join(lines) + "\n"


def parse_refinement_map(text: str) -> RefinementMap:
    """Lines ``orig <refined> <original>``, ``sub <refined> <u> <w> <copy> <pos>``,
    ``leaf <refined> <anchor>``; all ids are 0-based integers."""
    original: dict[int, int] = {}
    subdivision: dict[int, tuple[int, int, int, int]] = {}
    leaves: dict[int, int] = {}
    for line in _content_lines(text):
        parts = line.split()
        try:
            if parts[0] == "orig" and len(parts) == 3:
                original[int(parts[1])] = int(parts[2])
            elif parts[0] == "sub" and len(parts) == 6:
                subdivision[int(parts[1])] = (
                    int(parts[2]), int(parts[3]), int(parts[4]), int(parts[5])
                )
            elif parts[0] == "leaf" and len(parts) == 3:
                leaves[int(parts[1])] = int(parts[2])
            else:
                raise FormatError(f"bad refinement line: {line!r}")
        except ValueError:
            raise FormatError(f"bad refinement line: {line!r}") from None
    return RefinementMap(original, subdivision, leaves)


def write_refinement_map(rmap: RefinementMap) -> str:
    lines = []
    for v in sorted(rmap.original):
        lines.append(f"orig {v} {rmap.original[v]}")
    for v in sorted(rmap.subdivision):
        u, w, copy, pos = rmap.subdivision[v]
        lines.append(f"sub {v} {u} {w} {copy} {pos}")
    for v in sorted(rmap.added_leaves):
        lines.append(f"leaf {v} {rmap.added_leaves[v]}")
    return "\n".join(lines) + "\n"
