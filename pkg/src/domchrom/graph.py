"""Immutable simple graphs with bitmask adjacency, plus the structural
operations (deletion, union, products, attachments) that the parametrized
constructions reduce to.

Vertices are always ``0..n-1``.  ``adj[v]`` is an int bitmask of the open
neighborhood of ``v``, which makes adjacency tests and neighborhood-subset
checks (the core test of dominated-coloring search) single integer ops.

All values are immutable after construction; every operation returns a new
graph, so instances are safe to share across concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if mask & ~full:
                raise ValueError(f"neighbor out of range at vertex {v}")
        for v, mask in enumerate(self.adj):
            m = mask
            while m:
                u = (m & -m).bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m &= m - 1

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter(bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1) << (v + 1)
            while m:
                u = (m & -m).bit_length() - 1
                out.append((v, u))
                m &= m - 1
        return out

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def _canon_edge(e: Sequence[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph from a vertex count and an edge collection.

    Duplicate edges collapse; loops and out-of-range endpoints raise.
    """
    masks = [0] * n
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


# -- deletion -------------------------------------------------------------


def deletion_map(g: Graph, removed: Iterable[int]) -> dict[int, int]:
    """Old->new vertex map after deleting ``removed`` and relabeling densely.

    Kept so perturbation witnesses can be reported in the labels of the
    original input graph.
    """
    gone = set(removed)
    for v in gone:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex out of range: {v}")
    mapping = {}
    nxt = 0
    for v in range(g.n):
        if v not in gone:
            mapping[v] = nxt
            nxt += 1
    return mapping


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of ``vertices``, densely relabeled."""
    mapping = deletion_map(g, vertices)
    edges = [
        (mapping[u], mapping[v])
        for u, v in g.edges()
        if u in mapping and v in mapping
    ]
    return make_graph(len(mapping), edges)


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Same vertex set with the given edges removed; absent edges raise."""
    drop = set()
    for e in edges:
        ce = _canon_edge(e)
        if not g.has_edge(*ce):
            raise ValueError(f"edge not in graph: {tuple(e)}")
        drop.add(ce)
    kept = [e for e in g.edges() if e not in drop]
    return make_graph(g.n, kept)


# -- composition ----------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; ``h``'s vertices are shifted by ``g.n``."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return make_graph(g.n + h.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(u, v)`` gets row-major index ``u*h.n + v``."""
    edges = []
    for u in range(g.n):
        for v, w in h.edges():
            edges.append((u * h.n + v, u * h.n + w))
    for v in range(h.n):
        for u, w in g.edges():
            edges.append((u * h.n + v, w * h.n + v))
    return make_graph(g.n * h.n, edges)


def point_attach(g: Graph, h: Graph, u: int, v: int) -> Graph:
    """Glue ``h`` onto ``g`` by identifying ``v`` (in h) with ``u`` (in g).

    The identified vertex keeps label ``u``; the remaining vertices of ``h``
    are appended densely after ``g``'s.
    """
    if not (0 <= u < g.n):
        raise ValueError(f"vertex out of range in first graph: {u}")
    if not (0 <= v < h.n):
        raise ValueError(f"vertex out of range in second graph: {v}")
    mapping = {}
    nxt = g.n
    for w in range(h.n):
        if w == v:
            mapping[w] = u
        else:
            mapping[w] = nxt
            nxt += 1
    edges = g.edges() + [(mapping[a], mapping[b]) for a, b in h.edges()]
    return make_graph(g.n + h.n - 1, edges)


def _is_clique(g: Graph, vs: Sequence[int]) -> bool:
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def r_glue(g: Graph, h: Graph, clique_g: Sequence[int], clique_h: Sequence[int]) -> Graph:
    """Identify an r-clique of ``g`` with an r-clique of ``h`` positionally.

    ``clique_g[i]`` is identified with ``clique_h[i]``; the sequences thus
    carry the matching bijection.  ``r = 0`` degenerates to disjoint union.
    """
    if len(clique_g) != len(clique_h):
        raise ValueError("clique size mismatch")
    if len(set(clique_g)) != len(clique_g) or len(set(clique_h)) != len(clique_h):
        raise ValueError("repeated vertex in clique selection")
    for v in clique_g:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex out of range in first graph: {v}")
    for v in clique_h:
        if not (0 <= v < h.n):
            raise ValueError(f"vertex out of range in second graph: {v}")
    if not _is_clique(g, clique_g):
        raise ValueError("selected vertices do not induce a clique in the first graph")
    if not _is_clique(h, clique_h):
        raise ValueError("selected vertices do not induce a clique in the second graph")
    mapping = {}
    for hv, gv in zip(clique_h, clique_g):
        mapping[hv] = gv
    nxt = g.n
    for w in range(h.n):
        if w not in mapping:
            mapping[w] = nxt
            nxt += 1
    edges = g.edges() + [(mapping[a], mapping[b]) for a, b in h.edges()]
    return make_graph(g.n + h.n - len(clique_g), edges)


# -- traversal ------------------------------------------------------------


def _bfs_masks(adj: Sequence[int], start: int) -> list[int]:
    """Distance list from ``start`` (-1 for unreachable)."""
    dist = [-1] * len(adj)
    dist[start] = 0
    frontier = 1 << start
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            nxt |= adj[v]
            m &= m - 1
        nxt &= ~seen
        m = nxt
        while m:
            v = (m & -m).bit_length() - 1
            dist[v] = d
            m &= m - 1
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> int | float:
    """Maximum BFS distance over all vertex pairs; ``math.inf`` when
    disconnected.  Graphs with fewer than two vertices have diameter 0."""
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        dist = _bfs_masks(g.adj, v)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as ``(subgraph, original_vertices)`` pairs.

    ``original_vertices[i]`` is the input label of the subgraph's vertex
    ``i``; components are ordered by their smallest original vertex.
    """
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        dist = _bfs_masks(g.adj, v)
        members = [u for u, d in enumerate(dist) if d >= 0]
        comp_mask = 0
        for u in members:
            comp_mask |= 1 << u
        seen |= comp_mask
        index = {u: i for i, u in enumerate(members)}
        edges = [
            (index[a], index[b])
            for a, b in g.edges()
            if a in index and b in index
        ]
        out.append((make_graph(len(members), edges), tuple(members)))
    return out


# -- text formats ----------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    """Serialize as ``n m`` followed by one ``u v`` line per edge (0-based)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise GraphFormatError("empty edge-list document")
    try:
        header = [int(tok) for tok in rows[0]]
    except ValueError as exc:
        raise GraphFormatError(f"bad header line: {rows[0]}") from exc
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'")
    n, m = header
    if len(rows) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphFormatError(f"bad edge line: {' '.join(row)}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {' '.join(row)}") from exc
        edges.append((u, v))
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS ``.col`` document (1-based ``e u v`` lines)."""
    n = None
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphFormatError(f"bad problem line: {line}")
            try:
                n = int(parts[2])
            except ValueError as exc:
                raise GraphFormatError(f"bad problem line: {line}") from exc
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"bad edge line: {line}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise GraphFormatError(f"bad edge line: {line}") from exc
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unrecognized line: {line}")
    if n is None:
        raise GraphFormatError("missing problem line")
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
