"""Graph and digraph representations, edge-list parsing, degeneracy orderings.

Vertex ids are dense integers assigned at parse time in order of first
appearance.  All structures are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field


class GraphError(Exception):
    """Malformed input or misuse of a graph operation."""


class ParseError(GraphError):
    """Bad edge-list input; the message names the offending line."""


@dataclass(frozen=True)
class Graph:
    """A simple graph, undirected or directed, over dense vertex ids.

    For undirected graphs every edge is stored in both endpoint lists and
    ``edge_count`` is the number of undirected edges.  For directed graphs
    ``adjacency[u]`` holds the out-neighbors of ``u`` and ``edge_count`` is
    the number of arcs.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    directed: bool
    edge_count: int
    labels: tuple[str, ...] = field(default=(), compare=False)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ordered pairs; undirected edges once, as (min, max)."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if self.directed or u < v:
                    out.append((u, v))
        return out

    def to_digraph(self) -> "Digraph":
        if not self.directed:
            raise GraphError("cannot view an undirected graph as a digraph")
        return Digraph.from_arcs(self.vertex_count, self.edges())


@dataclass(frozen=True)
class Digraph:
    """A digraph with out-adjacency lists, degree summaries and a DAG flag."""

    vertex_count: int
    out_adjacency: tuple[tuple[int, ...], ...]
    in_degree: tuple[int, ...]
    max_out_degree: int
    is_dag: bool

    @staticmethod
    def from_arcs(
        n: int, arcs: list[tuple[int, int]], allow_loops: bool = False
    ) -> "Digraph":
        out: list[list[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u},{v}) out of range for n={n}")
            if u == v and not allow_loops:
                raise GraphError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
            out[u].append(v)
            indeg[v] += 1
        for lst in out:
            lst.sort()
        return Digraph(
            vertex_count=n,
            out_adjacency=tuple(tuple(lst) for lst in out),
            in_degree=tuple(indeg),
            max_out_degree=max((len(lst) for lst in out), default=0),
            is_dag=_is_acyclic(n, out, indeg),
        )

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.out_adjacency) for v in nbrs]

    def arc_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.out_adjacency)

    def in_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """In-neighbor lists, computed on demand."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, nbrs in enumerate(self.out_adjacency):
            for v in nbrs:
                inc[v].append(u)
        return tuple(tuple(lst) for lst in inc)

    def reversed(self) -> "Digraph":
        return Digraph.from_arcs(
            self.vertex_count, [(v, u) for u, v in self.arcs()], allow_loops=True
        )

    def underlying_graph(self) -> Graph:
        """The simple undirected graph obtained by forgetting arc directions."""
        pairs = {(min(u, v), max(u, v)) for u, v in self.arcs() if u != v}
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in sorted(pairs):
            adj[u].append(v)
            adj[v].append(u)
        return Graph(
            vertex_count=self.vertex_count,
            adjacency=tuple(tuple(sorted(lst)) for lst in adj),
            directed=False,
            edge_count=len(pairs),
        )


def _is_acyclic(n: int, out: list[list[int]], indeg: list[int]) -> bool:
    remaining = list(indeg)
    stack = [v for v in range(n) if remaining[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in out[u]:
            remaining[v] -= 1
            if remaining[v] == 0:
                stack.append(v)
    return seen == n


@dataclass(frozen=True)
class DegeneracyOrdering:
    """A vertex order in which every vertex has at most ``degeneracy``
    neighbors later in the order."""

    order: tuple[int, ...]
    degeneracy: int


def parse_graph(text: str | bytes, directed: bool = False) -> Graph:
    """Parse whitespace-separated "u v" lines into a Graph.

    Lines starting with '#' and blank lines are ignored.  Vertex labels may
    be arbitrary tokens; they are densified to integer ids in order of first
    appearance.  Self-loops and repeated edges are rejected.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    ids: dict[str, int] = {}
    labels: list[str] = []
    adj: list[list[int]] = []
    seen: set[tuple[int, int]] = set()
    count = 0

    def vid(tok: str) -> int:
        if tok not in ids:
            ids[tok] = len(labels)
            labels.append(tok)
            adj.append([])
        return ids[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = vid(parts[0]), vid(parts[1])
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {parts[0]!r}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {raw!r}")
        seen.add(key)
        adj[u].append(v)
        if not directed:
            adj[v].append(u)
        count += 1

    return Graph(
        vertex_count=len(labels),
        adjacency=tuple(tuple(sorted(lst)) for lst in adj),
        directed=directed,
        edge_count=count,
        labels=tuple(labels),
    )


def write_graph(g: Graph | Digraph) -> str:
    """Serialize to the edge-list format, edges sorted by (u, v)."""
    if isinstance(g, Digraph):
        pairs = sorted(g.arcs())
    elif g.directed:
        pairs = sorted(g.edges())
    else:
        pairs = sorted(g.edges())
    return "".join(f"{u} {v}\n" for u, v in pairs)


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Repeated minimum-degree removal; ties broken by smallest vertex id.

    Returns the removal order together with the exact degeneracy (the
    maximum degree seen at removal time).
    """
    if g.directed:
        raise GraphError("degeneracy ordering requires an undirected graph")
    n = g.vertex_count
    deg = [g.degree(v) for v in range(n)]
    heap: list[tuple[int, int]] = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order: list[int] = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        degeneracy = max(degeneracy, d)
        for u in g.neighbors(v):
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return DegeneracyOrdering(order=tuple(order), degeneracy=degeneracy)


def orient_acyclic(g: Graph, ordering: DegeneracyOrdering) -> Digraph:
    """Orient every edge from the earlier to the later vertex of ``ordering``.

    The result is acyclic with max out-degree at most ``ordering.degeneracy``.
    """
    if g.directed:
        raise GraphError("orient_acyclic requires an undirected graph")
    n = g.vertex_count
    if len(ordering.order) != n or sorted(ordering.order) != list(range(n)):
        raise GraphError("ordering does not match the graph's vertex set")
    pos = [0] * n
    for i, v in enumerate(ordering.order):
        pos[v] = i
    arcs = []
    for u, v in g.edges():
        if pos[u] < pos[v]:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    d = Digraph.from_arcs(n, arcs)
    if not d.is_dag:
        raise GraphError("orientation produced a cycle; ordering invalid")
    return d


def split_by_ordering(d: Digraph, ordering: DegeneracyOrdering) -> tuple[Digraph, Digraph]:
    """Split a digraph's arcs by direction relative to a vertex ordering.

    Returns two DAGs over the same vertex set, both with arcs pointing from
    earlier to later in the ordering: the first holds the arcs of ``d`` that
    already ascend, the second the descending arcs, reversed.  Both have max
    out-degree at most the ordering's degeneracy of the underlying graph.
    """
    n = d.vertex_count
    pos = [0] * n
    for i, v in enumerate(ordering.order):
        pos[v] = i
    ascending = []
    descending = []
    for u, v in d.arcs():
        if pos[u] < pos[v]:
            ascending.append((u, v))
        else:
            descending.append((v, u))
    return Digraph.from_arcs(n, ascending), Digraph.from_arcs(n, descending)
