"""Cycle detection through transversal counting.

A partitioned graph's cycle transversals (simple p-cycles using each part
exactly once) are counted by inclusion-exclusion over part subsets, each
term a plain cycle-homomorphism count on an induced subgraph.  Directed
k-cycle detection in an arbitrary digraph reduces to this: randomly
k-partition, keep arcs between consecutive classes, subdivide each arc, and
the subdivided graph is a 2-degenerate 2k-partite graph whose transversals
are exactly the surviving directed k-cycles.  Degenerate-graph detection
skips the gadget and counts transversals of the consistent subgraph itself.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass
from itertools import combinations

from .graphs import Digraph, Graph, GraphError, degeneracy_ordering
from .pipeline import EngineError, hom_cycle_degenerate


@dataclass(frozen=True)
class PartitionedGraph:
    """A graph plus a partition of its vertices into at least three parts."""

    graph: Graph | Digraph
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.graph.vertex_count
        if len(self.parts) < 3:
            raise GraphError("partition needs at least 3 parts")
        seen: set[int] = set()
        for part in self.parts:
            for v in part:
                if not 0 <= v < n:
                    raise GraphError(f"vertex {v} out of range")
                if v in seen:
                    raise GraphError(f"vertex {v} appears in two parts")
                seen.add(v)
        if len(seen) != n:
            raise GraphError("parts do not cover the vertex set")

    @property
    def part_count(self) -> int:
        return len(self.parts)

    def directed(self) -> bool:
        return isinstance(self.graph, Digraph) or self.graph.directed


@dataclass(frozen=True)
class TransversalCount:
    """Homomorphism-level and cycle-level transversal counts."""

    hom_transversals: int
    cycle_transversals: int


@dataclass(frozen=True)
class GadgetInstance:
    """Subdivided layered graph whose transversals are directed k-cycles."""

    partitioned: PartitionedGraph
    subdivision_vertices: dict[tuple[int, int], tuple[int, ...]]


def _induced_subgraph(
    pg: PartitionedGraph, keep: tuple[int, ...]
) -> Graph | Digraph | None:
    """Induced subgraph on the union of the kept parts, vertices relabeled."""
    verts: list[int] = []
    for i in keep:
        verts.extend(pg.parts[i])
    if not verts:
        return None
    index = {v: i for i, v in enumerate(sorted(verts))}
    g = pg.graph
    if isinstance(g, Digraph):
        arcs = [
            (index[u], index[v])
            for u, v in g.arcs()
            if u in index and v in index
        ]
        return Digraph.from_arcs(len(index), arcs)
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    adj: list[list[int]] = [[] for _ in range(len(index))]
    for u, v in edges:
        adj[u].append(v)
        if not g.directed:
            adj[v].append(u)
    return Graph(
        vertex_count=len(index),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        directed=g.directed,
        edge_count=len(edges),
    )


def transversal_count(
    pg: PartitionedGraph, hom_engine=None
) -> TransversalCount:
    """Count cycle transversals by inclusion-exclusion over part subsets.

    ``hom_engine(graph, p)`` must return hom(C_p, graph) exactly; it
    defaults to the degenerate-graph pipeline.  The homomorphism-level
    total is divisible by 2p (p in the directed case), one orbit per
    transversal cycle; a failed division means the engine is broken.
    """
    if hom_engine is None:
        hom_engine = hom_cycle_degenerate
    p = pg.part_count
    total = 0
    for size in range(1, p + 1):
        sign = -1 if (p - size) % 2 else 1
        for keep in combinations(range(p), size):
            sub = _induced_subgraph(pg, keep)
            if sub is None:
                continue
            edge_count = (
                sub.arc_count() if isinstance(sub, Digraph) else sub.edge_count
            )
            if edge_count == 0:
                continue
            total += sign * hom_engine(sub, p)
    orbit = p if pg.directed() else 2 * p
    if total % orbit:
        raise EngineError(
            f"transversal total {total} not divisible by {orbit}; engine bug"
        )
    return TransversalCount(hom_transversals=total, cycle_transversals=total // orbit)


def build_detection_gadget(
    d: Digraph,
    k: int,
    partition: tuple[tuple[int, ...], ...],
    cycle_length: int | None = None,
) -> GadgetInstance:
    """Layer a digraph by a k-partition and subdivide the surviving arcs.

    Arcs not going from class i to class i+1 (mod k) are dropped; every kept
    arc becomes an undirected path through fresh vertices.  With the default
    cycle length 2k each arc is split once and the parts alternate vertex
    classes and arc classes.  Larger targets p subdivide the class-1-to-2
    arcs into a path of length p + 2 - 2k instead, supporting odd p.
    """
    if k < 3:
        raise GraphError("gadget needs k >= 3")
    p = 2 * k if cycle_length is None else cycle_length
    if p < 2 * k:
        raise GraphError("gadget cycle length must be at least 2k")
    if len(partition) != k:
        raise GraphError(f"expected a {k}-partition")
    n = d.vertex_count
    cls = [-1] * n
    for i, part in enumerate(partition):
        for v in part:
            cls[v] = i
    if any(c < 0 for c in cls):
        raise GraphError("partition does not cover the vertex set")

    long_len = p + 2 - 2 * k  # length of the paths replacing class-0 arcs
    edges: list[tuple[int, int]] = []
    next_id = n
    subdivision: dict[tuple[int, int], tuple[int, ...]] = {}
    arc_class_members: list[list[list[int]]] = [
        [[] for _ in range(long_len - 1 if i == 0 else 1)] for i in range(k)
    ]
    for u, v in d.arcs():
        i = cls[u]
        if cls[v] != (i + 1) % k:
            continue
        length = long_len if i == 0 else 2
        chain = [next_id + t for t in range(length - 1)]
        next_id += length - 1
        subdivision[(u, v)] = tuple(chain)
        path = [u] + chain + [v]
        for a, b in zip(path, path[1:]):
            edges.append((a, b))
        for slot, z in enumerate(chain):
            arc_class_members[i][slot].append(z)

    adj: list[list[int]] = [[] for _ in range(next_id)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    gadget_graph = Graph(
        vertex_count=next_id,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        directed=False,
        edge_count=len(edges),
    )
    parts: list[tuple[int, ...]] = []
    for i in range(k):
        parts.append(tuple(partition[i]))
        for slot_members in arc_class_members[i]:
            parts.append(tuple(slot_members))
    pg = PartitionedGraph(graph=gadget_graph, parts=tuple(parts))
    return GadgetInstance(partitioned=pg, subdivision_vertices=subdivision)


def default_repetitions(k: int, delta: float = 0.05) -> int:
    return max(1, math.ceil(k**k * math.log(1.0 / delta)))


def detect_directed_cycle(
    d: Digraph,
    k: int,
    reps: int | None = None,
    seed: int | None = None,
    delta: float = 0.05,
    cycle_length: int | None = None,
    hom_engine=None,
) -> bool:
    """Directed k-cycle detection via the subdivision gadget.

    Each repetition randomly k-partitions the vertices, builds the gadget,
    and counts its cycle transversals with the degenerate-graph pipeline
    (the gadget is 2-degenerate).  Any positive count certifies a directed
    k-cycle; a planted cycle survives a repetition with probability at
    least k**-k.
    """
    if k < 3:
        raise GraphError("cycle length must be >= 3")
    if reps is None:
        reps = default_repetitions(k, delta)
    rng = random.Random(seed)
    for _ in range(reps):
        partition = _random_partition(rng, d.vertex_count, k)
        gadget = build_detection_gadget(d, k, partition, cycle_length)
        if any(not part for part in gadget.partitioned.parts):
            continue
        count = transversal_count(gadget.partitioned, hom_engine)
        if count.hom_transversals > 0:
            return True
    return False


def detect_cycle_degenerate(
    g: Graph | Digraph,
    k: int,
    reps: int | None = None,
    seed: int | None = None,
    delta: float = 0.05,
    degeneracy_warning: int = 32,
    hom_engine=None,
) -> bool:
    """(Directed) k-cycle detection in a bounded-degeneracy graph.

    Random k-partitions keep only part-consistent edges; transversals of
    the consistent subgraph are exactly the simple k-cycles colored
    consistently, counted through the degenerate-graph pipeline.  For
    k < 6 plain exhaustive search is faster and used instead.
    """
    if k < 3:
        raise GraphError("cycle length must be >= 3")
    if k < 6:
        return _find_short_cycle(g, k)
    directed = isinstance(g, Digraph) or g.directed
    und = g.underlying_graph() if isinstance(g, Digraph) else g
    if not directed:
        deg_ord = degeneracy_ordering(und)
        if deg_ord.degeneracy > degeneracy_warning:
            warnings.warn(
                f"input degeneracy {deg_ord.degeneracy} is large; "
                "the degenerate-graph detector may be slow",
                stacklevel=2,
            )
    if reps is None:
        reps = default_repetitions(k, delta)
    rng = random.Random(seed)
    n = g.vertex_count
    for _ in range(reps):
        partition = _random_partition(rng, n, k)
        if any(not part for part in partition):
            continue
        cls = [0] * n
        for i, part in enumerate(partition):
            for v in part:
                cls[v] = i
        if directed:
            d = g if isinstance(g, Digraph) else g.to_digraph()
            arcs = [
                (u, v) for u, v in d.arcs() if cls[v] == (cls[u] + 1) % k
            ]
            consistent: Graph | Digraph = Digraph.from_arcs(n, arcs)
            if not arcs:
                continue
        else:
            edges = [
                (u, v)
                for u, v in g.edges()
                if (cls[v] - cls[u]) % k in (1, k - 1)
            ]
            if not edges:
                continue
            adj: list[list[int]] = [[] for _ in range(n)]
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            consistent = Graph(
                vertex_count=n,
                adjacency=tuple(tuple(sorted(a)) for a in adj),
                directed=False,
                edge_count=len(edges),
            )
        pg = PartitionedGraph(graph=consistent, parts=partition)
        if transversal_count(pg, hom_engine).hom_transversals > 0:
            return True
    return False


def _random_partition(
    rng: random.Random, n: int, k: int
) -> tuple[tuple[int, ...], ...]:
    parts: list[list[int]] = [[] for _ in range(k)]
    for v in range(n):
        parts[rng.randrange(k)].append(v)
    return tuple(tuple(p) for p in parts)


def _find_short_cycle(g: Graph | Digraph, k: int) -> bool:
    """Direct DFS search for a simple k-cycle; fine for small k."""
    if isinstance(g, Digraph):
        n, adj = g.vertex_count, g.out_adjacency
    else:
        n, adj = g.vertex_count, g.adjacency
    on_path = [False] * n

    def dfs(start: int, u: int, depth: int) -> bool:
        if depth == k:
            return start in adj[u]
        for v in adj[u]:
            if v == start or on_path[v] or v < start:
                continue
            on_path[v] = True
            if dfs(start, v, depth + 1):
                on_path[v] = False
                return True
            on_path[v] = False
        return False

    for s in range(n):
        on_path[s] = True
        if dfs(s, s, 1):
            return True
        on_path[s] = False
    return False
