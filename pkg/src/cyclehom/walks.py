"""Walk-count weights over a bounded-out-degree DAG.

From a DAG this builds, for every ordered pair (x, y) and every length
1 <= l <= horizon, the exact number of directed x->y walks with l edges,
plus a ring-valued view of the pair weights: either the plain sum over
lengths, or the polynomial whose z**l coefficient is the l-walk count.
The polynomial view is what lets the cycle engines separate contributions
by total walk length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Digraph, GraphError
from .ring import RingWeight, TruncatedPolynomial

AGGREGATE = "aggregate"
POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class WeightedDigraph:
    """A digraph whose arcs carry per-length walk counts and a ring weight.

    ``per_length[(x, y, l)]`` is the number of l-edge walks from x to y in
    the source DAG; ``ring_view[(x, y)]`` aggregates those counts per the
    chosen view.  ``digraph`` is the support: the arc (x, y) exists exactly
    when the ring weight is nonzero.
    """

    digraph: Digraph
    horizon: int
    per_length: dict[tuple[int, int, int], int] = field(compare=False)
    ring_view: dict[tuple[int, int], RingWeight] = field(compare=False)

    @property
    def vertex_count(self) -> int:
        return self.digraph.vertex_count

    def out_items(self, x: int) -> list[tuple[int, RingWeight]]:
        return [(y, self.ring_view[(x, y)]) for y in self.digraph.out_adjacency[x]]


def build_walk_weights(
    d: Digraph,
    horizon: int,
    view: str = AGGREGATE,
    trunc: int | None = None,
) -> WeightedDigraph:
    """Count all walks of length up to ``horizon`` between every pair.

    ``view`` selects the ring weight per pair: AGGREGATE sums the counts,
    POLYNOMIAL forms sum_l count_l * z**l truncated at ``trunc`` (defaults
    to the horizon).  Requires a DAG; runs one forward sweep per source, so
    time and output size are n * max_out_degree**horizon in the worst case.
    """
    if horizon < 1:
        raise GraphError("walk horizon must be >= 1")
    if not d.is_dag:
        raise GraphError("walk weights require an acyclic digraph")
    if trunc is None:
        trunc = horizon
    per_length: dict[tuple[int, int, int], int] = {}
    pair_counts: dict[tuple[int, int], list[tuple[int, int]]] = {}
    n = d.vertex_count
    for x in range(n):
        frontier = {x: 1}
        for step in range(1, horizon + 1):
            nxt: dict[int, int] = {}
            for u, cnt in frontier.items():
                for v in d.out_adjacency[u]:
                    nxt[v] = nxt.get(v, 0) + cnt
            if not nxt:
                break
            for y in sorted(nxt):
                per_length[(x, y, step)] = nxt[y]
                pair_counts.setdefault((x, y), []).append((step, nxt[y]))
            frontier = nxt

    ring_view: dict[tuple[int, int], RingWeight] = {}
    for (x, y), items in pair_counts.items():
        if view == AGGREGATE:
            ring_view[(x, y)] = sum(c for _, c in items)
        elif view == POLYNOMIAL:
            coeffs = [0] * (trunc + 1)
            dropped = True
            for step, c in items:
                if step <= trunc:
                    coeffs[step] = c
                    dropped = False
            if dropped:
                continue
            ring_view[(x, y)] = TruncatedPolynomial(coeffs, trunc)
        else:
            raise GraphError(f"unknown view {view!r}")

    support = Digraph.from_arcs(n, sorted(ring_view.keys()))
    return WeightedDigraph(
        digraph=support, horizon=horizon, per_length=per_length, ring_view=ring_view
    )


def restrict_view(
    w: WeightedDigraph, max_length: int, view: str, trunc: int | None = None
) -> WeightedDigraph:
    """Rebuild the ring view keeping only walks of length <= ``max_length``.

    Used by the cycle pipeline to derive, from one full walk-count pass, the
    per-base-size views whose arc weights never exceed the length any single
    subdivision path can attain.
    """
    if trunc is None:
        trunc = max_length
    pair_counts: dict[tuple[int, int], list[tuple[int, int]]] = {}
    per_length: dict[tuple[int, int, int], int] = {}
    for (x, y, step), cnt in w.per_length.items():
        if step <= max_length:
            pair_counts.setdefault((x, y), []).append((step, cnt))
            per_length[(x, y, step)] = cnt
    ring_view: dict[tuple[int, int], RingWeight] = {}
    for (x, y), items in sorted(pair_counts.items()):
        if view == AGGREGATE:
            ring_view[(x, y)] = sum(c for _, c in items)
        else:
            coeffs = [0] * (trunc + 1)
            for step, c in items:
                if step <= trunc:
                    coeffs[step] = c
            p = TruncatedPolynomial(coeffs, trunc)
            if p:
                ring_view[(x, y)] = p
    support = Digraph.from_arcs(w.vertex_count, sorted(ring_view.keys()))
    return WeightedDigraph(
        digraph=support,
        horizon=min(w.horizon, max_length),
        per_length=per_length,
        ring_view=ring_view,
    )


@dataclass(frozen=True)
class WalkPair:
    """Two-sided walk weights for directed-cycle counting.

    ``along`` weights arcs of the alternating cycle that point with the
    traversal direction, ``against`` the ones that point against it.  For
    undirected inputs both sides are the same object.
    """

    along: WeightedDigraph
    against: WeightedDigraph

    @property
    def vertex_count(self) -> int:
        return self.along.vertex_count


def as_pair(w: WeightedDigraph | WalkPair) -> WalkPair:
    if isinstance(w, WalkPair):
        return w
    return WalkPair(along=w, against=w)


def union_in_degrees(pair: WalkPair) -> list[int]:
    """In-degree of each vertex over the union of both weight supports."""
    n = pair.vertex_count
    if pair.along is pair.against:
        return list(pair.along.digraph.in_degree)
    indeg = [0] * n
    seen: set[tuple[int, int]] = set()
    for side in (pair.along, pair.against):
        for u, v in side.digraph.arcs():
            if (u, v) not in seen:
                seen.add((u, v))
                indeg[v] += 1
    return indeg
