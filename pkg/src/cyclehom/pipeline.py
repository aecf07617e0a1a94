"""Cycle-homomorphism counting in bounded-degeneracy graphs.

A homomorphism of the l-cycle into an undirected graph, read against a
degeneracy orientation, traverses some acyclic orientation of the cycle: a
cyclic pattern of ascending and descending runs.  Grouping orientations by
their number of sources p, every orientation with p sources is a directed
subdivision of the alternating 2p-cycle, and summing the subdivision choices
is exactly what the polynomial walk weights compute: the coefficient of z**l
in the alternating-cycle count over the walk-weight digraph adds up all
orientations with p sources, each counted p times out of the l placements of
a distinguished source.  Hence

    hom(C_l, G) = sum over p of (l / p) * S_p,

with S_p the z**l coefficient for base size p (p = 1 handled by the
two-path tables).  Directed inputs follow the same decomposition with arcs
split into ascending and descending walk weights.
"""

from __future__ import annotations

from fractions import Fraction

from .comb import hom_alt_cycle_comb, hom_two_paths
from .graphs import (
    Digraph,
    Graph,
    GraphError,
    degeneracy_ordering,
    orient_acyclic,
    split_by_ordering,
)
from .matmul import CostParams, cost_model_ck, hom_alt_cycle_matmul
from .ops import OpCounter
from .ring import ring_coefficient
from .walks import (
    AGGREGATE,
    POLYNOMIAL,
    WalkPair,
    build_walk_weights,
    restrict_view,
)

ENGINES = ("comb", "matmul", "auto")


class EngineError(GraphError):
    """An internal consistency assertion failed inside a counting engine."""


_AUTO_CACHE: dict[tuple[int, Fraction], str] = {}


def _engine_for(p: int, cp: CostParams) -> str:
    """The engine the cost model favors for the alternating 2p-cycle."""
    key = (p, cp.omega)
    got = _AUTO_CACHE.get(key)
    if got is None:
        coarse = CostParams(omega=cp.omega, grid_step=Fraction(1, 20))
        ck, _ = cost_model_ck(p, coarse)
        comb_exp = Fraction(2) - Fraction(1, (p + 1) // 2)
        got = "matmul" if ck < comb_exp else "comb"
        _AUTO_CACHE[key] = got
    return got


def _oriented_pair(g: Graph | Digraph, horizon: int):
    """Degeneracy-orient the input and build full-horizon walk weights.

    Undirected graphs yield one weight structure used on both sides;
    digraphs split their arcs into ascending and descending DAGs first.
    Returns (pair, degeneracy).
    """
    if isinstance(g, Graph) and not g.directed:
        ordering = degeneracy_ordering(g)
        dag = orient_acyclic(g, ordering)
        w = build_walk_weights(dag, horizon, AGGREGATE)
        return WalkPair(along=w, against=w), ordering.degeneracy
    d = g.to_digraph() if isinstance(g, Graph) else g
    ordering = degeneracy_ordering(d.underlying_graph())
    ascending, descending = split_by_ordering(d, ordering)
    along = build_walk_weights(ascending, horizon, AGGREGATE)
    against = build_walk_weights(descending, horizon, AGGREGATE)
    return WalkPair(along=along, against=against), ordering.degeneracy


def hom_cycle_degenerate(
    g: Graph | Digraph,
    length: int,
    engine: str = "auto",
    cp: CostParams | None = None,
    ops: OpCounter | None = None,
    cross_check: bool = False,
) -> int:
    """Exact hom(C_length, g); the directed cycle when g is directed.

    ``engine`` picks how alternating-cycle counts are computed: "comb" for
    the path-table engine, "matmul" for the matrix-chain engine, or "auto"
    to follow the cost model (with classical-multiplication omega = 3 the
    model always selects "comb").
    """
    if length < 3:
        raise GraphError("cycle length must be >= 3")
    if engine not in ENGINES:
        raise GraphError(f"unknown engine {engine!r}")
    if cp is None:
        cp = CostParams()
    if g.vertex_count == 0:
        return 0

    pair, _ = _oriented_pair(g, horizon=length - 1)
    total = 0
    for p in range(1, length // 2 + 1):
        s_p = _base_count(pair, p, length, engine, cp, ops, cross_check)
        scaled = length * s_p
        if scaled % p:
            raise EngineError(
                f"composition sum for base {p} is not divisible by {p}"
            )
        total += scaled // p
    return total


def _base_count(
    pair: WalkPair,
    p: int,
    length: int,
    engine: str,
    cp: CostParams,
    ops: OpCounter | None,
    cross_check: bool,
) -> int:
    """S_p: combined count of subdivisions of the 2p-source base of size l."""
    if p == 1:
        total = 0
        for a in range(1, length):
            total += hom_two_paths(pair, a, length - a, ops)
        if cross_check:
            direct = sum(
                _one_source_direct(pair, a, length - a) for a in range(1, length)
            )
            if direct != total:
                raise EngineError("two-path count disagrees with direct enumeration")
        return total

    max_run = length - (2 * p - 1)
    if max_run == 1:
        along = restrict_view(pair.along, 1, AGGREGATE)
        against = along if pair.against is pair.along else restrict_view(
            pair.against, 1, AGGREGATE
        )
        view = WalkPair(along=along, against=against)
        result = _run_engine(view, p, engine, cp, ops)
        return result if isinstance(result, int) else result.at_one()

    along = restrict_view(pair.along, max_run, POLYNOMIAL, trunc=length)
    against = along if pair.against is pair.along else restrict_view(
        pair.against, max_run, POLYNOMIAL, trunc=length
    )
    view = WalkPair(along=along, against=against)
    result = _run_engine(view, p, engine, cp, ops)
    return ring_coefficient(result, length)


def _run_engine(view: WalkPair, p: int, engine: str, cp: CostParams, ops):
    if engine == "auto":
        engine = _engine_for(p, cp)
    if engine == "comb":
        return hom_alt_cycle_comb(view, p, ops=ops)
    return hom_alt_cycle_matmul(view, p, cp=cp, ops=ops)


def _one_source_direct(pair: WalkPair, a: int, b: int) -> int:
    """Linear-time single-source orientation count by fresh walk expansion.

    Cross-check path: recounts walks by breadth-first sweeps over the
    original arcs instead of the prebuilt per-length tables.
    """

    def arc_lists(per_length, n: int) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(n)]
        for (x, y, step) in per_length:
            if step == 1:
                adj[x].append(y)
        return adj

    def endpoints(adj: list[list[int]], source: int, steps: int) -> dict[int, int]:
        frontier = {source: 1}
        for _ in range(steps):
            nxt: dict[int, int] = {}
            for u, cnt in frontier.items():
                for v in adj[u]:
                    nxt[v] = nxt.get(v, 0) + cnt
            frontier = nxt
            if not frontier:
                break
        return frontier

    n = pair.vertex_count
    along_adj = arc_lists(pair.along.per_length, n)
    against_adj = (
        along_adj
        if pair.against is pair.along
        else arc_lists(pair.against.per_length, n)
    )
    total = 0
    for u in range(n):
        ea = endpoints(along_adj, u, a)
        if not ea:
            continue
        eb = endpoints(against_adj, u, b)
        for v, ca in ea.items():
            cb = eb.get(v)
            if cb:
                total += ca * cb
    return total
