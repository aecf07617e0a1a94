"""Matrix-chain engine for alternating cycle orientations.

Homomorphisms of the alternating 2k-cycle factor through "cherries": common
in-neighbor aggregates over sink pairs.  Vertices are bucketed into
power-of-two in-degree classes; for every k-tuple of classes the cherry
matrix restricted to consecutive classes is chained around the cycle and the
trace of the product is accumulated.  A small exact dynamic program decides,
per class tuple, how to evaluate the chain: extend a sparse product left or
right by one factor, or split and multiply two dense halves.  The same
recurrence, maximized over fractional degree-class exponents, yields the
engine's cost-model exponent c_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import GraphError
from .ops import OpCounter
from .ring import RingWeight
from .walks import WalkPair, WeightedDigraph, as_pair, union_in_degrees


@dataclass(frozen=True)
class CostParams:
    """Cost-model parameters: the matrix-multiplication exponent used for
    planning (execution is always classical) and the maximization grid."""

    omega: Fraction = Fraction(3)
    grid_step: Fraction = Fraction(1, 100)

    def mm_exponent(self, a: Fraction, b: Fraction, c: Fraction) -> Fraction:
        """Model exponent for multiplying n**a x n**b by n**b x n**c."""
        return a + b + c - (3 - self.omega) * min(a, b, c)


@dataclass(frozen=True)
class EvaluationPlan:
    """Chain-evaluation choices and predicted exponents for one class tuple."""

    k: int
    d: tuple[Fraction, ...]
    exponents: dict[tuple[int, int], Fraction]
    choices: dict[tuple[int, int], tuple]
    closing_pair: tuple[int, int]
    objective: Fraction


@dataclass(frozen=True)
class CherryTable:
    """Sparse (x, y) -> weight table of common-in-neighbor products."""

    entries: dict[tuple[int, int], RingWeight]


def build_cherry_table(
    w: WeightedDigraph | WalkPair, ops: OpCounter | None = None
) -> CherryTable:
    """Aggregate w(z, x) * w(z, y) over every common in-neighbor z.

    One pass over vertices and out-neighbor pairs; with bounded out-degrees
    the table has O(n) nonzero entries.
    """
    pair = as_pair(w)
    entries: dict[tuple[int, int], RingWeight] = {}
    for z in range(pair.vertex_count):
        against_out = pair.against.out_items(z)
        along_out = pair.along.out_items(z)
        if ops:
            ops.add(len(against_out) * len(along_out))
        for x, wax in against_out:
            for y, wly in along_out:
                key = (x, y)
                val = wax * wly
                got = entries.get(key)
                entries[key] = val if got is None else got + val
    return CherryTable(entries=entries)


def plan_matrix_chain(
    d: tuple[Fraction, ...], k: int, cp: CostParams
) -> EvaluationPlan:
    """Exact chain-evaluation dynamic program over cyclic intervals.

    For every ordered pair (i, j) the predicted exponent is the least of:
    extending the (i, j-1) chain right, extending the (i+1, j) chain left,
    or splitting at an interior r and multiplying dense halves at the cost
    model's exponent.  Single-step chains cost exponent 1.  The objective is
    the best closing pair, taking the worse of its two complementary chains.
    """
    if k < 2:
        raise GraphError("chain planning needs k >= 2")
    if len(d) != k:
        raise GraphError(f"expected {k} exponents, got {len(d)}")
    d = tuple(Fraction(x) for x in d)
    for x in d:
        if not 0 <= x <= 1:
            raise GraphError("class exponents must lie in [0, 1]")
    one = Fraction(1)
    exponents: dict[tuple[int, int], Fraction] = {}
    choices: dict[tuple[int, int], tuple] = {}
    for span in range(1, k):
        for i in range(k):
            j = (i + span) % k
            if span == 1:
                exponents[(i, j)] = one
                choices[(i, j)] = ("base",)
                continue
            jm = (j - 1) % k
            ip = (i + 1) % k
            best = exponents[(i, jm)] + d[jm]
            pick: tuple = ("right",)
            alt = exponents[(ip, j)] + d[ip]
            if alt < best:
                best, pick = alt, ("left",)
            for t in range(1, span):
                r = (i + t) % k
                mm = cp.mm_exponent(one - d[i], one - d[r], one - d[j])
                cand = max(exponents[(i, r)], exponents[(r, j)], mm)
                if cand < best:
                    best, pick = cand, ("split", r)
            exponents[(i, j)] = best
            choices[(i, j)] = pick
    objective = None
    closing = (0, 1)
    for i in range(k):
        for j in range(i + 1, k):
            cand = max(exponents[(i, j)], exponents[(j, i)])
            if objective is None or cand < objective:
                objective = cand
                closing = (i, j)
    assert objective is not None
    return EvaluationPlan(
        k=k, d=d, exponents=exponents, choices=choices,
        closing_pair=closing, objective=objective,
    )


_PLAN_CACHE: dict[tuple, EvaluationPlan] = {}


def _cached_plan(d: tuple[Fraction, ...], k: int, cp: CostParams) -> EvaluationPlan:
    key = (k, d, cp.omega)
    plan = _PLAN_CACHE.get(key)
    if plan is None:
        plan = plan_matrix_chain(d, k, cp)
        _PLAN_CACHE[key] = plan
    return plan


def _vector_objective(coords: list[np.ndarray], k: int, omega: float) -> np.ndarray:
    """Vectorized chain objective over a batch of exponent tuples."""
    one_minus = [1.0 - c for c in coords]
    exps: dict[tuple[int, int], np.ndarray] = {}
    ones = np.ones_like(coords[0])
    for span in range(1, k):
        for i in range(k):
            j = (i + span) % k
            if span == 1:
                exps[(i, j)] = ones
                continue
            jm = (j - 1) % k
            ip = (i + 1) % k
            best = exps[(i, jm)] + coords[jm]
            np.minimum(best, exps[(ip, j)] + coords[ip], out=best)
            for t in range(1, span):
                r = (i + t) % k
                mm = one_minus[i] + one_minus[r] + one_minus[j] - (3.0 - omega) * (
                    np.minimum(np.minimum(one_minus[i], one_minus[r]), one_minus[j])
                )
                cand = np.maximum(np.maximum(exps[(i, r)], exps[(r, j)]), mm)
                np.minimum(best, cand, out=best)
            exps[(i, j)] = best
    obj = None
    for i in range(k):
        for j in range(i + 1, k):
            cand = np.maximum(exps[(i, j)], exps[(j, i)])
            obj = cand if obj is None else np.minimum(obj, cand)
    assert obj is not None
    return obj


def cost_model_ck(
    k: int,
    cp: CostParams,
    budget: int = 60_000_000,
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Maximize the chain objective over the exponent grid {0, step, ..., 1}.

    Returns the maximum (re-evaluated exactly at the best grid point) and
    the maximizing tuple.  The scan fixes the first coordinate as a minimum
    of the tuple, which loses nothing by rotation invariance, and raises if
    the pruned grid still exceeds the evaluation budget.
    """
    if k < 2:
        raise GraphError("cost model needs k >= 2")
    step = Fraction(cp.grid_step)
    if step <= 0:
        raise GraphError("grid step must be positive")
    m = int(Fraction(1) / step)
    values = [step * i for i in range(m + 1)]
    if values[-1] != 1:
        values.append(Fraction(1))
    npts = len(values)
    total = sum((npts - i) ** (k - 1) for i in range(npts))
    if total > budget:
        raise GraphError(
            f"cost-model grid has {total} points, over the budget of {budget}"
        )
    vals = np.array([float(v) for v in values])
    best_val = -np.inf
    best_tuple: tuple[Fraction, ...] | None = None
    for i0 in range(npts):
        rest = vals[i0:]
        if k == 2:
            coords = [np.full(rest.shape, vals[i0]), rest]
        else:
            grids = np.meshgrid(*([rest] * (k - 1)), indexing="ij")
            coords = [np.full(grids[0].size, vals[i0])] + [g.ravel() for g in grids]
        obj = _vector_objective(coords, k, float(cp.omega))
        idx = int(np.argmax(obj))
        if obj.flat[idx] > best_val:
            best_val = float(obj.flat[idx])
            span = npts - i0
            offs = []
            rem = idx
            for _ in range(k - 1):
                offs.append(rem % span)
                rem //= span
            offs.reverse()
            best_tuple = (values[i0],) + tuple(values[i0 + o] for o in offs)
    assert best_tuple is not None
    exact = plan_matrix_chain(best_tuple, k, cp).objective
    return exact, best_tuple


def in_degree_classes(w: WeightedDigraph | WalkPair) -> dict[int, list[int]]:
    """Bucket vertices by in-degree: class i holds 2**i <= in-degree < 2**(i+1)."""
    pair = as_pair(w)
    indeg = union_in_degrees(pair)
    classes: dict[int, list[int]] = {}
    for v, dv in enumerate(indeg):
        if dv >= 1:
            classes.setdefault(dv.bit_length() - 1, []).append(v)
    return classes


def hom_alt_cycle_matmul(
    w: WeightedDigraph | WalkPair,
    half_length: int,
    cp: CostParams | None = None,
    ops: OpCounter | None = None,
    planner=None,
) -> RingWeight:
    """Total weight of homomorphisms from the alternating 2k-cycle.

    Classifies sink images by in-degree class, and for each class tuple
    evaluates the cyclic cherry-matrix chain along its planned order,
    closing with a sparse transposed dot product.  ``planner`` overrides
    the plan per class tuple (any valid plan gives the same count).
    """
    k = half_length
    if k < 2:
        raise GraphError("alternating cycle needs half-length >= 2")
    if cp is None:
        cp = CostParams()
    pair = as_pair(w)
    n = pair.vertex_count
    if n <= 1:
        return 0
    cherry = build_cherry_table(pair, ops).entries
    classes = in_degree_classes(pair)
    if not classes or not cherry:
        return 0
    log2n = max(1, n.bit_length() - 1)
    cls_of: dict[int, int] = {}
    for c, verts in classes.items():
        for v in verts:
            cls_of[v] = c

    # cherry entries partitioned by endpoint classes, plus one-step partner
    # lists in both directions for the sparse extension steps
    parts: dict[tuple[int, int], dict[tuple[int, int], RingWeight]] = {}
    right_partners: dict[int, dict[int, list[tuple[int, RingWeight]]]] = {}
    left_partners: dict[int, dict[int, list[tuple[int, RingWeight]]]] = {}
    for (x, y), weight in cherry.items():
        cx, cy = cls_of[x], cls_of[y]
        parts.setdefault((cx, cy), {})[(x, y)] = weight
        right_partners.setdefault(x, {}).setdefault(cy, []).append((y, weight))
        left_partners.setdefault(y, {}).setdefault(cx, []).append((x, weight))

    transitions: dict[int, list[int]] = {}
    for cx, cy in parts:
        transitions.setdefault(cx, []).append(cy)
    for lst in transitions.values():
        lst.sort()

    class_index = {
        c: {v: i for i, v in enumerate(verts)} for c, verts in classes.items()
    }

    def execute(f: tuple[int, ...], plan: EvaluationPlan) -> RingWeight:
        memo: dict[tuple[int, int], dict[tuple[int, int], RingWeight]] = {}

        def chain(i: int, j: int) -> dict[tuple[int, int], RingWeight]:
            got = memo.get((i, j))
            if got is not None:
                return got
            pick = plan.choices[(i, j)]
            if pick[0] == "base":
                table = parts.get((f[i], f[j]), {})
            elif pick[0] == "right":
                jm = (j - 1) % k
                prev = chain(i, jm)
                table = {}
                target = f[j]
                for (x, y), wt in prev.items():
                    hits = right_partners.get(y)
                    if not hits:
                        continue
                    for y2, cw in hits.get(target, ()):
                        key = (x, y2)
                        val = wt * cw
                        acc = table.get(key)
                        table[key] = val if acc is None else acc + val
                        if ops:
                            ops.add()
            elif pick[0] == "left":
                ip = (i + 1) % k
                prev = chain(ip, j)
                table = {}
                target = f[i]
                for (x, y), wt in prev.items():
                    hits = left_partners.get(x)
                    if not hits:
                        continue
                    for x2, cw in hits.get(target, ()):
                        key = (x2, y)
                        val = cw * wt
                        acc = table.get(key)
                        table[key] = val if acc is None else acc + val
                        if ops:
                            ops.add()
            else:
                r = pick[1]
                table = _dense_product(
                    chain(i, r), chain(r, j),
                    classes[f[i]], class_index[f[i]],
                    classes[f[r]], class_index[f[r]],
                    classes[f[j]], class_index[f[j]],
                    ops,
                )
            memo[(i, j)] = table
            return table

        i, j = plan.closing_pair
        first = chain(i, j)
        if not first:
            return 0
        second = chain(j, i)
        if not second:
            return 0
        if len(first) > len(second):
            first, second = second, first
            # trace(AB) = trace(BA); swapping just iterates the smaller table
        total: RingWeight = 0
        for (x, y), wt in first.items():
            other = second.get((y, x))
            if other is not None:
                total = total + wt * other
                if ops:
                    ops.add()
        return total

    total: RingWeight = 0

    def tuples(prefix: list[int]) -> None:
        nonlocal total
        if len(prefix) == k:
            if prefix[0] not in transitions.get(prefix[-1], ()):
                return
            f = tuple(prefix)
            d = tuple(Fraction(c, log2n) for c in f)
            if planner is None:
                plan = _cached_plan(d, k, cp)
            else:
                plan = planner(d, k, cp)
            total = total + execute(f, plan)
            return
        options = transitions.get(prefix[-1], []) if prefix else sorted(classes)
        for c in options:
            prefix.append(c)
            tuples(prefix)
            prefix.pop()

    tuples([])
    return total


def _dense_product(
    left: dict[tuple[int, int], RingWeight],
    mid_right: dict[tuple[int, int], RingWeight],
    rows: list[int],
    row_pos: dict[int, int],
    mids: list[int],
    mid_pos: dict[int, int],
    cols: list[int],
    col_pos: dict[int, int],
    ops: OpCounter | None,
) -> dict[tuple[int, int], RingWeight]:
    """Classical dense multiply of two sparse-stored chain segments."""
    nr, nm, nc = len(rows), len(mids), len(cols)
    a: list[list[RingWeight]] = [[0] * nm for _ in range(nr)]
    for (x, y), wt in left.items():
        a[row_pos[x]][mid_pos[y]] = wt
    b: list[list[RingWeight]] = [[0] * nc for _ in range(nm)]
    for (x, y), wt in mid_right.items():
        b[mid_pos[x]][col_pos[y]] = wt
    out: list[list[RingWeight]] = [[0] * nc for _ in range(nr)]
    for ri in range(nr):
        arow = a[ri]
        orow = out[ri]
        for mi in range(nm):
            av = arow[mi]
            if not av:
                continue
            brow = b[mi]
            for ci in range(nc):
                bv = brow[ci]
                if bv:
                    orow[ci] = orow[ci] + av * bv
                    if ops:
                        ops.add()
    result: dict[tuple[int, int], RingWeight] = {}
    for ri, x in enumerate(rows):
        orow = out[ri]
        for ci, y in enumerate(cols):
            if orow[ci]:
                result[(x, y)] = orow[ci]
    return result
