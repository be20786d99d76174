"""Closed CF coloring of interval families with three colors.

A chain of intervals s_1, s_2, ... is selected greedily from left to right and
colored 1, 2 alternately; everything else gets color 3.  Consecutive chain
members overlap or bridge a hole of the union, chain members two apart are
disjoint, and no color-3 interval can see two intervals of each chain color,
which together make the coloring closed conflict-free.
"""
from __future__ import annotations

from bisect import bisect_right

from .errors import VerificationError
from .geom import Interval, Scene
from .hypergraph import Coloring, intersection_graph, neighborhood_hypergraph, verify_cf

__all__ = ["closed_cf_color_intervals"]


def _merged_union(ivs: list[Interval]) -> list[tuple[float, float]]:
    parts = sorted((iv.lo, iv.hi) for iv in ivs)
    out: list[list[float]] = []
    for lo, hi in parts:
        if out and lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return [(lo, hi) for lo, hi in out]


def _open_gap_empty(union: list[tuple[float, float]], a: float, b: float) -> bool:
    """Whether the open interval (a, b) avoids the union entirely."""
    if b <= a:
        return True
    starts = [lo for lo, _ in union]
    idx = bisect_right(starts, a) - 1
    if idx >= 0 and union[idx][1] > a:
        return False
    if idx + 1 < len(union) and union[idx + 1][0] < b:
        return False
    return True


def closed_cf_color_intervals(intervals: Scene) -> tuple[Coloring, list[int]]:
    """Closed CF coloring of an interval scene with at most 3 colors.

    Returns the coloring and the selected chain (original indices in selection
    order).  The chain starts at the leftmost interval with the farthest right
    endpoint; each successor has the farthest right endpoint among intervals
    reaching past the current one, either overlapping it or starting directly
    across a hole of the union.  Ties go to the smaller index.
    """
    if len(intervals) == 0:
        raise ValueError("empty interval family")
    if intervals.kind != "intervals":
        raise ValueError("scene must contain intervals only")
    ivs = list(intervals.shapes)
    n = len(ivs)
    union = _merged_union(ivs)

    min_lo = min(iv.lo for iv in ivs)
    s1 = max(
        (i for i in range(n) if ivs[i].lo == min_lo),
        key=lambda i: (ivs[i].hi, -i),
    )
    chain = [s1]
    while True:
        r_cur = ivs[chain[-1]].hi
        best = None
        for i in range(n):
            iv = ivs[i]
            if iv.hi <= r_cur:
                continue
            if iv.lo <= r_cur or _open_gap_empty(union, r_cur, iv.lo):
                if best is None or iv.hi > ivs[best].hi:
                    best = i
        if best is None:
            break
        chain.append(best)

    colors = [3] * n
    for pos, i in enumerate(chain):
        colors[i] = 1 + (pos % 2)
    out = Coloring(tuple(colors))
    _check_chain_invariants(ivs, chain, colors, union)
    closed = neighborhood_hypergraph(intersection_graph(intervals), "closed")
    bad = verify_cf(closed, out)
    if bad:
        raise VerificationError(f"interval coloring is not closed-CF on neighborhoods {bad[:5]}")
    return out, chain


def _check_chain_invariants(ivs, chain, colors, union) -> None:
    """Structural facts the correctness argument rests on; checked every run."""
    k = len(chain)
    rights = [ivs[i].hi for i in chain]
    if any(b <= a for a, b in zip(rights, rights[1:])):
        raise VerificationError("chain right endpoints are not strictly increasing")
    for a in range(k):
        for b in range(a + 2, k):
            ia, ib = ivs[chain[a]], ivs[chain[b]]
            if ia.lo <= ib.hi and ib.lo <= ia.hi:
                raise VerificationError(f"chain members {a} and {b} intersect but are 2+ apart")
    for i, iv in enumerate(ivs):
        for a in range(k - 2):
            sa, sm, sb = (ivs[chain[a + d]] for d in range(3))
            hits_a = iv.lo <= sa.hi and sa.lo <= iv.hi
            hits_b = iv.lo <= sb.hi and sb.lo <= iv.hi
            hits_m = iv.lo <= sm.hi and sm.lo <= iv.hi
            if hits_a and hits_b and not hits_m:
                raise VerificationError(f"interval {i} meets chain links {a} and {a + 2} but not {a + 1}")
    for i, iv in enumerate(ivs):
        if colors[i] != 3:
            continue
        ones = sum(
            1
            for pos, j in enumerate(chain)
            if pos % 2 == 0 and iv.lo <= ivs[j].hi and ivs[j].lo <= iv.hi
        )
        twos = sum(
            1
            for pos, j in enumerate(chain)
            if pos % 2 == 1 and iv.lo <= ivs[j].hi and ivs[j].lo <= iv.hi
        )
        if ones >= 2 and twos >= 2:
            raise VerificationError(f"color-3 interval {i} sees two of each chain color")
    # the chain covers the union: every endpoint of the family lies in a link
    for iv in ivs:
        for p in (iv.lo, iv.hi):
            if not any(ivs[j].lo <= p <= ivs[j].hi for j in chain):
                raise VerificationError(f"chain does not cover family point {p}")
