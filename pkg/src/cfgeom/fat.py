"""Pointed and closed CF coloring of fat convex objects by grid packing.

Every object carries a certificate (anchor, r_inner, r_outer); after scaling
so the smallest inner radius is 1, anchors are binned into a unit grid whose
cell colors repeat with period 4*k*ceil(rho) + 1 in each direction.  The
period is chosen so that an object can intersect at most one representative
of any cell-color class, which makes the representative colors unique in
every pointed neighborhood.  Disc scenes are accepted directly: a disc is the
1-fat object with certificate (center, r, r).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import VerificationError
from .framework import pointed_to_closed
from .geom import ConvexFatObject, Disc, Scene
from .hypergraph import Coloring, intersection_graph, neighborhood_hypergraph, verify_cf

__all__ = [
    "pointed_cf_color_fat",
    "closed_cf_color_fat",
    "closed_cf_color_fat_report",
    "BucketReport",
    "bucket_report_csv",
    "grid_side",
]

_CERT_TOL = 1 + 1e-9


def _certificates(objs: Scene, rho: float, k: float) -> list[tuple[float, float, float, float]]:
    """(ax, ay, r_inner, r_outer) per object, validated against rho and k."""
    if objs.kind not in ("fat", "discs"):
        raise ValueError("fat coloring accepts convex fat objects or discs")
    out = []
    for i, s in enumerate(objs.shapes):
        if isinstance(s, Disc):
            if s.radius <= 0:
                raise ValueError(f"disc {i} has zero radius; fat objects need positive size")
            out.append((s.center.x, s.center.y, s.radius, s.radius))
        else:
            assert isinstance(s, ConvexFatObject)
            out.append((s.anchor.x, s.anchor.y, s.r_inner, s.r_outer))
    for i, (_, _, ri, ro) in enumerate(out):
        if ro / ri > rho * _CERT_TOL:
            raise ValueError(f"object {i} has fatness {ro / ri:.4f} above the declared {rho}")
    sizes = [ri for _, _, ri, _ in out]
    if max(sizes) / min(sizes) > k * _CERT_TOL:
        raise ValueError(f"family size-ratio {max(sizes) / min(sizes):.4f} exceeds the declared {k}")
    return out


def grid_side(rho: float, k: float) -> int:
    """Cell-color period 4*k*ceil(rho) + 1 (k rounded up to an integer)."""
    return 4 * math.ceil(k) * math.ceil(rho) + 1


def _cells(certs) -> list[tuple[int, int]]:
    """Unit-grid cell of each normalized anchor, with the grid origin shifted
    deterministically until no anchor sits on a gridline."""
    smin = min(ri for _, _, ri, _ in certs)
    pts = [(ax / smin, ay / smin) for ax, ay, _, _ in certs]
    shift = 2.0**-20
    for _ in range(60):
        if all((x - shift) % 1.0 != 0.0 and (y - shift) % 1.0 != 0.0 for x, y in pts):
            break
        shift *= 2
    else:
        raise ValueError("could not shift anchors off the grid lines")
    return [(math.floor(x - shift), math.floor(y - shift)) for x, y in pts]


def pointed_cf_color_fat(objs: Scene, rho: float, k: float) -> Coloring:
    """Pointed CF coloring with at most 2*(4*k*ceil(rho)+1)^2 + 1 colors.

    Phase 1 gives the lowest-index object of every occupied cell the cell's
    color at level 1 and everyone else the spare color (t+1, 1).  Phase 2
    walks the representatives; one that has no level-1 representative neighbor
    recolors its lowest-index spare neighbor to its own color at level 2.
    Colors (i, level) are flattened to 2*(i-1) + (level-1).
    """
    if rho < 1 or k < 1:
        raise ValueError("need rho >= 1 and k >= 1")
    n = len(objs)
    if n == 0:
        return Coloring(())
    certs = _certificates(objs, rho, k)
    side = grid_side(rho, k)
    t = side * side
    cells = _cells(certs)

    cell_color = {cell: (cell[0] % side) * side + (cell[1] % side) + 1 for cell in set(cells)}
    rep_of_cell: dict[tuple[int, int], int] = {}
    for i, cell in enumerate(cells):
        rep_of_cell.setdefault(cell, i)
    pair = [(t + 1, 1)] * n
    for cell, rep in rep_of_cell.items():
        pair[rep] = (cell_color[cell], 1)

    g = intersection_graph(objs)
    for i in sorted(rep_of_cell.values()):
        ci, _ = pair[i]
        nbs = g.adjacency[i]
        if not nbs:
            continue
        if any(pair[u][0] <= t and pair[u][1] == 1 for u in nbs):
            continue
        spare = [u for u in nbs if pair[u] == (t + 1, 1)]
        if spare:
            pair[min(spare)] = (ci, 2)
        # with no spare neighbor left, every neighbor already carries a
        # level-2 color; the final verification still guards this case

    flat = tuple(2 * (i - 1) + (lvl - 1) for i, lvl in pair)
    pmap = {2 * (i - 1) + (lvl - 1): (i, lvl) for i, lvl in pair}
    out = Coloring(flat, pmap)
    if out.palette_size > 2 * t + 1:
        raise VerificationError(f"grid coloring used {out.palette_size} colors, bound is {2 * t + 1}")
    pointed = neighborhood_hypergraph(g, "pointed")
    bad = verify_cf(pointed, out)
    if bad:
        raise VerificationError(f"grid coloring is not pointed-CF on neighborhoods {bad[:5]}")
    return out


@dataclass(frozen=True)
class BucketReport:
    bucket: int
    size_lo: float
    size_hi: float
    color_lo: int
    color_hi: int
    count: int


def closed_cf_color_fat(objs: Scene, rho: float, k: float) -> Coloring:
    coloring, _ = closed_cf_color_fat_report(objs, rho, k)
    return coloring


def closed_cf_color_fat_report(objs: Scene, rho: float, k: float) -> tuple[Coloring, list[BucketReport]]:
    """Closed CF coloring via dyadic size buckets with disjoint fresh palettes.

    Objects are split into size classes [2^b, 2^(b+1)); each class has
    size-ratio below 2, is pointed-CF colored with k' = 2, converted to a
    closed coloring by splitting classes in two, and the buckets concatenate
    with disjoint palettes.
    """
    if rho < 1 or k < 1:
        raise ValueError("need rho >= 1 and k >= 1")
    n = len(objs)
    if n == 0:
        return Coloring(()), []
    certs = _certificates(objs, rho, k)
    smin = min(ri for _, _, ri, _ in certs)
    buckets: dict[int, list[int]] = {}
    for i, (_, _, ri, _) in enumerate(certs):
        s = ri / smin
        b = int(math.floor(math.log2(s))) if s > 1 else 0
        while 2.0**b > s:
            b -= 1
        while 2.0 ** (b + 1) <= s:
            b += 1
        buckets.setdefault(b, []).append(i)

    colors = [0] * n
    pmap: dict[int, tuple[int, int]] = {}
    reports: list[BucketReport] = []
    color_base = 0
    for b in sorted(buckets):
        members = buckets[b]
        sub = objs.subscene(members)
        pointed = pointed_cf_color_fat(sub, rho, 2.0)
        dense = _densify(pointed)
        sub_graph = intersection_graph(sub)
        closed = pointed_to_closed(sub_graph, dense)
        used = set()
        for idx, v in enumerate(members):
            i_local, lvl = closed.palette_map[closed.colors[idx]]
            i_global = color_base + i_local
            flat = 2 * (i_global - 1) + (lvl - 1)
            colors[v] = flat
            pmap[flat] = (i_global, lvl)
            used.add(flat)
        reports.append(
            BucketReport(
                bucket=b,
                size_lo=smin * 2.0**b,
                size_hi=smin * 2.0 ** (b + 1),
                color_lo=min(used),
                color_hi=max(used),
                count=len(members),
            )
        )
        color_base += dense.palette_size

    out = Coloring(tuple(colors), pmap)
    per_bucket = 2 * (2 * grid_side(rho, 2.0) ** 2 + 1)
    bound = (int(math.floor(math.log2(k))) + 1) * per_bucket
    if out.palette_size > bound:
        raise VerificationError(f"bucketed coloring used {out.palette_size} colors, bound is {bound}")
    closed_nh = neighborhood_hypergraph(intersection_graph(objs), "closed")
    bad = verify_cf(closed_nh, out)
    if bad:
        raise VerificationError(f"bucketed coloring is not closed-CF on neighborhoods {bad[:5]}")
    return out, reports


def _densify(c: Coloring) -> Coloring:
    """Remap color ids to 1..p, keeping class structure (order by id)."""
    ids = sorted(set(c.colors))
    remap = {old: i + 1 for i, old in enumerate(ids)}
    return Coloring(tuple(remap[x] for x in c.colors))


def bucket_report_csv(reports: list[BucketReport]) -> str:
    lines = ["bucket,size_lo,size_hi,color_lo,color_hi,count"]
    for r in reports:
        lines.append(f"{r.bucket},{r.size_lo!r},{r.size_hi!r},{r.color_lo},{r.color_hi},{r.count}")
    return "\n".join(lines) + "\n"
