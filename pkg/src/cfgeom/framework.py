"""Generic machinery turning hereditary proper colorability into CF colorings.

The core iteration repeatedly proper-colors the surviving sub-hypergraph,
freezes the largest color class with a fresh final color, and removes it.
In any hyperedge the maximum final color is then achieved by exactly one
vertex, which is the conflict-free witness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ColorerContractError, ListExhaustedError, VerificationError
from .hypergraph import Coloring, Graph, Hypergraph, induced, neighborhood_hypergraph, verify_cf, verify_proper

__all__ = [
    "ProperColorer",
    "proper_to_cf",
    "proper_to_cf_list",
    "pointed_to_closed",
    "cf_palette_bound",
]


@dataclass(frozen=True)
class ProperColorer:
    """Callable producing a proper coloring with at most `k` colors for a
    hypergraph and every induced sub-hypergraph it is handed."""

    fn: Callable[[Hypergraph], Coloring]
    k: int
    name: str = ""

    def __call__(self, h: Hypergraph) -> Coloring:
        return self.fn(h)


def cf_palette_bound(n: int, k: int) -> int:
    """Ceiling of 1 + log_{1+1/(k-1)} n, the palette guarantee of the iteration."""
    if n <= 1:
        return min(n, 1) if n >= 0 else 0
    return math.ceil(1 + math.log(n) / math.log(1 + 1 / (k - 1)))


def _checked_proper(h: Hypergraph, pc: ProperColorer) -> Coloring:
    col = pc(h)
    if len(col.colors) != h.n:
        raise ColorerContractError("colorer returned a partial coloring", h)
    if col.palette_size > pc.k:
        raise ColorerContractError(
            f"colorer used {col.palette_size} colors, declared at most {pc.k}", h
        )
    bad = verify_proper(h, col)
    if bad:
        raise ColorerContractError(f"colorer output is improper on edges {bad[:5]}", h)
    return col


def _largest_class(colors: Sequence[int], labels: Sequence[int]) -> list[int]:
    """Largest color class; ties broken by the class whose lowest original
    vertex label is smallest.  Returns positions within the sub-hypergraph."""
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    return max(classes.values(), key=lambda cls: (len(cls), -min(labels[i] for i in cls)))


def proper_to_cf(h: Hypergraph, pc: ProperColorer) -> Coloring:
    """CF coloring via iterated proper coloring with final colors 1, 2, ...

    Every round the surviving vertices are proper-colored by `pc`, a largest
    class is assigned the round number as its final color, and removed.  The
    output is re-verified before it is returned.
    """
    final = [0] * h.n
    alive = list(range(h.n))
    rnd = 0
    while alive:
        rnd += 1
        sub = induced(h, alive)
        col = _checked_proper(sub, pc)
        cls = _largest_class(col.colors, sub.vertex_labels)
        for i in cls:
            final[alive[i]] = rnd
        taken = {alive[i] for i in cls}
        alive = [v for v in alive if v not in taken]
    out = Coloring(tuple(final))
    bad = verify_cf(h, out)
    if bad:
        raise VerificationError(f"iteration produced a non-CF coloring on edges {bad[:5]}")
    return out


def proper_to_cf_list(h: Hypergraph, lists: Sequence[Sequence[int]], pc: ProperColorer) -> Coloring:
    """CF coloring in which every vertex receives a color from its own list.

    Greedy most-popular-color iteration: the color present in the most
    uncolored lists is proper-colored on the vertices holding it, a largest
    class keeps that color for good, and the color is struck from all
    remaining lists.  Needs list sizes of at least cf_palette_bound(n, pc.k).
    """
    if len(lists) != h.n:
        raise ValueError("one color list per vertex required")
    need = cf_palette_bound(h.n, pc.k)
    for v, lst in enumerate(lists):
        if len(set(lst)) < need:
            raise ValueError(f"list of vertex {v} has {len(set(lst))} colors, needs >= {need}")
    remaining = [set(lst) for lst in lists]
    final: list[int | None] = [None] * h.n
    while True:
        alive = [v for v in range(h.n) if final[v] is None]
        if not alive:
            break
        for v in alive:
            if not remaining[v]:
                raise ListExhaustedError(v)
        popularity: dict[int, int] = {}
        for v in alive:
            for c in remaining[v]:
                popularity[c] = popularity.get(c, 0) + 1
        c = max(popularity, key=lambda col: (popularity[col], -col))
        holders = [v for v in alive if c in remaining[v]]
        sub = induced(h, holders)
        col = _checked_proper(sub, pc)
        cls = _largest_class(col.colors, sub.vertex_labels)
        for i in cls:
            final[holders[i]] = c
        for v in alive:
            remaining[v].discard(c)
    out = Coloring(tuple(final))
    for v in range(h.n):
        if out.colors[v] not in set(lists[v]):
            raise VerificationError(f"vertex {v} was colored outside its list")
    bad = verify_cf(h, out)
    if bad:
        raise VerificationError(f"list iteration produced a non-CF coloring on edges {bad[:5]}")
    return out


def pointed_to_closed(g: Graph, c: Coloring) -> Coloring:
    """Closed-CF coloring obtained by splitting each color class in two.

    Within each class's induced subgraph, the two endpoints of a single-edge
    component get levels 1 and 2; in larger components the leaves get level 2
    and everyone else level 1.  The input must be pointed-CF for `g`; the
    output is verified closed-CF.  Structured colors (i, level) are flattened
    to 2*(i-1) + (level-1), recorded in the palette map.
    """
    if len(c.colors) != g.n:
        raise ValueError("coloring is not total")
    if any(col < 1 for col in c.colors):
        raise ValueError("pointed_to_closed expects positive color ids")
    pointed = neighborhood_hypergraph(g, "pointed")
    bad = verify_cf(pointed, c)
    if bad:
        raise VerificationError(f"input is not pointed-CF (violations on edges {bad[:5]})")

    level = [1] * g.n
    classes: dict[int, list[int]] = {}
    for v, col in enumerate(c.colors):
        classes.setdefault(col, []).append(v)
    for members in classes.values():
        inside = set(members)
        deg = {v: sum(1 for u in g.adjacency[v] if u in inside) for v in members}
        seen: set[int] = set()
        for v in members:
            if v in seen:
                continue
            comp = [v]
            seen.add(v)
            stack = [v]
            while stack:
                u = stack.pop()
                for w in g.adjacency[u]:
                    if w in inside and w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            if len(comp) == 2 and deg[comp[0]] == 1:
                level[max(comp)] = 2
            else:
                for u in comp:
                    if deg[u] == 1:
                        level[u] = 2

    flat = tuple(2 * (col - 1) + (lvl - 1) for col, lvl in zip(c.colors, level))
    pmap = {2 * (col - 1) + (lvl - 1): (col, lvl) for col, lvl in zip(c.colors, level)}
    out = Coloring(flat, pmap)
    if out.palette_size > 2 * c.palette_size:
        raise VerificationError("conversion exceeded twice the input palette")
    closed = neighborhood_hypergraph(g, "closed")
    bad = verify_cf(closed, out)
    if bad:
        raise VerificationError(f"conversion is not closed-CF (violations on edges {bad[:5]})")
    return out
