"""Hypergraphs, intersection graphs, verifiers, and the exact small-instance oracle.

Colorings are never trusted: the verifiers here are the ground truth used by
every coloring routine in the package before it returns.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import IncompatibleShapesError
from .geom import ConvexFatObject, Disc, Scene, intersects, shape_bbox

__all__ = [
    "Graph",
    "Hypergraph",
    "Coloring",
    "intersection_graph",
    "neighborhood_hypergraph",
    "induced",
    "verify_proper",
    "verify_cf",
    "min_cf_colors_bruteforce",
    "greedy_maximal_independent_set",
    "all_intervals_hypergraph",
    "coloring_to_json",
    "coloring_from_json",
]

ORACLE_MAX_VERTICES = 16


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)


def _normalize_edge(e: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(e)))


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """Vertex count plus a list of hyperedges (vertex-index sets).

    Duplicate edges are kept; `edge_labels` records where each edge came from
    (which probe, which vertex neighborhood).  `vertex_labels` carries original
    vertex identities through `induced`.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    edge_labels: tuple[str, ...] | None = None
    vertex_labels: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(_normalize_edge(e) for e in self.edges))
        for e in self.edges:
            if e and (e[0] < 0 or e[-1] >= self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
        if self.edge_labels is not None and len(self.edge_labels) != len(self.edges):
            raise ValueError("edge_labels length mismatch")
        if self.vertex_labels is not None and len(self.vertex_labels) != self.n:
            raise ValueError("vertex_labels length mismatch")

    @cached_property
    def _flat(self) -> tuple[np.ndarray, np.ndarray]:
        members = []
        edge_ids = []
        for i, e in enumerate(self.edges):
            members.extend(e)
            edge_ids.extend([i] * len(e))
        return np.asarray(members, dtype=np.int64), np.asarray(edge_ids, dtype=np.int64)


@dataclass(frozen=True)
class Coloring:
    """Total map vertex index -> integer color id.

    `palette_map` is present when colors are structured pairs (i, level)
    flattened to integers; it maps each flat id back to its pair.
    """

    colors: tuple[int, ...]
    palette_map: dict[int, tuple[int, int]] | None = None

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)


def _colors_of(c) -> Sequence[int]:
    return c.colors if isinstance(c, Coloring) else c


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def intersection_graph(scene: Scene) -> Graph:
    """Graph with an edge for every intersecting pair of scene shapes."""
    n = len(scene)
    shapes = scene.shapes
    if n == 0:
        return Graph(0, frozenset())
    if scene.kind == "discs":
        c = np.array([(s.center.x, s.center.y, s.radius) for s in shapes])
        d = np.hypot(c[:, None, 0] - c[None, :, 0], c[:, None, 1] - c[None, :, 1])
        hit = d <= c[:, None, 2] + c[None, :, 2]
        iu = np.triu_indices(n, k=1)
        mask = hit[iu]
        return Graph(n, frozenset(zip(iu[0][mask].tolist(), iu[1][mask].tolist())))
    if scene.kind == "intervals":
        lo = np.array([s.lo for s in shapes])
        hi = np.array([s.hi for s in shapes])
        hit = (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])
        iu = np.triu_indices(n, k=1)
        mask = hit[iu]
        return Graph(n, frozenset(zip(iu[0][mask].tolist(), iu[1][mask].tolist())))
    if scene.kind == "rects":
        b = np.array([(s.xmin, s.xmax, s.ymin, s.ymax) for s in shapes])
        hit = (
            (b[:, None, 0] <= b[None, :, 1])
            & (b[None, :, 0] <= b[:, None, 1])
            & (b[:, None, 2] <= b[None, :, 3])
            & (b[None, :, 2] <= b[:, None, 3])
        )
        iu = np.triu_indices(n, k=1)
        mask = hit[iu]
        return Graph(n, frozenset(zip(iu[0][mask].tolist(), iu[1][mask].tolist())))
    if scene.kind == "fat" or (
        scene.kind == "mixed" and all(isinstance(s, (Disc, ConvexFatObject)) for s in shapes)
    ):
        boxes = np.array([shape_bbox(s) for s in shapes])
        iu, ju = np.triu_indices(n, k=1)
        mask = (
            (boxes[iu, 0] <= boxes[ju, 1])
            & (boxes[ju, 0] <= boxes[iu, 1])
            & (boxes[iu, 2] <= boxes[ju, 3])
            & (boxes[ju, 2] <= boxes[iu, 3])
        )
        edges = {
            (int(i), int(j))
            for i, j in zip(iu[mask], ju[mask])
            if intersects(shapes[i], shapes[j])
        }
        return Graph(n, frozenset(edges))
    raise IncompatibleShapesError(f"no intersection graph for scene kind {scene.kind!r}")


def neighborhood_hypergraph(g: Graph, mode: str = "pointed") -> Hypergraph:
    """One hyperedge per vertex: N(v) for pointed mode (empty neighborhoods
    omitted) or N[v] for closed mode."""
    if mode not in ("pointed", "closed"):
        raise ValueError("mode must be 'pointed' or 'closed'")
    edges = []
    labels = []
    for v in range(g.n):
        nb = g.adjacency[v]
        if mode == "pointed":
            if nb:
                edges.append(nb)
                labels.append(f"N({v})")
        else:
            edges.append(tuple(sorted((*nb, v))))
            labels.append(f"N[{v}]")
    return Hypergraph(g.n, tuple(edges), tuple(labels))


def induced(h: Hypergraph, keep: Sequence[int]) -> Hypergraph:
    """Sub-hypergraph on `keep`, vertices reindexed, each edge intersected with keep."""
    keep = list(keep)
    if sorted(set(keep)) != sorted(keep):
        raise ValueError("keep must not contain duplicates")
    pos = {v: i for i, v in enumerate(keep)}
    edges = tuple(tuple(sorted(pos[v] for v in e if v in pos)) for e in h.edges)
    if h.vertex_labels is not None:
        labels = tuple(h.vertex_labels[v] for v in keep)
    else:
        labels = tuple(keep)
    return Hypergraph(len(keep), edges, h.edge_labels, labels)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def verify_proper(h: Hypergraph, coloring) -> list[int]:
    """Indices of hyperedges of size >= 2 that are monochromatic (empty list = proper)."""
    colors = np.asarray(_colors_of(coloring), dtype=np.int64)
    if len(colors) != h.n:
        raise ValueError("coloring is not total")
    members, edge_ids = h._flat
    if len(members) == 0:
        return []
    mc = colors[members]
    _, dense = np.unique(mc, return_inverse=True)
    p = int(dense.max()) + 1
    key = edge_ids * p + dense
    uk = np.unique(key)
    ne = len(h.edges)
    distinct = np.bincount(uk // p, minlength=ne)
    sizes = np.bincount(edge_ids, minlength=ne)
    bad = np.nonzero((sizes >= 2) & (distinct == 1))[0]
    return bad.tolist()


def verify_cf(h: Hypergraph, coloring) -> list[int]:
    """Indices of nonempty hyperedges with no uniquely colored vertex (empty list = CF)."""
    colors = np.asarray(_colors_of(coloring), dtype=np.int64)
    if len(colors) != h.n:
        raise ValueError("coloring is not total")
    members, edge_ids = h._flat
    if len(members) == 0:
        return []
    mc = colors[members]
    _, dense = np.unique(mc, return_inverse=True)
    p = int(dense.max()) + 1
    key = edge_ids * p + dense
    uk, counts = np.unique(key, return_counts=True)
    ne = len(h.edges)
    has_unique = np.zeros(ne, dtype=bool)
    has_unique[(uk // p)[counts == 1]] = True
    nonempty = np.zeros(ne, dtype=bool)
    nonempty[np.unique(edge_ids)] = True
    return np.nonzero(nonempty & ~has_unique)[0].tolist()


# ---------------------------------------------------------------------------
# exact oracle
# ---------------------------------------------------------------------------


def min_cf_colors_bruteforce(h: Hypergraph, max_colors: int) -> tuple[int, Coloring] | None:
    """Smallest palette admitting a CF coloring, with one witness; None when it
    exceeds max_colors.

    Exhaustive search over colorings with colors introduced in first-use order
    (cutting the t^n space by t!), pruning as soon as a fully colored hyperedge
    lacks a unique color.  Enforces n <= 16.
    """
    if h.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_VERTICES}, got {h.n}")
    if h.n == 0:
        return (0, Coloring(()))
    complete_at: list[list[tuple[int, ...]]] = [[] for _ in range(h.n)]
    for e in h.edges:
        if e:
            complete_at[e[-1]].append(e)

    colors = [0] * h.n

    def edge_ok(e: tuple[int, ...]) -> bool:
        seen: dict[int, int] = {}
        for v in e:
            c = colors[v]
            seen[c] = seen.get(c, 0) + 1
        return any(cnt == 1 for cnt in seen.values())

    def backtrack(v: int, used: int, t: int) -> bool:
        if v == h.n:
            return True
        for c in range(1, min(used + 1, t) + 1):
            colors[v] = c
            if all(edge_ok(e) for e in complete_at[v]):
                if backtrack(v + 1, max(used, c), t):
                    return True
        colors[v] = 0
        return False

    for t in range(1, max_colors + 1):
        if backtrack(0, 0, t):
            witness = Coloring(tuple(colors))
            assert not verify_cf(h, witness)
            return (t, witness)
    return None


# ---------------------------------------------------------------------------
# independent sets and stock hypergraphs
# ---------------------------------------------------------------------------


def greedy_maximal_independent_set(g: Graph, order: Sequence[int] | None = None) -> list[int]:
    """Maximal (not maximum) independent set, scanning vertices in `order`."""
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    chosen: set[int] = set()
    for v in order:
        if all(u not in chosen for u in g.adjacency[v]):
            chosen.add(v)
    return sorted(chosen)


def all_intervals_hypergraph(n: int) -> Hypergraph:
    """Hypergraph on n collinear points whose edges are all contiguous index runs."""
    edges = []
    labels = []
    for i in range(n):
        for j in range(i, n):
            edges.append(tuple(range(i, j + 1)))
            labels.append(f"run:{i}-{j}")
    return Hypergraph(n, tuple(edges), tuple(labels))


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def coloring_to_json(c: Coloring) -> str:
    doc: dict = {"colors": list(c.colors), "palette_size": c.palette_size}
    if c.palette_map is not None:
        doc["palette_map"] = {str(k): list(v) for k, v in sorted(c.palette_map.items())}
    return json.dumps(doc)


def coloring_from_json(text: str) -> Coloring:
    data = json.loads(text)
    pm = None
    if "palette_map" in data:
        pm = {int(k): (v[0], v[1]) for k, v in data["palette_map"].items()}
    c = Coloring(tuple(data["colors"]), pm)
    if "palette_size" in data and data["palette_size"] != c.palette_size:
        raise ValueError("palette_size field disagrees with the colors array")
    return c


def save_coloring(c: Coloring, path) -> None:
    with open(path, "w") as f:
        f.write(coloring_to_json(c))


def load_coloring(path) -> Coloring:
    with open(path) as f:
        return coloring_from_json(f.read())
