"""Benchmark harness recording palette sizes against their formula bounds.

Every recorded row is re-verified; a verification failure aborts the run and
serializes the failing scene for regression capture.
"""
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import VerificationError
from .fat import closed_cf_color_fat, grid_side, pointed_cf_color_fat
from .framework import cf_palette_bound
from .geom import generate_scene, save_scene
from .hypergraph import intersection_graph, neighborhood_hypergraph, verify_cf
from .intervals import closed_cf_color_intervals
from .probes import DISC_MODE, ProbeSystem, cf_color_vs_probes, pointed_cf_pseudodiscs_report, probe_hypergraph
from .rects import closed_cf_color_rects

__all__ = ["BENCH_ALGS", "bench_colors", "rows_to_csv"]

BENCH_ALGS = ("pseudodisc", "antennas", "intervals", "rects", "fat-pointed", "fat-closed")


@dataclass(frozen=True)
class BenchRow:
    n: int
    rep: int
    palette_size: int
    bound: int
    runtime_ms: float
    verified: bool


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CFGEOM_THREADS", "1")))
    except ValueError:
        return 1


def _run_one(alg: str, n: int, rep: int, seed: int, probes_count: int | None, rho: float, k: float) -> BenchRow:
    inst_seed = [seed, n, rep]
    if alg == "intervals":
        scene = generate_scene("intervals", n, inst_seed)
        t0 = time.perf_counter()
        coloring, _ = closed_cf_color_intervals(scene)
        ms = (time.perf_counter() - t0) * 1000
        bound = 3
        ok = not verify_cf(neighborhood_hypergraph(intersection_graph(scene), "closed"), coloring)
    elif alg == "rects":
        scene = generate_scene("rects", n, inst_seed)
        t0 = time.perf_counter()
        coloring = closed_cf_color_rects(scene)
        ms = (time.perf_counter() - t0) * 1000
        bound = 3 * (math.floor(math.log2(n)) + 1) if n else 0
        ok = not verify_cf(neighborhood_hypergraph(intersection_graph(scene), "closed"), coloring)
    elif alg == "pseudodisc":
        scene = generate_scene("discs", n, inst_seed)
        t0 = time.perf_counter()
        coloring, pipeline = pointed_cf_pseudodiscs_report(scene)
        ms = (time.perf_counter() - t0) * 1000
        bound = pipeline.palette_bound
        ok = not verify_cf(neighborhood_hypergraph(intersection_graph(scene), "pointed"), coloring)
    elif alg == "antennas":
        scene = generate_scene("discs", n, inst_seed)
        m = probes_count if probes_count is not None else 10 * n
        probes = generate_scene("discs", m, [seed, n, rep, 1], radius_range=(0.01, 0.3))
        ps = ProbeSystem(scene, probes, DISC_MODE)
        t0 = time.perf_counter()
        coloring = cf_color_vs_probes(ps)
        ms = (time.perf_counter() - t0) * 1000
        bound = cf_palette_bound(n, 6)
        ok = not verify_cf(probe_hypergraph(ps), coloring)
    elif alg == "fat-pointed":
        scene = generate_scene("fat", n, inst_seed, rho=rho, k=k)
        t0 = time.perf_counter()
        coloring = pointed_cf_color_fat(scene, rho, k)
        ms = (time.perf_counter() - t0) * 1000
        bound = 2 * grid_side(rho, k) ** 2 + 1
        ok = not verify_cf(neighborhood_hypergraph(intersection_graph(scene), "pointed"), coloring)
    elif alg == "fat-closed":
        scene = generate_scene("fat", n, inst_seed, rho=rho, k=k)
        t0 = time.perf_counter()
        coloring = closed_cf_color_fat(scene, rho, k)
        ms = (time.perf_counter() - t0) * 1000
        bound = (math.floor(math.log2(k)) + 1) * 2 * (2 * grid_side(rho, 2.0) ** 2 + 1)
        ok = not verify_cf(neighborhood_hypergraph(intersection_graph(scene), "closed"), coloring)
    else:
        raise ValueError(f"unknown algorithm {alg!r}; pick one of {BENCH_ALGS}")
    if not ok:
        path = f"cfgeom-failing-{alg}-n{n}-rep{rep}.json"
        save_scene(scene, path)
        raise VerificationError(f"bench verification failed; failing scene written to {path}")
    return BenchRow(n, rep, coloring.palette_size, bound, ms, ok)


def bench_colors(
    alg: str,
    n_values: list[int],
    reps: int,
    seed: int,
    *,
    probes_count: int | None = None,
    rho: float = 2.0,
    k: float = 4.0,
) -> list[BenchRow]:
    """One verified row per (n, rep), in canonical order."""
    if not n_values:
        raise ValueError("n_values must not be empty")
    jobs = [(n, rep) for n in n_values for rep in range(reps)]
    workers = _threads()
    if workers == 1:
        rows = [_run_one(alg, n, rep, seed, probes_count, rho, k) for n, rep in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda j: _run_one(alg, j[0], j[1], seed, probes_count, rho, k), jobs))
    return sorted(rows, key=lambda r: (r.n, r.rep))


def rows_to_csv(rows: list[BenchRow]) -> str:
    lines = ["n,rep,palette_size,bound,runtime_ms,verified"]
    for r in rows:
        lines.append(f"{r.n},{r.rep},{r.palette_size},{r.bound},{r.runtime_ms:.3f},{str(r.verified).lower()}")
    return "\n".join(lines) + "\n"
