"""Coloring discs against arbitrary probe discs.
====================================================================

A fixed family of n "antenna" discs is colored so that every probe disc,
wherever placed and whatever its radius, sees a uniquely colored antenna
among those it reaches.  The palette depends only on n: densifying the
probe set makes the coloring work harder but the palette plateaus under
the ceil(1 + log_{6/5} n) guarantee.
"""
import cfgeom as cf

antennas = cf.generate_scene("discs", 100, seed=1)
master = cf.generate_scene("discs", 20_000, seed=2, radius_range=(0.01, 0.3), margin=0)

print("probes  palette  bound")
for m in (100, 1_000, 20_000):
    probes = cf.Scene(master.shapes[:m], "discs")
    ps = cf.ProbeSystem(antennas, probes, "disc")
    coloring = cf.cf_color_vs_probes(ps)
    print(f"{m:6d}  {coloring.palette_size:7d}  {cf.cf_palette_bound(100, 6):5d}")

# list variant: every antenna must pick its frequency from its own menu
import numpy as np

rng = np.random.default_rng(3)
probes = cf.Scene(master.shapes[:500], "discs")
ps = cf.ProbeSystem(antennas, probes, "disc")
h = cf.probe_hypergraph(ps)
need = cf.cf_palette_bound(100, 6)
lists = [sorted(rng.choice(2 * need, size=need, replace=False) + 1) for _ in range(100)]
coloring = cf.proper_to_cf_list(h, lists, cf.peel_proper_colorer(antennas, probes))
print(f"list coloring: every color drawn from its own list of {need}; palette {coloring.palette_size}")
