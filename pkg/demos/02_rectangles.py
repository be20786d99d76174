"""Closed conflict-free coloring of axis-parallel rectangles.
====================================================================

Rectangles split recursively along median vertical lines.  Each line's
stabbed family behaves exactly like a family of intervals (their
y-ranges), so three colors per recursion depth suffice, for a palette of
3 * (floor(log2 n) + 1) overall.
"""
import math

import cfgeom as cf

for n in (16, 64, 256):
    scene = cf.generate_scene("rects", n, seed=n)
    coloring = cf.closed_cf_color_rects(scene)
    bound = 3 * (math.floor(math.log2(n)) + 1)
    print(f"n={n:4d}: palette {coloring.palette_size:2d} <= {bound}")

scene = cf.generate_scene("rects", 48, seed=7)
coloring = cf.closed_cf_color_rects(scene)
cf.render_svg(scene, coloring, "rectangles.svg")
print("wrote rectangles.svg")
