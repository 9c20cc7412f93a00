"""
Polygon models and their covers
===============================

Build the four k-differential polygons, unfold them and look at the cone
points. SVG pictures go to the current directory.
"""

import math

from prymtopo.flat import FAMILIES, emit_svg, unfold

for name, make in FAMILIES.items():
    p = make()
    s = unfold(p)
    cones = [s.cone_angles[c] / math.pi for c in s.cone_points()]
    print(f"{name:9s} k={p.k:2d}  base genus {p.genus()}  cover genus {s.genus}  cone angle/pi {cones}")
    emit_svg(p, f"{name}.svg")
    emit_svg(s, f"{name}_cover.svg")

# an intermediate cover: two copies of the C12 kite carry the order-6 data
s = unfold(FAMILIES["c12"](), 2)
print("c12 double cover:", s.genus, sorted(round(a * 3 / math.pi) for a in s.cone_angles))

# rotating the full cover permutes its faces and fixes the zero
s = unfold(FAMILIES["turtle"]((0.5, 1.0)))
faces, classes = s.rotation_action()
print(faces, classes[s.cone_points()[0]] == s.cone_points()[0])
