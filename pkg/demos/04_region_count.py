"""Planar sanity oracle: counting regions with the Euler formula.

A planar arrangement's complement has exactly 1 + g connected components.
The oracle never touches that formula: it clips the lines to a transversal
rational box, counts vertices and edges of the induced subdivision exactly,
and reads the face count off V - E + F = 1.
"""

from linetopo import build_arrangement, clip_subdivision, euler_region_count, genus
from linetopo.generate import generate_random

simple = build_arrangement(2, [((0, 0), (1, 0)), ((0, 1), (1, 0)), ((0, 0), (0, 1))])
sub = clip_subdivision(simple)
print(f"two parallels + one crossing line: V={sub.vertex_count} "
      f"E={sub.edge_count} F={sub.face_count}")
print("regions =", euler_region_count(simple), " 1 + g =", 1 + genus(simple))

print("\nseeded random corpus:")
for seed in range(8):
    a = generate_random(2, 3 + seed, "mixed", seed)
    regions = euler_region_count(a)
    print(f"  seed {seed}: d = {a.d:2d}  regions = {regions:3d}  1+g = {1 + genus(a):3d}")
    assert regions == 1 + genus(a)
print("oracle agrees with the formula on every draw")
