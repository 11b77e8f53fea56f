"""Invariants of a line arrangement and the topology they force.

The complement of d distinct affine lines in R^n is classified by d and the
multiplicity counts t_i alone: it is the interior of an n-ball with
g = d + sum (i-1) t_i trivially attached handles of index n-2.
"""

from fractions import Fraction

from linetopo import build_arrangement, multiple_points, predict_topology
from linetopo.arrangement import transform

# Three coplanar lines inside R^3 forming a triangle in the plane z = 0.
triangle = build_arrangement(
    3,
    [
        ((0, 0, 0), (1, 0, 0)),     # x-axis
        ((0, 0, 0), (0, 1, 0)),     # y-axis
        ((10, 0, 0), (1, -1, 0)),   # x + y = 10
    ],
)

print("multiple points:")
for mp in multiple_points(triangle):
    print(f"  {mp.location}  on lines {mp.incident}  (multiplicity {mp.multiplicity})")

report = predict_topology(triangle)
print(f"\nd = {report.d}, t = {report.t}, g = {report.g}")
print(f"Betti vector (b_0..b_n): {report.betti}")
print(f"homotopy type: {report.homotopy}")
print(f"boundary surface genus: {report.boundary_genus}")

# The invariants depend only on the incidence combinatorics: any invertible
# rational affine map leaves the whole report unchanged.
skewed = transform(
    triangle,
    matrix=[[1, 2, 0], [0, 1, 0], [Fraction(1, 3), 0, 2]],
    shift=[5, Fraction(-7, 2), 1],
)
assert predict_topology(skewed) == report
print("\nafter a rational affine isomorphism: identical report", report.betti)

# A pencil: all lines through one point. Five concurrent lines give t_5 = 1
# and g = 5 + 4 = 9.
pencil = build_arrangement(
    2,
    [((0, 0), (1, k)) for k in range(4)] + [((0, 0), (0, 1))],
)
print("\npencil of five lines:", predict_topology(pencil).t,
      "g =", predict_topology(pencil).g)
