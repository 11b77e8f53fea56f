"""The intersection poset and recovery of the invariants from order data.

Multiple points sit below their incident lines, everything sits below the
top element T.  The counts t_i and d are recoverable from the bare order
relation, so the complement's topology is a function of the poset.
"""

from linetopo import (
    build_arrangement,
    build_poset,
    hasse_dot,
    hasse_edges,
    multiplicity_vector,
    recover_line_count,
    recover_multiplicities,
)

a = build_arrangement(
    2,
    [
        ((0, 0), (1, 0)),
        ((0, 0), (0, 1)),
        ((5, 0), (1, -1)),   # completes a triangle with the axes
        ((0, 9), (1, 0)),    # horizontal line crossing two others
    ],
)

poset = build_poset(a)
print("elements:", poset.elements)
print("covering pairs:")
for x, y in hasse_edges(poset):
    print(f"  {x} < {y}")

print("\nrecovered from the order alone:")
print("  d  =", recover_line_count(poset))
print("  t  =", recover_multiplicities(poset))
assert recover_multiplicities(poset) == multiplicity_vector(a)
assert recover_line_count(poset) == a.d

print("\nDOT rendering (feed to graphviz):\n")
print(hasse_dot(poset))
