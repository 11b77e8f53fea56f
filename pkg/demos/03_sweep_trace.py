"""Sweeping a space graph by a generic height function.

Cutting the lines at their multiple points gives a graph with non-compact
edges.  For a direction that is level on no edge and separates all vertex
heights, crossing a vertex with s upward branches attaches s - 1 trivial
handles of index n-2 to the sublevel complement.  Accumulated over all
events, starting from one handle per downward-unbounded edge end, the total
reproduces g = d + sum (i-1) t_i along a completely independent code path.

Compact graphs can have local height maxima (s = 0), where the attached
handle need not be trivial; the trace then refuses any conclusion.
"""

from linetopo import (
    build_arrangement,
    build_space_graph,
    check_direction,
    find_generic_direction,
    genus,
    graph_from_segments,
    handle_trace,
    sweep_events,
)

a = build_arrangement(
    3,
    [
        ((0, 0, 0), (1, 0, 0)),
        ((0, 0, 0), (0, 1, 0)),
        ((10, 0, 0), (1, -1, 0)),
    ],
)
graph = build_space_graph(a)
print(f"space graph: {len(graph.vertices)} vertices, {len(graph.edges)} edges")

# The deterministic search walks the moment curve (1, k, k^2) until both
# genericity conditions hold.
bad = (0, 0, 1)
print("direction (0,0,1):", check_direction(graph, bad))
v = find_generic_direction(graph)
print("accepted direction:", v)

plan = sweep_events(graph, v)
print(f"initial downward rays: {plan.initial_rays_down}")
for ev in plan.events:
    print(f"  event at h = {ev.level}: vertex {ev.vertex}, s = {ev.s}, r = {ev.r}")

trace = handle_trace(plan, a.dimension)
print(f"handle ledger: start {trace.initial_g}, "
      f"+{trace.final_g - trace.initial_g} trivial, final g = {trace.final_g}")
assert trace.final_g == genus(a)
print("matches the invariant formula: g =", genus(a))

# A compact square graph: its top vertex is a local maximum (s = 0), so one
# attachment is a possibly-knotted index-(n-1) handle and no conclusion about
# the complement's type is drawn.
square = graph_from_segments(
    3,
    [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)],
    [(0, 1), (1, 2), (2, 3), (3, 0)],
)
plan2 = sweep_events(square, find_generic_direction(square))
trace2 = handle_trace(plan2, 3)
print("\ncompact square graph:",
      [f"s={ev.s},r={ev.r}" for ev in plan2.events])
print("all attachments trivial?", trace2.all_trivial)
