"""Height-function sweep over a space graph and the induced handle trace.

A space graph is a closed union of segments, half-lines, and full lines in
R^n, viewed as a graph with possibly non-compact edges.  For a direction v
that is level on no edge (condition i) and separates all vertex heights
(condition ii), the topology of the part of the complement below level c
changes only when c crosses a vertex u: if s(u) >= 1 edges leave u upward,
passing the level attaches s(u) - 1 trivial handles of index n-2; if
s(u) = 0 (a local maximum of the height on the graph) it attaches one handle
of index n-1 that need not be trivial.

Starting from a low level, where the complement is a half-space minus one
half-line per downward-unbounded edge end, the accumulated count of trivial
index-(n-2) handles for a line arrangement is d + sum (i-1) t_i: the same g
as the invariant formula, reached along a completely different code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, multiple_points
from .errors import DimensionMismatch, NonGenericDirection, ZeroDirection
from .geometry import Line, Point, as_point, canonicalize_line, dot, point_on_line, sub


@dataclass(frozen=True)
class GraphEdge:
    """A straight edge of a space graph.

    ``vertices`` holds 2 indices for a bounded segment, 1 for a half-line,
    and 0 for a full line.  ``ray_dir`` is the outgoing primitive direction
    of a half-line and None otherwise.  Edge interiors contain no vertex.
    """

    carrier: Line
    vertices: tuple[int, ...]
    ray_dir: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SpaceGraph:
    dimension: int
    vertices: tuple[Point, ...]
    edges: tuple[GraphEdge, ...]


@dataclass(frozen=True)
class Violation:
    """Why a direction fails genericity: the offending edge or vertex pair."""

    kind: str  # "perpendicular_edge" or "level_vertex_pair"
    edge: int | None = None
    vertex_pair: tuple[int, int] | None = None

    def __str__(self) -> str:
        if self.kind == "perpendicular_edge":
            return f"direction is perpendicular to edge {self.edge} (condition i)"
        return (
            f"vertices {self.vertex_pair[0]} and {self.vertex_pair[1]} lie on one "
            f"level hyperplane (condition ii)"
        )


@dataclass(frozen=True)
class SweepEvent:
    vertex: int
    level: Fraction  # height of the vertex along the sweep direction
    s: int  # edges adjacent from above
    r: int  # edges adjacent from below


@dataclass(frozen=True)
class SweepPlan:
    direction: tuple[Fraction, ...]
    events: tuple[SweepEvent, ...]  # strictly increasing in level
    initial_rays_down: int  # unbounded edge ends pointing downward


@dataclass(frozen=True)
class HandleStep:
    event: int  # index into SweepPlan.events
    handles_added: int
    handle_index: int
    trivial: bool


@dataclass(frozen=True)
class HandleTrace:
    """Accumulated handle ledger of a sweep.

    ``final_g`` counts the initial downward half-lines plus all trivial
    index-(n-2) additions; it names the ball-with-handles descriptor only
    when ``all_trivial`` is True.
    """

    steps: tuple[HandleStep, ...]
    initial_g: int
    final_g: int
    all_trivial: bool


def build_space_graph(a: Arrangement) -> SpaceGraph:
    """Cut the arrangement's lines at their multiple points.

    Each line becomes bounded segments between consecutive incident multiple
    points plus two half-lines, or stays a single full-line edge when no
    multiple point lies on it.
    """
    mps = multiple_points(a)
    vertices = tuple(mp.location for mp in mps)
    edges: list[GraphEdge] = []
    for li, line in enumerate(a.lines):
        cuts = [
            (line.param_of(mp.location), vi)
            for vi, mp in enumerate(mps)
            if li in mp.incident
        ]
        cuts.sort()
        if not cuts:
            edges.append(GraphEdge(carrier=line, vertices=()))
            continue
        down = tuple(-c for c in line.direction)
        edges.append(GraphEdge(carrier=line, vertices=(cuts[0][1],), ray_dir=down))
        for (_, vi), (_, vj) in zip(cuts, cuts[1:]):
            edges.append(GraphEdge(carrier=line, vertices=(vi, vj)))
        edges.append(
            GraphEdge(carrier=line, vertices=(cuts[-1][1],), ray_dir=line.direction)
        )
    return SpaceGraph(dimension=a.dimension, vertices=vertices, edges=tuple(edges))


def graph_from_segments(n: int, points, segments) -> SpaceGraph:
    """Build a compact space graph from vertex coordinates and index pairs.

    Validates that no vertex lies in the interior of a segment.
    """
    vertices = tuple(as_point(p) for p in points)
    for p in vertices:
        if len(p) != n:
            raise DimensionMismatch(f"vertex {p} does not have dimension {n}")
    edges = []
    for (i, j) in segments:
        if i == j:
            raise ZeroDirection("segment endpoints coincide")
        carrier = canonicalize_line(vertices[i], sub(vertices[j], vertices[i]))
        ti, tj = carrier.param_of(vertices[i]), carrier.param_of(vertices[j])
        lo, hi = min(ti, tj), max(ti, tj)
        for k, w in enumerate(vertices):
            if k in (i, j) or not point_on_line(w, carrier):
                continue
            if lo < carrier.param_of(w) < hi:
                raise ValueError(f"vertex {k} lies in the interior of segment ({i},{j})")
        edges.append(GraphEdge(carrier=carrier, vertices=(i, j)))
    return SpaceGraph(dimension=n, vertices=vertices, edges=tuple(edges))


def check_direction(x: SpaceGraph, v) -> Violation | None:
    """None if v satisfies conditions (i) and (ii), else the first Violation.

    (i): v is perpendicular to no edge, so the height is level on no edge.
    (ii): no two vertices share a height, so levels meet one vertex at most.
    """
    v = as_point(v)
    if len(v) != x.dimension:
        raise DimensionMismatch(
            f"direction has dimension {len(v)}, graph has {x.dimension}"
        )
    if all(c == 0 for c in v):
        raise ZeroDirection("sweep direction is zero")
    for ei, edge in enumerate(x.edges):
        if dot(edge.carrier.direction, v) == 0:
            return Violation(kind="perpendicular_edge", edge=ei)
    for i in range(len(x.vertices)):
        for j in range(i + 1, len(x.vertices)):
            if dot(sub(x.vertices[i], x.vertices[j]), v) == 0:
                return Violation(kind="level_vertex_pair", vertex_pair=(i, j))
    return None


def find_generic_direction(x: SpaceGraph) -> tuple[int, ...]:
    """First moment-curve candidate (1, k, k^2, ...) passing check_direction.

    Each genericity constraint excludes the roots of a nonzero polynomial in
    k, so only finitely many candidates fail and the search terminates.  The
    deterministic choice makes reports reproducible.
    """
    n = x.dimension
    k = 1
    while True:
        v = tuple(k**i for i in range(n))
        if check_direction(x, v) is None:
            return v
        k += 1


def _outgoing_directions(x: SpaceGraph, vertex: int):
    """Outgoing direction vectors of all edge ends meeting the vertex."""
    out = []
    for edge in x.edges:
        if len(edge.vertices) == 2:
            i, j = edge.vertices
            if i == vertex:
                out.append(sub(x.vertices[j], x.vertices[i]))
            if j == vertex:
                out.append(sub(x.vertices[i], x.vertices[j]))
        elif len(edge.vertices) == 1 and edge.vertices[0] == vertex:
            out.append(edge.ray_dir)
    return out


def sweep_events(x: SpaceGraph, v) -> SweepPlan:
    """Ordered vertex events with upward/downward branch counts.

    Requires check_direction(x, v) to pass; raises NonGenericDirection
    otherwise.  Condition (ii) makes the event levels strictly increasing, so
    no tie-breaking exists.  initial_rays_down counts the unbounded edge ends
    oriented downward: one per downward half-line and one per full line.
    """
    violation = check_direction(x, v)
    if violation is not None:
        raise NonGenericDirection(violation)
    v = as_point(v)
    events = []
    for vi, u in enumerate(x.vertices):
        s = r = 0
        for w in _outgoing_directions(x, vi):
            if dot(w, v) > 0:
                s += 1
            else:
                r += 1  # dot is nonzero by condition (i)
        events.append(SweepEvent(vertex=vi, level=dot(u, v), s=s, r=r))
    events.sort(key=lambda e: e.level)
    rays_down = 0
    for edge in x.edges:
        if len(edge.vertices) == 0:
            rays_down += 1  # a full line has exactly one downward end
        elif len(edge.vertices) == 1 and dot(edge.ray_dir, v) < 0:
            rays_down += 1
    return SweepPlan(direction=v, events=tuple(events), initial_rays_down=rays_down)


def handle_trace(plan: SweepPlan, n: int) -> HandleTrace:
    """Accumulate the handle ledger of a sweep in ambient dimension n.

    Starts from initial_rays_down handles (the half-space below all events
    minus one half-line per downward end).  An event with s >= 1 upward
    branches adds s - 1 trivial handles of index n-2; an event with s = 0
    adds one handle of index n-1 that need not be trivial, which clears
    ``all_trivial`` and voids any ball-with-handles conclusion.  Only the
    trivial index-(n-2) additions accumulate into final_g.
    """
    steps = []
    g = plan.initial_rays_down
    all_trivial = True
    for idx, ev in enumerate(plan.events):
        if ev.s >= 1:
            steps.append(
                HandleStep(event=idx, handles_added=ev.s - 1, handle_index=n - 2, trivial=True)
            )
            g += ev.s - 1
        else:
            steps.append(
                HandleStep(event=idx, handles_added=1, handle_index=n - 1, trivial=False)
            )
            all_trivial = False
    return HandleTrace(
        steps=tuple(steps),
        initial_g=plan.initial_rays_down,
        final_g=g,
        all_trivial=all_trivial,
    )
