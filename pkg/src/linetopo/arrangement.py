"""Arrangements of affine lines: multiple points, multiplicity counts, and the
predicted topology of the complement.

The complement of d distinct affine lines in R^n is determined up to
diffeomorphism by d together with the multiplicity counts t_i (number of
points where exactly i lines meet): it is the interior of an n-ball with

    g = d + sum_i (i - 1) * t_i

trivially attached handles of index n-2, hence homotopy equivalent to a
bouquet of g spheres of dimension n-2.  For n = 2 the complement has exactly
1 + g contractible components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, DuplicateLine
from .geometry import COINCIDENT, Line, Point, canonicalize_line, intersect_lines


@dataclass(frozen=True)
class Arrangement:
    """A validated set of d >= 0 pairwise distinct canonical lines in R^n."""

    dimension: int
    lines: tuple[Line, ...]

    @property
    def d(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class MultiplePoint:
    """A point where >= 2 lines of the arrangement meet."""

    location: Point
    incident: tuple[int, ...]  # sorted line indices

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class InvariantReport:
    """Combinatorial invariants and the topology they force on the complement."""

    dimension: int
    d: int
    t: dict[int, int]
    g: int
    betti: tuple[int, ...]  # (b_0, ..., b_n)
    homotopy: str
    boundary_genus: int | None  # genus of the boundary surface; n = 3 only


def build_arrangement(n: int, raw_lines) -> Arrangement:
    """Canonicalize raw (point, direction) pairs into an Arrangement.

    Raises DuplicateLine if two inputs describe the same line; the message
    names both offending indices.  Input order is preserved.
    """
    if n < 2:
        raise DimensionMismatch(f"ambient dimension must be >= 2, got {n}")
    lines: list[Line] = []
    seen: dict[Line, int] = {}
    for idx, (p, u) in enumerate(raw_lines):
        line = canonicalize_line(p, u)
        if line.dimension != n:
            raise DimensionMismatch(
                f"line {idx} has dimension {line.dimension}, expected {n}"
            )
        if line in seen:
            raise DuplicateLine(seen[line], idx)
        seen[line] = idx
        lines.append(line)
    return Arrangement(dimension=n, lines=tuple(lines))


def multiple_points(a: Arrangement) -> list[MultiplePoint]:
    """All points lying on >= 2 lines, with their full incident line sets.

    Pairwise exact intersections are grouped by exact coordinate equality;
    any line through a grouped location is picked up automatically because it
    meets each of the other incident lines there.  Output is sorted
    lexicographically by location.
    """
    clusters: dict[Point, set[int]] = {}
    for i in range(len(a.lines)):
        for j in range(i + 1, len(a.lines)):
            x = intersect_lines(a.lines[i], a.lines[j])
            if x is None:
                continue
            assert x is not COINCIDENT  # arrangement lines are pairwise distinct
            clusters.setdefault(x, set()).update((i, j))
    return [
        MultiplePoint(location=loc, incident=tuple(sorted(clusters[loc])))
        for loc in sorted(clusters)
    ]


def multiplicity_vector(a: Arrangement) -> dict[int, int]:
    """Map multiplicity i -> number of multiple points with exactly i lines."""
    t: dict[int, int] = {}
    for mp in multiple_points(a):
        t[mp.multiplicity] = t.get(mp.multiplicity, 0) + 1
    return dict(sorted(t.items()))


def genus(a: Arrangement) -> int:
    """d + sum_i (i - 1) t_i: the handle count of the complement."""
    return a.d + sum((i - 1) * c for i, c in multiplicity_vector(a).items())


def predict_topology(a: Arrangement) -> InvariantReport:
    """Invariants plus the Betti vector and homotopy type they determine.

    The Betti vector is indexed 0..n.  For n >= 3 it is 1 at index 0 and g at
    index n-2; for n = 2 it is 1+g at index 0; all other entries vanish.
    """
    n = a.dimension
    t = multiplicity_vector(a)
    g = a.d + sum((i - 1) * c for i, c in t.items())
    betti = [0] * (n + 1)
    if n == 2:
        betti[0] = 1 + g
        homotopy = f"{1 + g} points"
    else:
        betti[0] = 1
        betti[n - 2] += g  # g = 0 leaves a contractible complement
        homotopy = f"bouquet of {g} spheres S^{n - 2}"
    return InvariantReport(
        dimension=n,
        d=a.d,
        t=t,
        g=g,
        betti=tuple(betti),
        homotopy=homotopy,
        boundary_genus=g if n == 3 else None,
    )


def transform(a: Arrangement, matrix, shift) -> Arrangement:
    """Apply an invertible rational linear map plus translation to every line.

    Used to exercise invariance of the report under affine isomorphisms;
    raises DimensionMismatch on a singular matrix only indirectly (duplicate
    or zero-direction errors surface from canonicalization).
    """
    n = a.dimension
    matrix = [[Fraction(x) for x in row] for row in matrix]
    shift = [Fraction(x) for x in shift]

    def apply_linear(v):
        return tuple(
            sum((matrix[i][j] * Fraction(v[j]) for j in range(n)), Fraction(0))
            for i in range(n)
        )

    raw = []
    for line in a.lines:
        p = tuple(x + s for x, s in zip(apply_linear(line.base), shift))
        u = apply_linear(line.direction)
        raw.append((p, u))
    return build_arrangement(n, raw)
