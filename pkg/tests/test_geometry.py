from fractions import Fraction

import pytest

from linetopo import (
    COINCIDENT,
    DimensionMismatch,
    ZeroDirection,
    canonicalize_line,
    intersect_lines,
    point_on_line,
)
from linetopo.generate import SplitMix64
from linetopo.geometry import line_box_params


def test_canonicalize_projects_base_and_normalizes_direction():
    line = canonicalize_line((0, 0, 5), (2, 0, 0))
    assert line.base == (0, 0, 5)
    assert line.direction == (1, 0, 0)

    line = canonicalize_line((1, 1), (0, -3))
    assert line.base == (1, 0)
    assert line.direction == (0, 1)

    line = canonicalize_line((3, 0, 0), (1, 0, 0))
    assert line.base == (0, 0, 0)
    assert line.direction == (1, 0, 0)


def test_canonicalize_rejects_zero_direction_and_bad_dimensions():
    with pytest.raises(ZeroDirection):
        canonicalize_line((0, 0), (0, 0))
    with pytest.raises(DimensionMismatch):
        canonicalize_line((0, 0, 0), (1, 0))
    with pytest.raises(DimensionMismatch):
        canonicalize_line((1,), (1,))


def test_canonicalize_is_idempotent_on_random_lines():
    rng = SplitMix64(11)
    for _ in range(200):
        n = 2 + rng.below(3)
        p = [Fraction(rng.int_between(-30, 30), 1 + rng.below(7)) for _ in range(n)]
        u = [Fraction(rng.int_between(-30, 30), 1 + rng.below(7)) for _ in range(n)]
        if all(c == 0 for c in u):
            u[0] = Fraction(1)
        line = canonicalize_line(p, u)
        again = canonicalize_line(line.base, line.direction)
        assert again == line
        # every rational point of the parametrized line is incident
        for t in (Fraction(0), Fraction(1), Fraction(-7, 3)):
            x = tuple(pc + t * uc for pc, uc in zip(p, u))
            assert point_on_line(x, line)


def test_intersect_axes_in_plane():
    x_axis = canonicalize_line((0, 0), (1, 0))
    y_axis = canonicalize_line((0, 0), (0, 1))
    assert intersect_lines(x_axis, y_axis) == (0, 0)


def test_intersect_parallel_distinct_is_empty():
    a = canonicalize_line((0, 0), (1, 0))
    b = canonicalize_line((0, 1), (1, 0))
    assert intersect_lines(a, b) is None


def test_intersect_skew_is_empty():
    a = canonicalize_line((0, 0, 0), (1, 0, 0))
    b = canonicalize_line((0, 1, 0), (0, 0, 1))
    assert intersect_lines(a, b) is None


def test_intersect_coincident_sentinel():
    a = canonicalize_line((0, 0, 0), (1, 0, 0))
    b = canonicalize_line((7, 0, 0), (-2, 0, 0))
    assert a == b
    assert intersect_lines(a, b) is COINCIDENT


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        intersect_lines(canonicalize_line((0, 0), (1, 0)), canonicalize_line((0, 0, 0), (1, 0, 0)))


def test_intersect_symmetric_and_incident_on_random_pairs():
    rng = SplitMix64(23)
    hits = 0
    for _ in range(300):
        n = 2 + rng.below(3)
        def rand_line():
            p = [rng.int_between(-9, 9) for _ in range(n)]
            u = [rng.int_between(-9, 9) for _ in range(n)]
            if all(c == 0 for c in u):
                u[0] = 1
            return canonicalize_line(p, u)
        a, b = rand_line(), rand_line()
        ab, ba = intersect_lines(a, b), intersect_lines(b, a)
        if ab is COINCIDENT or ab is None:
            assert ba is ab
        else:
            hits += 1
            assert ab == ba
            assert point_on_line(ab, a) and point_on_line(ab, b)
    assert hits > 20  # planar draws guarantee plenty of honest crossings


def test_point_on_line_examples():
    x_axis = canonicalize_line((0, 0, 0), (1, 0, 0))
    assert point_on_line((2, 0, 0), x_axis)
    assert not point_on_line((0, 1, 0), x_axis)
    assert point_on_line(x_axis.base, x_axis)
    with pytest.raises(DimensionMismatch):
        point_on_line((1, 2), x_axis)


def test_line_box_params_clips_exactly():
    line = canonicalize_line((0, 0), (1, 1))
    span = line_box_params(line, (-1, -1), (2, 2))
    assert span == (Fraction(-1), Fraction(2))
    # a line missing the box
    far = canonicalize_line((0, 10), (1, 0))
    assert line_box_params(far, (-1, -1), (2, 2)) is None
    # corner touch collapses to one parameter
    diag = canonicalize_line((4, 0), (1, -1))
    span = line_box_params(diag, (-1, -1), (2, 2))
    assert span is not None and span[0] == span[1]
