"""Arrangement file format and JSON report assembly.

Rationals travel as decimal strings "p" or "p/q" (q > 0) in every file
format, so values survive round trips exactly.  Reports carry no timestamps;
identical input, flags, and tool version give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction

from .arrangement import Arrangement, InvariantReport, build_arrangement
from .errors import (
    DimensionMismatch,
    DuplicateLine,
    LinetopoError,
    ParseError,
    ZeroDirection,
)
from .geometry import canonicalize_line
from .sweep import HandleTrace, SpaceGraph, SweepPlan
from .verify import VerificationReport

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text, path: str = "") -> Fraction:
    """Parse "p" or "p/q" into an exact Fraction; integers are accepted raw."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"expected a rational string like '3' or '-3/4', got {text!r}", path)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", path)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x) -> str:
    return str(Fraction(x))


def format_point(p) -> list[str]:
    return [format_rational(c) for c in p]


def input_digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def _expect(cond: bool, message: str, path: str):
    if not cond:
        raise ParseError(message, path)


def parse_arrangement(text: str) -> Arrangement:
    """Parse and validate an arrangement file; errors carry JSON paths."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    _expect(isinstance(doc, dict), "top level must be an object", "$")
    _expect("dimension" in doc, "missing 'dimension'", "$")
    n = doc["dimension"]
    _expect(isinstance(n, int) and not isinstance(n, bool) and n >= 2,
            "'dimension' must be an integer >= 2", "dimension")
    _expect("lines" in doc, "missing 'lines'", "$")
    _expect(isinstance(doc["lines"], list), "'lines' must be a list", "lines")

    raw = []
    for i, entry in enumerate(doc["lines"]):
        path = f"lines[{i}]"
        _expect(isinstance(entry, dict), "line entry must be an object", path)
        for field in ("point", "direction"):
            _expect(field in entry, f"missing '{field}'", path)
            val = entry[field]
            _expect(isinstance(val, list), f"'{field}' must be a list", f"{path}.{field}")
            _expect(len(val) == n, f"'{field}' must have {n} coordinates",
                    f"{path}.{field}")
        point = [parse_rational(c, f"{path}.point[{j}]") for j, c in enumerate(entry["point"])]
        direction = [
            parse_rational(c, f"{path}.direction[{j}]")
            for j, c in enumerate(entry["direction"])
        ]
        try:
            canonicalize_line(point, direction)
        except ZeroDirection as exc:
            raise ZeroDirection(f"{path}.direction: {exc}") from exc
        except DimensionMismatch as exc:
            raise DimensionMismatch(f"{path}: {exc}") from exc
        raw.append((point, direction))

    try:
        return build_arrangement(n, raw)
    except DuplicateLine as exc:
        raise DuplicateLine(exc.first, exc.second) from exc


def arrangement_to_json(a: Arrangement, name: str | None = None, **metadata) -> dict:
    doc: dict = {"dimension": a.dimension}
    if name is not None:
        doc["name"] = name
    doc.update(metadata)
    doc["lines"] = [
        {
            "point": format_point(line.base),
            "direction": [str(c) for c in line.direction],
        }
        for line in a.lines
    ]
    return doc


def serialize_arrangement(a: Arrangement, name: str | None = None, **metadata) -> str:
    return json.dumps(arrangement_to_json(a, name, **metadata), indent=2) + "\n"


def invariant_report_to_json(rep: InvariantReport) -> dict:
    doc = {
        "dimension": rep.dimension,
        "d": rep.d,
        "t": {str(i): c for i, c in sorted(rep.t.items())},
        "g": rep.g,
        "betti": list(rep.betti),
        "homotopy": rep.homotopy,
    }
    if rep.boundary_genus is not None:
        doc["boundary_genus"] = rep.boundary_genus
    return doc


def sweep_plan_to_json(plan: SweepPlan, graph: SpaceGraph) -> dict:
    return {
        "direction": format_point(plan.direction),
        "initial_rays_down": plan.initial_rays_down,
        "events": [
            {
                "vertex": ev.vertex,
                "point": format_point(graph.vertices[ev.vertex]),
                "level": format_rational(ev.level),
                "s": ev.s,
                "r": ev.r,
            }
            for ev in plan.events
        ],
    }


def handle_trace_to_json(trace: HandleTrace, n: int) -> dict:
    doc = {
        "initial_g": trace.initial_g,
        "steps": [
            {
                "event": st.event,
                "handles_added": st.handles_added,
                "handle_index": st.handle_index,
                "trivial": st.trivial,
            }
            for st in trace.steps
        ],
        "final_g": trace.final_g,
        "all_trivial": trace.all_trivial,
    }
    # A ball-with-handles conclusion (and with it any Betti prediction) exists
    # only when every attachment was trivial.
    if trace.all_trivial:
        g = trace.final_g
        betti = [0] * (n + 1)
        if n == 2:
            betti[0] = 1 + g
        else:
            betti[0] = 1
            betti[n - 2] += g
        doc["conclusion"] = {
            "g": g,
            "handle_index": n - 2,
            "betti": betti,
        }
    else:
        doc["conclusion"] = None
    return doc


def verification_to_json(rep: VerificationReport) -> dict:
    return {
        "dimension": rep.dimension,
        "resolution": rep.resolution,
        "predicted": list(rep.predicted),
        "measured": list(rep.measured),
        "match": rep.match,
    }


def error_to_json(exc: LinetopoError) -> dict:
    doc = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError) and exc.path:
        doc["path"] = exc.path
    return doc
