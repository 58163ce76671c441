"""Text and JSON file formats for tournaments, kernels and decompositions.

Tournament text: first line ``n``, then ``n`` lines of ``n`` characters
``0``/``1``; row ``i`` column ``j`` is 1 when ``i`` beats ``j``.

Kernel JSON::

    {"segments": [
        {"type": "atom", "weight": "1/4", "blocks": ["1/2", "1/2"],
         "matrix": [["1/2", "3/4"], ["1/4", "1/2"]]},
        {"type": "transitive", "weight": "3/4"}]}

Rationals are written as ``"p/q"``; numbers and decimal strings are accepted
on input and converted exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import ParseError
from .kernel import Atom, SegmentKernel, StepKernel, TransitiveSeg, as_segment_kernel
from .tournament import Tournament


def rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"expected a rational string or integer, got {s!r}")
    try:
        return Fraction(s.strip()) if isinstance(s, str) else Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {s!r}") from exc


def tournament_to_text(G: Tournament) -> str:
    rows = ["".join("1" if b else "0" for b in row) for row in G.beats]
    return "\n".join([str(G.n), *rows]) + "\n"


def tournament_from_text(text: str) -> Tournament:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty tournament file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    if n < 0:
        raise ParseError("vertex count must be nonnegative")
    rows = lines[1:]
    if len(rows) != n:
        raise ParseError(f"expected {n} matrix rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n or set(row) - {"0", "1"}:
            raise ParseError(f"row {i} must be {n} characters of 0/1, got {row!r}")
    # invariant violations (loops, asymmetry) surface as their own errors
    return Tournament(n, tuple(tuple(c == "1" for c in row) for row in rows))


def kernel_to_obj(W) -> dict:
    W = as_segment_kernel(W)
    segs = []
    for s in W.segments:
        if isinstance(s, Atom):
            segs.append(
                {
                    "type": "atom",
                    "weight": rational(s.weight),
                    "blocks": [rational(w) for w in s.inner.weights],
                    "matrix": [[rational(x) for x in row] for row in s.inner.values],
                }
            )
        else:
            segs.append({"type": "transitive", "weight": rational(s.weight)})
    return {"segments": segs}


def kernel_to_json(W) -> str:
    return json.dumps(kernel_to_obj(W), indent=2) + "\n"


def kernel_from_obj(obj) -> SegmentKernel:
    if not isinstance(obj, dict) or not isinstance(obj.get("segments"), list):
        raise ParseError('kernel JSON must be an object with a "segments" list')
    segs = []
    for k, s in enumerate(obj["segments"]):
        if not isinstance(s, dict) or "type" not in s or "weight" not in s:
            raise ParseError(f"segment {k} needs 'type' and 'weight'")
        weight = parse_rational(s["weight"])
        if s["type"] == "transitive":
            segs.append(TransitiveSeg(weight))
        elif s["type"] == "atom":
            blocks, matrix = s.get("blocks"), s.get("matrix")
            if not isinstance(blocks, list) or not isinstance(matrix, list):
                raise ParseError(f"atom segment {k} needs 'blocks' and 'matrix' lists")
            if any(not isinstance(row, list) for row in matrix):
                raise ParseError(f"atom segment {k}: matrix rows must be lists")
            inner = StepKernel(
                tuple(parse_rational(w) for w in blocks),
                tuple(tuple(parse_rational(x) for x in row) for row in matrix),
            )
            segs.append(Atom(weight, inner))
        else:
            raise ParseError(f"segment {k} has unknown type {s['type']!r}")
    return SegmentKernel(tuple(segs))


def kernel_from_json(text: str) -> SegmentKernel:
    try:
        # decimals stay strings so they convert exactly
        obj = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return kernel_from_obj(obj)


def as_step_kernel(W: SegmentKernel):
    """The inner step kernel of a single full-weight atom, else None."""
    if len(W.segments) == 1 and isinstance(W.segments[0], Atom):
        return W.segments[0].inner
    return None


def parse_any(text: str):
    """Tournament or SegmentKernel, detected from the first non-blank character."""
    if text.lstrip().startswith("{"):
        return kernel_from_json(text)
    return tournament_from_text(text)


def dumps_any(obj) -> str:
    if isinstance(obj, Tournament):
        return tournament_to_text(obj)
    return kernel_to_json(obj)
