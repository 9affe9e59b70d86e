"""Line-oriented text format for curve diagrams.

::

    diagram
    degree_y <d>
    line_L at <rational>
    strand <rank> component <name>        # one per rank 1..d
    event at <rational> ordinary m=<m> top=<rank>
    event at <rational> crossing m=<m> top=<rank>
    event at <rational> cusp m=<m> side=<left|right> top=<rank>
    event at <rational> tangency side=<left|right> top=<rank>
    end

Rationals are written ``p/q`` or as plain integers.  ``#`` starts a comment;
blank lines are ignored.  ``top`` is the rank of the block's highest strand
in the interval between the event and L.  Serialization round-trips exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .diagram import (
    Crossing,
    CurveDiagram,
    Cusp,
    DiagramError,
    Event,
    Ordinary,
    Tangency,
)


class DiagramParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


_RATIONAL = r"-?\d+(?:/\d+)?"
_NAME = r"[A-Za-z_][A-Za-z0-9_]*"

_RE_DEGREE = re.compile(r"^degree_y\s+(\d+)$")
_RE_LINE = re.compile(r"^line_L\s+at\s+(%s)$" % _RATIONAL)
_RE_STRAND = re.compile(r"^strand\s+(\d+)\s+component\s+(%s)$" % _NAME)
_RE_ORDINARY = re.compile(
    r"^event\s+at\s+(%s)\s+ordinary\s+m=(\d+)\s+top=(\d+)$" % _RATIONAL
)
_RE_CROSSING = re.compile(
    r"^event\s+at\s+(%s)\s+crossing\s+m=(\d+)\s+top=(\d+)$" % _RATIONAL
)
_RE_CUSP = re.compile(
    r"^event\s+at\s+(%s)\s+cusp\s+m=(\d+)\s+side=(left|right)\s+top=(\d+)$"
    % _RATIONAL
)
_RE_TANGENCY = re.compile(
    r"^event\s+at\s+(%s)\s+tangency\s+side=(left|right)\s+top=(\d+)$" % _RATIONAL
)


def parse_diagram(text: str, name: str = "") -> CurveDiagram:
    degree_y = None
    line_x = None
    strands: dict[int, str] = {}
    events: list[Event] = []
    seen_header = False
    seen_end = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if seen_end:
            raise DiagramParseError(lineno, "content after 'end'")
        if not seen_header:
            if line != "diagram":
                raise DiagramParseError(lineno, "expected 'diagram' header")
            seen_header = True
            continue
        if line == "end":
            seen_end = True
            continue
        m = _RE_DEGREE.match(line)
        if m:
            if degree_y is not None:
                raise DiagramParseError(lineno, "duplicate degree_y")
            degree_y = int(m.group(1))
            continue
        m = _RE_LINE.match(line)
        if m:
            if line_x is not None:
                raise DiagramParseError(lineno, "duplicate line_L")
            line_x = Fraction(m.group(1))
            continue
        m = _RE_STRAND.match(line)
        if m:
            rank = int(m.group(1))
            if rank in strands:
                raise DiagramParseError(lineno, "duplicate strand rank %d" % rank)
            strands[rank] = m.group(2)
            continue
        try:
            m = _RE_ORDINARY.match(line)
            if m:
                events.append(
                    Event(Fraction(m.group(1)), Ordinary(int(m.group(2))), int(m.group(3)))
                )
                continue
            m = _RE_CROSSING.match(line)
            if m:
                events.append(
                    Event(Fraction(m.group(1)), Crossing(int(m.group(2))), int(m.group(3)))
                )
                continue
            m = _RE_CUSP.match(line)
            if m:
                events.append(
                    Event(
                        Fraction(m.group(1)),
                        Cusp(int(m.group(2)), m.group(3)),
                        int(m.group(4)),
                    )
                )
                continue
            m = _RE_TANGENCY.match(line)
            if m:
                events.append(
                    Event(Fraction(m.group(1)), Tangency(m.group(2)), int(m.group(3)))
                )
                continue
        except DiagramError as exc:
            raise DiagramParseError(lineno, str(exc)) from exc
        raise DiagramParseError(lineno, "unrecognized line: %r" % raw.strip())

    if not seen_header:
        raise DiagramParseError(1, "missing 'diagram' header")
    if not seen_end:
        raise DiagramParseError(1, "missing 'end'")
    if degree_y is None:
        raise DiagramParseError(1, "missing degree_y")
    if line_x is None:
        raise DiagramParseError(1, "missing line_L")
    ranks = sorted(strands)
    if ranks != list(range(1, len(ranks) + 1)):
        raise DiagramParseError(1, "strand ranks must be exactly 1..d")
    xs = [e.x for e in events]
    if len(set(xs)) != len(xs):
        raise DiagramParseError(1, "two events share an x-coordinate")
    if line_x in xs:
        raise DiagramParseError(1, "line_L passes through an event")
    components = tuple(strands[r] for r in ranks)
    try:
        return CurveDiagram(degree_y, line_x, components, tuple(events), name=name)
    except DiagramError as exc:
        raise DiagramParseError(1, str(exc)) from exc


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (
        q.numerator,
        q.denominator,
    )


def serialize_diagram(diagram: CurveDiagram) -> str:
    lines = ["diagram", "degree_y %d" % diagram.deg_y]
    lines.append("line_L at %s" % _fmt_rational(diagram.line_x))
    for rank, comp in enumerate(diagram.components, start=1):
        lines.append("strand %d component %s" % (rank, comp))
    for ev in diagram.events:
        x = _fmt_rational(ev.x)
        k = ev.kind
        if isinstance(k, Ordinary):
            lines.append("event at %s ordinary m=%d top=%d" % (x, k.m, ev.top))
        elif isinstance(k, Crossing):
            lines.append("event at %s crossing m=%d top=%d" % (x, k.m, ev.top))
        elif isinstance(k, Cusp):
            lines.append(
                "event at %s cusp m=%d side=%s top=%d" % (x, k.m, k.branch_side, ev.top)
            )
        else:
            lines.append(
                "event at %s tangency side=%s top=%d" % (x, k.branch_side, ev.top)
            )
    lines.append("end")
    return "\n".join(lines) + "\n"
