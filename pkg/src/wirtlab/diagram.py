"""Combinatorial diagrams of real plane curves with a marked vertical line.

A :class:`CurveDiagram` records, purely combinatorially, the real picture of
an affine plane curve together with a vertical base line L:

* ``deg_y`` strands cross L, ranked 1 (top) to d (bottom), each tagged with
  the name of the irreducible component it belongs to;
* events at distinct x-coordinates (all different from L's) describe what
  happens to contiguous blocks of strands: an ordinary m-fold point
  (``Ordinary``), an A_m double point with branches on both sides
  (``Crossing``, m odd), an A_m point whose two real branches leave on one
  side (``Cusp``, m even >= 2), or a simple vertical tangency (``Tangency``).

``top`` is the rank of the block's highest strand in the interval between
the event and L; for cusps and tangencies whose branches point away from L
(so the block does not exist on the L side) it is the rank on the far side.

All x-coordinates are exact rationals; no floating point is used anywhere
in validation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union


class DiagramError(ValueError):
    pass


# ---------------------------------------------------------------------------
# event kinds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ordinary:
    """Ordinary m-fold point: m pairwise transverse smooth branches."""

    m: int

    def __post_init__(self):
        if self.m < 2:
            raise DiagramError("ordinary point needs m >= 2")

    @property
    def size(self) -> int:
        return self.m


@dataclass(frozen=True)
class Crossing:
    """A_m double point with real branches on both sides (m odd >= 1)."""

    m: int

    def __post_init__(self):
        if self.m < 1 or self.m % 2 == 0:
            raise DiagramError("crossing needs odd m >= 1")

    size = 2


@dataclass(frozen=True)
class Cusp:
    """A_m double point whose two real half-branches leave on one side
    (m even >= 2); ``branch_side`` is 'left' or 'right'."""

    m: int
    branch_side: str

    def __post_init__(self):
        if self.m < 2 or self.m % 2 == 1:
            raise DiagramError("cusp needs even m >= 2")
        if self.branch_side not in ("left", "right"):
            raise DiagramError("branch_side must be 'left' or 'right'")

    size = 2


@dataclass(frozen=True)
class Tangency:
    """Simple vertical tangency at a smooth point; the curve lies on
    ``branch_side``."""

    branch_side: str

    def __post_init__(self):
        if self.branch_side not in ("left", "right"):
            raise DiagramError("branch_side must be 'left' or 'right'")

    size = 2


EventKind = Union[Ordinary, Crossing, Cusp, Tangency]


@dataclass(frozen=True)
class Event:
    x: Fraction
    kind: EventKind
    top: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        if self.top < 1:
            raise DiagramError("top rank must be >= 1")


@dataclass(frozen=True)
class CurveDiagram:
    deg_y: int
    line_x: Fraction
    components: tuple[str, ...]  # component name of the rank-r strand at L
    events: tuple[Event, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "line_x", Fraction(self.line_x))
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(
            self, "events", tuple(sorted(self.events, key=lambda e: e.x))
        )
        xs = [e.x for e in self.events]
        if len(set(xs)) != len(xs):
            raise DiagramError("event x-coordinates must be pairwise distinct")
        if self.line_x in xs:
            raise DiagramError("the line L must not pass through an event")

    @property
    def d(self) -> int:
        return len(self.components)

    def side_of(self, event: Event) -> str:
        return "left" if event.x < self.line_x else "right"

    def events_on(self, side: str) -> list[Event]:
        """Events on one side of L, ordered from L outward."""
        if side == "left":
            return sorted(
                (e for e in self.events if e.x < self.line_x),
                key=lambda e: e.x,
                reverse=True,
            )
        return sorted(
            (e for e in self.events if e.x > self.line_x), key=lambda e: e.x
        )


def event_action(diagram: CurveDiagram, event: Event) -> str:
    """'through', 'death' or 'birth' for the outward sweep from L."""
    if isinstance(event.kind, (Ordinary, Crossing)):
        return "through"
    toward_l = "right" if diagram.side_of(event) == "left" else "left"
    return "death" if event.kind.branch_side == toward_l else "birth"


# ---------------------------------------------------------------------------
# outward sweep: live strands, extended edges, components
# ---------------------------------------------------------------------------

@dataclass
class Interval:
    """An open x-interval between consecutive events on one side of L."""

    side: str
    inner_x: Fraction  # bound closer to L (the L side)
    outer_x: Optional[Fraction]  # None = unbounded
    edges: tuple[int, ...]  # live extended-edge ids, top to bottom
    strands: tuple[int, ...]  # persistent strand tokens, top to bottom

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.edges) + 1))


@dataclass
class EventRecord:
    index: int  # position in diagram.events
    event: Event
    side: str
    action: str  # through | death | birth
    top: int  # block top position on the block side
    near_edges: tuple[int, ...]  # block edges on the L side (empty for birth)
    far_edges: tuple[int, ...]  # block edges on the far side (empty for death)
    block_strands: tuple[int, ...]  # persistent strand tokens of the block

    @property
    def size(self) -> int:
        return len(self.near_edges) or len(self.far_edges)

    @property
    def y_level(self) -> Fraction:
        return -(Fraction(self.top) + Fraction(self.size - 1, 2))

    def label(self) -> str:
        kind = type(self.event.kind).__name__.lower()
        return "%s at x=%s" % (kind, self.event.x)


class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass
class SweepResult:
    diagram: CurveDiagram
    intervals: dict  # side -> list[Interval], ordered from L outward
    records: list[EventRecord]  # in diagram event order
    edge_count: int
    fiber_edges: tuple[int, ...]  # edge id of the rank-r strand at L
    edge_events: dict  # edge id -> (inner event index | None, outer | None)
    tangency_merges: list[tuple[int, int]]  # extended-edge pairs
    branch_merge: UnionFind  # edges connected along the curve
    violations: list[str]

    def record_for(self, event: Event) -> EventRecord:
        return self.records[self.diagram.events.index(event)]


def sweep_ranks(diagram: CurveDiagram) -> SweepResult:
    """Sweep outward from L on both sides, deriving live-strand orderings,
    extended edges and branch connectivity.  Structural violations are
    collected rather than raised."""
    d = diagram.d
    violations: list[str] = []
    if d != diagram.deg_y:
        violations.append(
            "W3: %d strands declared at L but degree_y is %d" % (d, diagram.deg_y)
        )
    edge_counter = d
    strand_counter = d
    fiber_edges = tuple(range(1, d + 1))
    edge_events: dict = {e: [None, None] for e in fiber_edges}
    branch = UnionFind()
    for e in fiber_edges:
        branch.add(e)
    tangency_merges: list[tuple[int, int]] = []
    records_by_index: dict[int, EventRecord] = {}
    intervals: dict = {}

    for side in ("left", "right"):
        live_edges = list(fiber_edges)
        live_strands = list(range(1, d + 1))
        ivs: list[Interval] = []
        inner = diagram.line_x
        for event in diagram.events_on(side):
            ivs.append(
                Interval(side, inner, event.x, tuple(live_edges), tuple(live_strands))
            )
            idx = diagram.events.index(event)
            action = event_action(diagram, event)
            size = event.kind.size
            top = event.top
            n = len(live_edges)
            in_range = top <= n + 1 if action == "birth" else top + size - 1 <= n
            if not in_range:
                violations.append(
                    "sweep: block [%d..%d] out of range among %d strands at %s"
                    % (top, top + size - 1, n, _event_name(event))
                )
                inner = event.x
                continue
            if action == "birth":
                new_edges = [edge_counter + 1, edge_counter + 2]
                new_strands = [strand_counter + 1, strand_counter + 2]
                edge_counter += 2
                strand_counter += 2
                for e in new_edges:
                    edge_events[e] = [idx, None]
                    branch.add(e)
                branch.union(new_edges[0], new_edges[1])
                if isinstance(event.kind, Tangency):
                    tangency_merges.append((new_edges[0], new_edges[1]))
                block_strands = tuple(new_strands)
                live_edges[top - 1: top - 1] = new_edges
                live_strands[top - 1: top - 1] = new_strands
                records_by_index[idx] = EventRecord(
                    idx, event, side, action, top, (), tuple(new_edges), block_strands
                )
            elif action == "death":
                block_edges = live_edges[top - 1: top - 1 + size]
                block_strands = tuple(live_strands[top - 1: top - 1 + size])
                for e in block_edges:
                    _set_endpoint(edge_events, e, side, idx)
                branch.union(block_edges[0], block_edges[1])
                if isinstance(event.kind, Tangency):
                    tangency_merges.append((block_edges[0], block_edges[1]))
                del live_edges[top - 1: top - 1 + size]
                del live_strands[top - 1: top - 1 + size]
                records_by_index[idx] = EventRecord(
                    idx, event, side, action, top, tuple(block_edges), (), block_strands
                )
            else:  # through
                block_edges = live_edges[top - 1: top - 1 + size]
                block_strands = list(live_strands[top - 1: top - 1 + size])
                for e in block_edges:
                    _set_endpoint(edge_events, e, side, idx)
                new_edges = list(range(edge_counter + 1, edge_counter + 1 + size))
                edge_counter += size
                for e in new_edges:
                    edge_events[e] = [None, None]
                    _set_endpoint(edge_events, e, "left" if side == "right" else "right", idx)
                    branch.add(e)
                # far position i continues the line of near position pair(i)
                if isinstance(event.kind, Ordinary):
                    pairing = list(reversed(range(size)))
                elif event.kind.m % 4 == 1:
                    pairing = [1, 0]
                else:
                    pairing = [0, 1]
                far_strands = [0] * size
                for far_pos, near_pos in enumerate(pairing):
                    branch.union(new_edges[far_pos], block_edges[near_pos])
                    far_strands[far_pos] = block_strands[near_pos]
                live_edges[top - 1: top - 1 + size] = new_edges
                live_strands[top - 1: top - 1 + size] = far_strands
                records_by_index[idx] = EventRecord(
                    idx,
                    event,
                    side,
                    "through",
                    top,
                    tuple(block_edges),
                    tuple(new_edges),
                    tuple(block_strands),
                )
            inner = event.x
        ivs.append(Interval(side, inner, None, tuple(live_edges), tuple(live_strands)))
        intervals[side] = ivs

    records = [
        records_by_index[i]
        for i in range(len(diagram.events))
        if i in records_by_index
    ]
    return SweepResult(
        diagram,
        intervals,
        records,
        edge_counter,
        fiber_edges,
        edge_events,
        tangency_merges,
        branch,
        violations,
    )


def _set_endpoint(edge_events: dict, edge: int, outward_side: str, idx: int) -> None:
    slot = 1 if outward_side == "right" else 0
    edge_events.setdefault(edge, [None, None])[slot] = idx


def _event_name(event: Event) -> str:
    return "%s at x=%s" % (type(event.kind).__name__.lower(), event.x)


# ---------------------------------------------------------------------------
# derived edges (E_C) and component consistency
# ---------------------------------------------------------------------------

@dataclass
class EdgeComplex:
    sweep: SweepResult
    edge_class: dict  # extended edge id -> class representative
    classes: list[tuple[int, ...]]  # E_C classes (sorted tuples of edge ids)
    edge_component: dict  # extended edge id -> component name or None


def derive_edges(diagram: CurveDiagram, sweep: SweepResult | None = None) -> EdgeComplex:
    """Extended edges are strand segments between consecutive incident
    events; E_C classes merge them across tangencies (vertical tangencies
    are not vertices of the curve)."""
    sw = sweep if sweep is not None else sweep_ranks(diagram)
    ec = UnionFind()
    for e in range(1, sw.edge_count + 1):
        ec.add(e)
    for a, b in sw.tangency_merges:
        ec.union(a, b)
    classes = sorted(
        tuple(sorted(members)) for members in ec.classes().values()
    )
    edge_class = {e: ec.find(e) for e in range(1, sw.edge_count + 1)}

    # component names from branch connectivity
    comp: dict = {}
    for e in range(1, sw.edge_count + 1):
        root = sw.branch_merge.find(e)
        comp.setdefault(root, set())
    for rank, e in enumerate(sw.fiber_edges, start=1):
        comp[sw.branch_merge.find(e)].add(diagram.components[rank - 1])
    edge_component = {}
    for e in range(1, sw.edge_count + 1):
        names = comp[sw.branch_merge.find(e)]
        edge_component[e] = sorted(names)[0] if names else None
    return EdgeComplex(sw, edge_class, classes, edge_component)


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str]

    def to_json(self) -> dict:
        return {"schema": 1, "ok": self.ok, "violations": list(self.violations)}


def validate_wirtinger_type(diagram: CurveDiagram) -> ValidationReport:
    """Structural Wirtinger-type checks: strand count matches degree, every
    event's block is in range, and branch connections never merge strands
    declared to lie on different components."""
    sw = sweep_ranks(diagram)
    violations = list(sw.violations)
    # component declarations must be consistent with branch connectivity
    clusters: dict = {}
    for rank, e in enumerate(sw.fiber_edges, start=1):
        clusters.setdefault(sw.branch_merge.find(e), []).append(rank)
    for ranks in clusters.values():
        names = {diagram.components[r - 1] for r in ranks}
        if len(names) > 1:
            violations.append(
                "components: strands %s are connected but declared as %s"
                % (ranks, sorted(names))
            )
    return ValidationReport(not violations, violations)


# ---------------------------------------------------------------------------
# faces of the complement of C_R + L_R
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fragment:
    slab: int
    gap: int


@dataclass
class Cut:
    x: Fraction
    is_line: bool
    record: Optional[EventRecord]
    heights: dict  # strand token -> Fraction height at this cut


@dataclass
class FaceComplex:
    diagram: CurveDiagram
    sweep: SweepResult
    cuts: list[Cut]
    slabs: list[Interval]  # slab i lies between cuts i-1 and i
    faces: dict  # fragment -> face id
    face_fragments: dict  # face id -> list of fragments
    bounded: dict  # face id -> bool
    glue_records: list[tuple[int, Fragment, Fragment]]  # (cut index, left, right)

    def fragment_face(self, frag: Fragment) -> int:
        return self.faces[frag]


def _interval_for_slab(sw: SweepResult, lo: Fraction | None, hi: Fraction | None) -> Interval:
    line_x = sw.diagram.line_x
    if hi is not None and hi <= line_x:
        side = "left"
    elif lo is not None and lo >= line_x:
        side = "right"
    else:
        # the slab containing L is split at L; handled by callers
        raise AssertionError("slab spans L")
    for iv in sw.intervals[side]:
        if side == "left":
            ilo, ihi = iv.outer_x, iv.inner_x
        else:
            ilo, ihi = iv.inner_x, iv.outer_x
        if ilo == lo and ihi == hi:
            return iv
    raise AssertionError("no interval for slab (%s, %s)" % (lo, hi))


def faces(diagram: CurveDiagram, sweep: SweepResult | None = None) -> FaceComplex:
    """Decompose the plane (clipped to a box) into faces of the complement
    of the curve plus L, by slab-gap fragments glued across cuts."""
    sw = sweep if sweep is not None else sweep_ranks(diagram)
    if sw.violations:
        raise DiagramError("cannot build faces: " + "; ".join(sw.violations))
    xs = sorted([e.x for e in diagram.events] + [diagram.line_x])
    bounds = [None] + xs + [None]
    slabs: list[Interval] = []
    for i in range(len(bounds) - 1):
        lo, hi = bounds[i], bounds[i + 1]
        slabs.append(_interval_for_slab(sw, lo, hi))

    cuts: list[Cut] = []
    for x in xs:
        if x == diagram.line_x:
            heights = {
                tok: Fraction(-rank)
                for rank, tok in enumerate(range(1, diagram.d + 1), start=1)
            }
            cuts.append(Cut(x, True, None, heights))
            continue
        rec = next(r for r in sw.records if r.event.x == x)
        # positions on the block side of the cut
        if rec.action == "birth":
            block_side_iv = _adjacent_slab(slabs, bounds, x, away_from=diagram.line_x)
        else:
            block_side_iv = _adjacent_slab(slabs, bounds, x, toward=diagram.line_x)
        heights = {}
        block = set(rec.block_strands)
        for pos, tok in enumerate(block_side_iv.strands, start=1):
            heights[tok] = rec.y_level if tok in block else Fraction(-pos)
        for tok in block:
            heights.setdefault(tok, rec.y_level)
        cuts.append(Cut(x, False, rec, heights))

    uf = UnionFind()
    all_frags = []
    for si, slab in enumerate(slabs):
        for g in range(len(slab.strands) + 1):
            frag = Fragment(si, g)
            uf.add(frag)
            all_frags.append(frag)

    glue_records: list[tuple[int, Fragment, Fragment]] = []
    for ci, cut in enumerate(cuts):
        if cut.is_line:
            continue
        left_slab, right_slab = slabs[ci], slabs[ci + 1]
        ys = sorted(set(cut.heights.values()), reverse=True)
        points = [None] + ys + [None]  # None = +/- infinity sentinels
        for k in range(len(points) - 1):
            hi, lo = points[k], points[k + 1]
            lf = _gap_containing(left_slab, cut, hi, lo, ci, "right")
            rf = _gap_containing(right_slab, cut, hi, lo, ci + 1, "left")
            if lf is None or rf is None:
                raise AssertionError("gap lookup failed at cut x=%s" % cut.x)
            uf.union(lf, rf)
            glue_records.append((ci, lf, rf))

    face_of: dict = {}
    face_frags: dict = {}
    for frag in all_frags:
        root = uf.find(frag)
        face_of[frag] = root
        face_frags.setdefault(root, []).append(frag)

    bounded = {}
    for root, frags in face_frags.items():
        outer = False
        for fr in frags:
            slab = slabs[fr.slab]
            if fr.slab == 0 or fr.slab == len(slabs) - 1:
                outer = True
            if fr.gap == 0 or fr.gap == len(slab.strands):
                outer = True
        bounded[root] = not outer

    return FaceComplex(diagram, sw, cuts, slabs, face_of, face_frags, bounded, glue_records)


def _adjacent_slab(slabs, bounds, x, toward=None, away_from=None):
    i = bounds.index(x)  # cut between slab i-1 and slab i
    ref = toward if toward is not None else away_from
    left_of_ref = x < ref
    if toward is not None:
        return slabs[i] if left_of_ref else slabs[i - 1]
    return slabs[i - 1] if left_of_ref else slabs[i]


def _gap_heights(slab: Interval, cut: Cut) -> list[Fraction | None]:
    """Heights of the slab's strands at the cut, top to bottom."""
    out = []
    for tok in slab.strands:
        h = cut.heights.get(tok)
        if h is None:
            raise AssertionError("strand %r missing a height at cut x=%s" % (tok, cut.x))
        out.append(h)
    return out


def _gap_containing(slab: Interval, cut: Cut, hi, lo, slab_index: int, cut_side: str) -> Fragment | None:
    """The slab gap whose interval at the cut contains (lo, hi)."""
    hs = _gap_heights(slab, cut)
    uppers = [None] + hs  # gap g bounded above by strand g-1
    lowers = hs + [None]
    for g in range(len(hs) + 1):
        up, lw = uppers[g], lowers[g]
        if up is not None and lw is not None and up <= lw:
            continue  # empty gap (block strands at the same height)
        ok_up = (up is None) or (hi is not None and hi <= up)
        ok_lw = (lw is None) or (lo is not None and lo >= lw)
        if ok_up and ok_lw:
            return Fragment(slab_index, g)
    return None


# ---------------------------------------------------------------------------
# obstruction points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionPoint:
    """The forbidden point sitting beside a tangency or an A_{2k} point,
    on the side opposite the real branches (local model y^2 = x has its
    branches on the right and the obstruction on the left)."""

    event_index: int
    side: str  # side of the event the point lies on
    x: Fraction
    y_level: Fraction

    def label(self, diagram: CurveDiagram) -> str:
        ev = diagram.events[self.event_index]
        return "obstruction %s of %s" % (self.side, _event_name(ev))


def obstruction_points(diagram: CurveDiagram, sweep: SweepResult | None = None) -> list[ObstructionPoint]:
    sw = sweep if sweep is not None else sweep_ranks(diagram)
    out = []
    for rec in sw.records:
        kind = rec.event.kind
        if not isinstance(kind, (Cusp, Tangency)):
            continue
        side = "left" if kind.branch_side == "right" else "right"
        out.append(ObstructionPoint(rec.index, side, rec.event.x, rec.y_level))
    return out


def locate_obstruction(fc: FaceComplex, ob: ObstructionPoint) -> Fragment:
    """Fragment containing an obstruction point (just beside its event, at
    the event's y-level)."""
    xs_sorted = [c.x for c in fc.cuts]
    ci = xs_sorted.index(fc.diagram.events[ob.event_index].x)
    slab_index = ci if ob.side == "left" else ci + 1
    slab = fc.slabs[slab_index]
    cut = fc.cuts[ci]
    frag = _gap_containing_point(slab, cut, ob.y_level, slab_index)
    if frag is None:
        raise AssertionError("obstruction point not inside any gap")
    return frag


def _gap_containing_point(slab: Interval, cut: Cut, y: Fraction, slab_index: int) -> Fragment | None:
    hs = _gap_heights(slab, cut)
    uppers = [None] + hs
    lowers = hs + [None]
    for g in range(len(hs) + 1):
        up, lw = uppers[g], lowers[g]
        if (up is None or y < up) and (lw is None or y > lw):
            return Fragment(slab_index, g)
    return None


# ---------------------------------------------------------------------------
# region B and the theorem checks
# ---------------------------------------------------------------------------

@dataclass
class RegionReport:
    ok: bool
    faces: list[int]  # face ids making up the region
    euler: Optional[int]
    connected: Optional[bool]
    blocked_faces: list[str]  # bounded faces containing obstruction points
    message: str

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "ok": self.ok,
            "euler": self.euler,
            "connected": self.connected,
            "blocked_faces": list(self.blocked_faces),
            "message": self.message,
        }


def auto_region_B(diagram: CurveDiagram, fc: FaceComplex | None = None) -> RegionReport:
    """Search for a region B making B together with the curve and L simply
    connected while containing no obstruction point.

    A winding-number argument pins the answer down combinatorially: any
    disk B for which the union is simply connected must cover every
    bounded face of the complement of curve+L entirely, and conversely,
    when every bounded face is free of obstruction points, a thin closed
    neighborhood of those faces, the relevant segment of L, and connecting
    arcs of the curve is a valid disk.  So a valid region exists exactly
    when no bounded face contains an obstruction point; the report also
    carries the Euler characteristic and connectivity of the filled union
    as an independent verification."""
    complex_ = fc if fc is not None else faces(diagram)
    sw = complex_.sweep
    obstructions = obstruction_points(diagram, sw)
    blocked: dict[int, list[str]] = {}
    for ob in obstructions:
        frag = locate_obstruction(complex_, ob)
        face = complex_.faces[frag]
        if complex_.bounded[face]:
            blocked.setdefault(face, []).append(ob.label(diagram))
    chosen = [face for face, is_b in complex_.bounded.items() if is_b]
    blocked_faces = [
        "bounded face must belong to the region but contains %s"
        % "; ".join(labels)
        for labels in blocked.values()
    ]

    euler, connected = _euler_and_connectivity(complex_, set(chosen))
    ok = not blocked_faces and euler == 1 and connected
    if ok:
        message = (
            "region accepted: all %d bounded faces are obstruction-free"
            % len(chosen)
        )
    else:
        reasons = list(blocked_faces)
        if euler != 1:
            reasons.append("Euler characteristic of B+C+L is %s, not 1" % euler)
        if not connected:
            reasons.append("B+C+L is not connected")
        message = "no valid region: " + "; ".join(reasons)
    return RegionReport(ok, chosen, euler, connected, blocked_faces, message)


def _euler_and_connectivity(fc: FaceComplex, chosen: set) -> tuple[int, bool]:
    """Euler characteristic and connectivity of closed(B) + C_R + L_R."""
    uf = UnionFind()
    V = set()
    E = []  # (cell id, endpoints)

    def vkey(ci, h):
        return ("v", ci, h)

    # vertices on cuts: all strand heights (curve points); on L also clip ends
    box_top = Fraction(1)
    box_bot = min(
        [min(c.heights.values(), default=Fraction(0)) for c in fc.cuts]
        + [Fraction(-1)]
    ) - 1
    for ci, cut in enumerate(fc.cuts):
        for h in set(cut.heights.values()):
            V.add(vkey(ci, h))
        if cut.is_line:
            V.add(vkey(ci, box_top))
            V.add(vkey(ci, box_bot))

    # clip vertices for unbounded strand ends
    for end, slab_index in (("L", 0), ("R", len(fc.slabs) - 1)):
        slab = fc.slabs[slab_index]
        for pos, tok in enumerate(slab.strands, start=1):
            V.add(("clip", end, tok))

    # strand segments: one 1-cell per live strand per slab
    for si, slab in enumerate(fc.slabs):
        for pos, tok in enumerate(slab.strands, start=1):
            if si == 0:
                a = ("clip", "L", tok)
            else:
                a = vkey(si - 1, fc.cuts[si - 1].heights[tok])
            if si == len(fc.slabs) - 1:
                b = ("clip", "R", tok)
            else:
                b = vkey(si, fc.cuts[si].heights[tok])
            E.append((("s", si, tok), (a, b)))

    # line segments along L
    line_ci = [c.x for c in fc.cuts].index(fc.diagram.line_x)
    line_cut = fc.cuts[line_ci]
    ys = sorted(set(line_cut.heights.values()), reverse=True)
    chain = [box_top] + ys + [box_bot]
    for a, b in zip(chain, chain[1:]):
        E.append((("l", a, b), (vkey(line_ci, a), vkey(line_ci, b))))

    # interior glue segments of chosen faces
    glue_cells = []
    for gi, (ci, lf, rf) in enumerate(fc.glue_records):
        if fc.faces[lf] in chosen:
            glue_cells.append((gi, ci, lf, rf))

    nV = len(V)
    nE = len(E) + len(glue_cells)
    nF = sum(len(fc.face_fragments[f]) for f in chosen)
    euler = nV - nE + nF

    for cell, (a, b) in E:
        uf.union(("cell", cell), a)
        uf.union(("cell", cell), b)
    for gi, ci, lf, rf in glue_cells:
        uf.union(("frag", lf), ("frag", rf))
        uf.union(("frag", lf), ("glue", gi))
    # fragments attach to their bounding strand segments
    for face in chosen:
        for frag in fc.face_fragments[face]:
            slab = fc.slabs[frag.slab]
            if frag.gap > 0:
                uf.union(("frag", frag), ("cell", ("s", frag.slab, slab.strands[frag.gap - 1])))
            if frag.gap < len(slab.strands):
                uf.union(("frag", frag), ("cell", ("s", frag.slab, slab.strands[frag.gap])))
    for v in V:
        uf.add(v)
    roots = {uf.find(v) for v in V}
    for face in chosen:
        for frag in fc.face_fragments[face]:
            roots.add(uf.find(("frag", frag)))
    connected = len(roots) == 1
    return euler, connected


def check_facing(diagram: CurveDiagram) -> list[str]:
    """Every cusp and tangency must present its branches toward L."""
    out = []
    for ev in diagram.events:
        if isinstance(ev.kind, (Cusp, Tangency)):
            toward = "right" if diagram.side_of(ev) == "left" else "left"
            if ev.kind.branch_side != toward:
                out.append(
                    "facing: %s has branches on the %s, away from L"
                    % (_event_name(ev), ev.kind.branch_side)
                )
    return out


def check_connectivity(diagram: CurveDiagram, sweep: SweepResult | None = None) -> list[str]:
    """The real part of each declared component must be a single piece
    meeting L."""
    sw = sweep if sweep is not None else sweep_ranks(diagram)
    clusters: dict = {}
    for e in range(1, sw.edge_count + 1):
        clusters.setdefault(sw.branch_merge.find(e), set())
    for rank, e in enumerate(sw.fiber_edges, start=1):
        clusters[sw.branch_merge.find(e)].add(diagram.components[rank - 1])
    out = []
    names_seen: dict[str, int] = {}
    for root, names in clusters.items():
        if not names:
            out.append(
                "connectivity: a real branch (extended edges %s) never meets L"
                % sorted(
                    e
                    for e in range(1, sw.edge_count + 1)
                    if sw.branch_merge.find(e) == root
                )
            )
        for name in names:
            names_seen[name] = names_seen.get(name, 0) + 1
    for name, count in names_seen.items():
        if count > 1:
            out.append(
                "connectivity: component %r has %d disjoint real pieces" % (name, count)
            )
    return out


@dataclass
class TheoremReport:
    verified: bool
    violations: list[str]
    region: Optional[RegionReport]

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "verified": self.verified,
            "violations": list(self.violations),
            "region": self.region.to_json() if self.region else None,
        }


def check_theorem(diagram: CurveDiagram) -> TheoremReport:
    """Mechanically check the sufficiency hypotheses: structural validity,
    componentwise real connectivity, the facing condition, and existence of
    the canonical simply-connected region B."""
    validation = validate_wirtinger_type(diagram)
    violations = list(validation.violations)
    if not validation.ok:
        return TheoremReport(False, violations, None)
    sw = sweep_ranks(diagram)
    violations += check_connectivity(diagram, sw)
    violations += check_facing(diagram)
    region = None
    if not violations:
        region = auto_region_B(diagram)
        if not region.ok:
            violations.append("region: " + region.message)
    return TheoremReport(not violations, violations, region)
