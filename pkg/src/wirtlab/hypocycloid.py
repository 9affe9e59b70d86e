"""Hypocycloid curves and their fold-quotient diagrams.

For coprime integers 0 < ell < k the hypocycloid is the trace of a point
on a circle rolling inside a larger circle (radius ratio ell : k+ell),
complexified to a plane algebraic curve of degree 2k.  When ell = k-1 the
real picture is symmetric about the horizontal axis; substituting w = y^2
folds the curve onto the upper half plane, and adding the horizontal line
itself yields a curve-plus-line arrangement whose diagram satisfies the
sufficiency hypotheses checked by ``check_theorem``.

This module traces that folded arrangement numerically and assembles its
``CurveDiagram``: the folded off-axis cusp pairs give cusp events, folded
node pairs give crossings, axis nodes become simple tangencies with the
line (intersection multiplicity 2), the single vertical tangency becomes
a transversal line crossing, and the on-axis cusp becomes a contact-order
3 crossing with the line.  Killing the squares of the line meridians in
the resulting Wirtinger presentation gives an orbifold group that is
compared, via invariant profiles, against the semidirect product of the
(2k-1)-gon Artin group with Z/2 (``ngon_semidirect``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, cosh, gcd, log2, pi, sin, sinh

from .diagram import CurveDiagram, Crossing, Cusp, Event, check_theorem
from .fpgroups import Presentation, Word, ngon_semidirect
from .genpres import wirtinger_presentation
from .profiles import DEFAULT_TARGETS, InvariantProfile, profile, profiles_equal


class TracingError(ValueError):
    """Numeric tracing failed: a tolerance, separation, census, or
    classification check did not come out as the closed-form counts
    predict."""


# ---------------------------------------------------------------------------
# parametrization and closed-form statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypoParams:
    k: int
    ell: int

    def __post_init__(self):
        if not 0 < self.ell < self.k:
            raise ValueError("need 0 < ell < k")
        if gcd(self.k, self.ell) != 1:
            raise ValueError("k and ell must be coprime")

    @property
    def n(self) -> int:
        return self.k + self.ell


def hypo_point(params: HypoParams, t: float) -> tuple[float, float]:
    """Point of the hypocycloid at parameter angle t (normalized so the
    curve is inscribed in the unit circle)."""
    k, l, n = params.k, params.ell, params.n
    return (
        (k * cos(l * t) + l * cos(k * t)) / n,
        (k * sin(l * t) - l * sin(k * t)) / n,
    )


@dataclass(frozen=True)
class HypoStats:
    degree: int
    cusps: int
    nodes: int
    real_nodes: int
    tangencies: int  # simple vertical tangencies of the projection
    identity_holds: bool  # ramification count 2(2k-1) - 2(k-1) - (k+ell) = k-ell

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "degree": self.degree,
            "cusps": self.cusps,
            "nodes": self.nodes,
            "real_nodes": self.real_nodes,
            "vertical_tangencies": self.tangencies,
            "ramification_identity": self.identity_holds,
        }


def hypo_stats(params: HypoParams) -> HypoStats:
    """Singularity counts of the degree-2k hypocycloid: k+ell cusps,
    (k+ell)(k-2) nodes of which (k+ell)(ell-1) are real, and k-ell simple
    vertical tangencies, balancing the ramification count of the
    2k-fold vertical projection."""
    k, l, n = params.k, params.ell, params.n
    identity = 2 * (2 * k - 1) - 2 * (k - 1) - n == k - l
    return HypoStats(2 * k, n, n * (k - 2), n * (l - 1), k - l, identity)


def _dx(params: HypoParams, t: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return -k * l * (sin(l * t) + sin(k * t)) / n


def _dy(params: HypoParams, t: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return k * l * (cos(l * t) - cos(k * t)) / n


def _ddx(params: HypoParams, t: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return -k * l * (l * cos(l * t) + k * cos(k * t)) / n


def _bisect(f, a: float, b: float) -> float:
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise TracingError("bisection bracket does not straddle a root")
    for _ in range(200):
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0 or (b - a) <= 1e-15 * max(1.0, abs(m)):
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)


@dataclass(frozen=True)
class CriticalParameters:
    cusp_angles: tuple[float, ...]  # the k+ell cusp parameters in [0, 2*pi)
    tangency_angle: float  # the single real vertical tangency, at pi
    axis_node_angles: tuple[float, ...]  # positive representatives in (0, pi)
    residuals: dict


def critical_parameters(params: HypoParams, tol: float = 1e-12) -> CriticalParameters:
    """Critical parameter angles for ell = k-1: the cusps at 2*pi*j/(k+ell),
    the vertical tangency at pi, and the k-2 axis-node angle pairs +-t
    (y(t) = 0), found by sign-change bisection."""
    if params.ell != params.k - 1:
        raise ValueError("critical_parameters requires ell = k-1")
    n = params.n
    cusps = tuple(2 * pi * j / n for j in range(n))
    residuals: dict = {}
    for j, t in enumerate(cusps):
        residuals["cusp_%d" % j] = max(abs(_dx(params, t)), abs(_dy(params, t)))
    residuals["tangency"] = max(abs(_dx(params, pi)), abs(_y(params, pi)))

    roots: list[float] = []
    m = 4096 * params.k
    lo, hi = 1e-6, pi - 1e-6
    prev_t, prev_y = lo, _y(params, lo)
    for i in range(1, m + 1):
        t = lo + (hi - lo) * i / m
        yt = _y(params, t)
        if prev_y == 0.0 or (prev_y > 0) != (yt > 0):
            roots.append(_bisect(lambda u: _y(params, u), prev_t, t))
        prev_t, prev_y = t, yt
    if len(roots) != params.k - 2:
        raise TracingError(
            "expected %d axis-node angles, found %d" % (params.k - 2, len(roots))
        )
    for i, r in enumerate(roots):
        residuals["axis_node_%d" % i] = abs(_y(params, r))

    bad = {name: r for name, r in residuals.items() if r > tol}
    if bad:
        raise TracingError("residuals above tolerance %g: %s" % (tol, bad))
    return CriticalParameters(cusps, pi, tuple(roots), residuals)


# ---------------------------------------------------------------------------
# folded trace: real arcs in w = y^2, plus the two imaginary-angle arcs
# ---------------------------------------------------------------------------

def _y(params: HypoParams, t: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return (k * sin(l * t) - l * sin(k * t)) / n


def _x(params: HypoParams, t: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return (k * cos(l * t) + l * cos(k * t)) / n


def _w(params: HypoParams, t: float) -> float:
    return _y(params, t) ** 2


# The two arcs with real x but imaginary y come from the angle substitutions
# t = i*s and t = pi + i*s; their w = y^2 values are negative, so they are
# the continuations of the folded curve below the horizontal line.

def _psi1_x(params: HypoParams, s: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return (k * cosh(l * s) + l * cosh(k * s)) / n


def _psi1_w(params: HypoParams, s: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return -(((k * sinh(l * s) - l * sinh(k * s)) / n) ** 2)


def _psi2_x(params: HypoParams, s: float) -> float:
    k, l, n = params.k, params.ell, params.n
    sign = 1.0 if k % 2 == 1 else -1.0
    return sign * (k * cosh(l * s) - l * cosh(k * s)) / n


def _psi2_w(params: HypoParams, s: float) -> float:
    k, l, n = params.k, params.ell, params.n
    return -(((k * sinh(l * s) + l * sinh(k * s)) / n) ** 2)


LINE = ("line",)
PSI1 = ("psi", 1)
PSI2 = ("psi", 2)


@dataclass(frozen=True)
class RawEvent:
    x: float
    w: float
    kind: str  # cusp | tacnode | crossing | transversal | inflection
    arcs: tuple  # the two arc ids forming the event's strand block
    branch_side: str | None = None  # cusps only
    contact_order: int | None = None  # line events only (measured)


@dataclass
class TracedCurve:
    params: HypoParams
    pieces: tuple[tuple[float, float], ...]  # x-monotone t-intervals of the fold
    transversal_x: float
    events: list[RawEvent]

    def census(self) -> dict:
        counts = {"cusp": 0, "tacnode": 0, "crossing": 0, "transversal": 0, "inflection": 0}
        for ev in self.events:
            counts[ev.kind] += 1
        return counts


def _piece_x_range(params: HypoParams, piece: tuple[float, float]) -> tuple[float, float]:
    a, b = piece
    xa, xb = _x(params, a), _x(params, b)
    return (min(xa, xb), max(xa, xb))


def _piece_t_at(params: HypoParams, piece: tuple[float, float], x0: float) -> float:
    return _bisect(lambda t: _x(params, t) - x0, piece[0], piece[1])


def _piece_w_at(params: HypoParams, piece: tuple[float, float], x0: float) -> float:
    return _w(params, _piece_t_at(params, piece, x0))


def _arc_s_bound(xfun, params: HypoParams, x0: float) -> float:
    s = 1.0
    while abs(xfun(params, s)) < abs(x0) + 1.0:
        s *= 2.0
        if s > 1e6:
            raise TracingError("imaginary arc bound search diverged")
    return s


def _psi_w_at(params: HypoParams, which: int, x0: float) -> float:
    xfun = _psi1_x if which == 1 else _psi2_x
    wfun = _psi1_w if which == 1 else _psi2_w
    hi = _arc_s_bound(xfun, params, x0)
    s = _bisect(lambda u: xfun(params, u) - x0, 0.0, hi)
    return wfun(params, s)


def _heights(tr: TracedCurve, x0: float) -> list[tuple[float, tuple]]:
    """All strand heights at the fiber over x0, top to bottom, as
    (w, arc id) pairs.  x0 must avoid event x-values."""
    p = tr.params
    out: list[tuple[float, tuple]] = [(0.0, LINE)]
    for i, piece in enumerate(tr.pieces):
        lo, hi = _piece_x_range(p, piece)
        if lo < x0 < hi:
            out.append((_piece_w_at(p, piece, x0), ("phi", i)))
    if x0 > 1.0:
        out.append((_psi_w_at(p, 1, x0), PSI1))
    xpi = tr.transversal_x
    on_psi2_side = x0 < xpi if p.k % 2 == 1 else x0 > xpi
    if on_psi2_side:
        out.append((_psi_w_at(p, 2, x0), PSI2))
    out.sort(key=lambda pair: -pair[0])
    return out


def _contact_order(sample, expected: int, label: str) -> int:
    """Vanishing order of |w| ~ C*h^p measured from samples at scales h,
    h/2, h/4; the estimates must converge on the expected integer."""
    h = 1e-4
    vals = [abs(sample(h / 2 ** i)) for i in range(3)]
    if min(vals) <= 0.0:
        raise TracingError("degenerate contact samples at %s" % label)
    p1 = log2(vals[0] / vals[1])
    p2 = log2(vals[1] / vals[2])
    if abs(p2 - expected) > 0.02 or abs(p2 - expected) > abs(p1 - expected) + 1e-6:
        raise TracingError(
            "contact order at %s measured %.6f (then %.6f), expected %d"
            % (label, p1, p2, expected)
        )
    return expected


def trace_quotient(k: int) -> TracedCurve:
    """Trace the folded quotient of the (k, k-1) hypocycloid plus the
    horizontal line and classify all of its diagram events, checking the
    detected census against the closed-form counts."""
    if k < 2:
        raise ValueError("need k >= 2")
    params = HypoParams(k, k - 1)
    n = params.n
    crit = critical_parameters(params)
    cusp_ts = [2 * pi * j / n for j in range(1, k)]  # folded representatives
    boundaries = [0.0] + cusp_ts + [pi]
    pieces = tuple(
        (boundaries[i], boundaries[i + 1]) for i in range(len(boundaries) - 1)
    )
    xpi = _x(params, pi)
    tr = TracedCurve(params, pieces, xpi, [])

    # folded cusps: one per off-axis mirror pair
    for j, t in enumerate(cusp_ts):
        side = "right" if _ddx(params, t) > 0 else "left"
        tr.events.append(
            RawEvent(_x(params, t), _w(params, t), "cusp",
                     (("phi", j), ("phi", j + 1)), branch_side=side)
        )

    # axis nodes fold to simple tangencies between the curve and the line
    for t in crit.axis_node_angles:
        piece = next(
            ("phi", i) for i, (a, b) in enumerate(pieces) if a < t < b
        )
        x0 = _x(params, t)
        order = _contact_order(
            lambda h: _piece_w_at(params, pieces[piece[1]], x0 + h)
            if _piece_x_range(params, pieces[piece[1]])[1] > x0 + h
            else _piece_w_at(params, pieces[piece[1]], x0 - h),
            2, "tacnode x=%.6f" % x0,
        )
        tr.events.append(RawEvent(x0, 0.0, "tacnode", (piece, LINE), contact_order=order))

    # the vertical tangency folds to a transversal line crossing
    last = len(pieces) - 1
    phi_side_right = _ddx(params, pi) > 0  # side where the real fold approaches
    order = _contact_order(
        lambda h: _piece_w_at(params, pieces[last], xpi + (h if phi_side_right else -h)),
        1, "transversal x=%.6f" % xpi,
    )
    tr.events.append(
        RawEvent(xpi, 0.0, "transversal",
                 (("phi", last) if phi_side_right else PSI2, LINE),
                 contact_order=order)
    )

    # the on-axis cusp folds to a contact-order-3 line crossing at x = 1
    order = _contact_order(
        lambda h: _piece_w_at(params, pieces[0], 1.0 - h),
        3, "inflection x=1",
    )
    tr.events.append(RawEvent(1.0, 0.0, "inflection", (("phi", 0), LINE), contact_order=order))

    # folded node pairs: transversal self-intersections of the fold
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            lo_i, hi_i = _piece_x_range(params, pieces[i])
            lo_j, hi_j = _piece_x_range(params, pieces[j])
            lo, hi = max(lo_i, lo_j), min(hi_i, hi_j)
            margin = 1e-7 + 1e-9 * (hi - lo)
            lo, hi = lo + margin, hi - margin
            if hi <= lo:
                continue
            samples = 2500
            delta = lambda x: _piece_w_at(params, pieces[i], x) - _piece_w_at(
                params, pieces[j], x
            )
            prev_x, prev_d = lo, delta(lo)
            for sidx in range(1, samples + 1):
                x = lo + (hi - lo) * sidx / samples
                d = delta(x)
                if prev_d == 0.0 or (prev_d > 0) != (d > 0):
                    xc = _bisect(delta, prev_x, x)
                    tr.events.append(
                        RawEvent(xc, _piece_w_at(params, pieces[i], xc), "crossing",
                                 (("phi", i), ("phi", j)))
                    )
                prev_x, prev_d = x, d

    expected = {
        "cusp": k - 1,
        "tacnode": k - 2,
        "crossing": (n - 1) * (k - 2) // 2,
        "transversal": 1,
        "inflection": 1,
    }
    if tr.census() != expected:
        raise TracingError("event census mismatch: found %s, expected %s" % (tr.census(), expected))
    return tr


# ---------------------------------------------------------------------------
# diagram assembly
# ---------------------------------------------------------------------------

_SNAP = 10 ** 7


def _snap(x: float) -> Fraction:
    return Fraction(round(x * _SNAP), _SNAP)


_KIND_BUILDERS = {
    "cusp": lambda ev: Cusp(2, ev.branch_side),
    "tacnode": lambda ev: Crossing(3),
    "crossing": lambda ev: Crossing(1),
    "transversal": lambda ev: Crossing(1),
    "inflection": lambda ev: Crossing(5),
}


def quotient_diagram(k: int, name: str | None = None) -> CurveDiagram:
    """Diagram of the folded (k, k-1) hypocycloid together with the
    horizontal line, with L placed in the first gap right of the
    transversal crossing.  The result is verified against the theorem
    hypotheses before being returned."""
    tr = trace_quotient(k)
    params = tr.params
    raw = sorted(tr.events, key=lambda ev: ev.x)
    xs = [ev.x for ev in raw]
    for a, b in zip(xs, xs[1:]):
        if b - a < 1e-6:
            raise TracingError("event separation below tolerance: %.3e" % (b - a))
    nxt = min(x for x in xs if x > tr.transversal_x)
    l_float = 0.5 * (tr.transversal_x + nxt)

    events: list[Event] = []
    for ev in raw:
        gaps = [abs(ev.x - other.x) for other in raw if other is not ev]
        delta = min(gaps + [abs(ev.x - l_float)]) / 4.0
        if ev.kind == "cusp":
            block_sign = 1.0 if ev.branch_side == "right" else -1.0
        else:
            block_sign = 1.0 if ev.x < l_float else -1.0
        hs = _heights(tr, ev.x + block_sign * delta)
        ranks = {arc: r for r, (_, arc) in enumerate(hs, start=1)}
        try:
            r1, r2 = sorted(ranks[a] for a in ev.arcs)
        except KeyError:
            raise TracingError("block strand missing beside %s x=%.6f" % (ev.kind, ev.x))
        if r2 != r1 + 1:
            raise TracingError(
                "block strands not adjacent beside %s x=%.6f" % (ev.kind, ev.x)
            )
        events.append(Event(_snap(ev.x), _KIND_BUILDERS[ev.kind](ev), r1))

    snapped = [e.x for e in events] + [_snap(l_float)]
    if len(set(snapped)) != len(snapped):
        raise TracingError("x-coordinate snapping collided")

    fiber = _heights(tr, l_float)
    if len(fiber) != k + 1:
        raise TracingError(
            "strand-count mismatch at L: found %d, expected %d" % (len(fiber), k + 1)
        )
    components = tuple("l" if arc == LINE else "c" for _, arc in fiber)
    diagram = CurveDiagram(
        k + 1, _snap(l_float), components, tuple(events),
        name or "hypocycloid-quotient-k%d" % k,
    )
    report = check_theorem(diagram)
    if not report.verified:
        raise TracingError(
            "traced diagram failed the theorem check: %s" % "; ".join(report.violations)
        )
    return diagram


# ---------------------------------------------------------------------------
# orbifold quotient group and the polygon Artin comparison
# ---------------------------------------------------------------------------

def orbifold_presentation(k: int) -> Presentation:
    """Wirtinger presentation of the folded quotient with the square of
    every line-component generator killed (the orbifold group of the
    double cover branched along the line)."""
    wr = wirtinger_presentation(quotient_diagram(k))
    relators = list(wr.presentation.relators)
    for idx, gen_name in enumerate(wr.presentation.generators, start=1):
        if wr.generator_components.get(gen_name) == "l":
            relators.append(Word.gen(idx) ** 2)
    return Presentation(wr.presentation.generators, tuple(relators))


@dataclass
class HypoComparison:
    k: int
    n: int
    equal: bool
    profile_left: InvariantProfile  # orbifold group of the traced quotient
    profile_right: InvariantProfile  # (2k-1)-gon Artin group semidirect Z/2
    note: str

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "k": self.k,
            "N": self.n,
            "equal": self.equal,
            "profile_left": self.profile_left.to_json(),
            "profile_right": self.profile_right.to_json(),
            "note": self.note,
        }


def verify_case(k: int, targets: tuple[str, ...] = DEFAULT_TARGETS) -> HypoComparison:
    """Compare the traced orbifold group against the polygon Artin
    semidirect product by invariant profiles."""
    left = profile(orbifold_presentation(k), targets)
    right = profile(ngon_semidirect(k), targets)
    return HypoComparison(
        k, 2 * k - 1, profiles_equal(left, right), left, right,
        "profile equality (abelianization and finite homomorphism counts) is "
        "a necessary condition for isomorphism, not an isomorphism certificate",
    )
