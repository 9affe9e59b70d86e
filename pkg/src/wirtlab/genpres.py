"""Group presentations from curve diagrams.

Four constructions are provided:

* :func:`wirtinger_presentation` — generators are the diagram edges (with
  vertical-tangency identifications), relations come from each vertex;
* :func:`zvk_presentation` together with :func:`diagram_braid_monodromy` —
  the fiber-meridian presentation obtained by transporting local braids of
  the projection's critical points back to the base line;
* :func:`edge_meridian_words` — the meridian word in the fiber free group
  carried by every edge during the outward sweep;
* :func:`extended_wirtinger` — the variant that stays correct when the
  candidate region must contain obstruction points, by conjugating the
  far-side generator of each affected vertex with loops around the
  obstruction points crossed on the way out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import Braid, braid_act, local_braid
from .diagram import (
    Crossing,
    CurveDiagram,
    Cusp,
    DiagramError,
    EventRecord,
    Ordinary,
    SweepResult,
    Tangency,
    UnionFind,
    check_theorem,
    derive_edges,
    sweep_ranks,
    validate_wirtinger_type,
)
from .fpgroups import Presentation, commutator
from .words import Word, alternating


class UnsupportedConfiguration(DiagramError):
    """The diagram mixes obstruction points with vertex types for which no
    conjugation recipe is implemented (only double points and tangencies
    may sit beyond an obstruction point)."""


# ---------------------------------------------------------------------------
# generator bookkeeping
# ---------------------------------------------------------------------------

@dataclass
class GeneratorMap:
    names: tuple[str, ...]  # generator names, index order
    edge_gen: dict  # extended edge id -> generator index (1-based)

    def word(self, edge: int) -> Word:
        return Word.gen(self.edge_gen[edge])


def _build_generators(sweep: SweepResult, merges) -> GeneratorMap:
    uf = UnionFind()
    for e in range(1, sweep.edge_count + 1):
        uf.add(e)
    for a, b in merges:
        uf.union(a, b)
    classes = sorted(
        (min(members), tuple(sorted(members)))
        for members in uf.classes().values()
    )
    index_of_root = {}
    for i, (_, members) in enumerate(classes, start=1):
        for e in members:
            index_of_root[e] = i
    names = tuple("x%d" % i for i in range(1, len(classes) + 1))
    return GeneratorMap(names, index_of_root)


def _require_valid(diagram: CurveDiagram) -> None:
    report = validate_wirtinger_type(diagram)
    if not report.ok:
        raise DiagramError(
            "invalid diagram: " + "; ".join(report.violations)
        )


def _block_side_edges(rec: EventRecord) -> tuple[int, ...]:
    return rec.far_edges if rec.action == "birth" else rec.near_edges


# ---------------------------------------------------------------------------
# Wirtinger presentation
# ---------------------------------------------------------------------------

@dataclass
class WirtingerResult:
    presentation: Presentation
    diagram: CurveDiagram
    sweep: SweepResult
    gens: GeneratorMap
    fiber_generators: tuple[str, ...]  # generator name per rank, top to bottom
    generator_components: dict  # generator name -> component name or None


def _vertex_relators(rec: EventRecord, gens: GeneratorMap) -> list[Word]:
    """Relators contributed by one vertex, in terms of edge generators.
    x-side = the block edges on the L side (far side for vertices whose
    branches point away); x1 is the topmost x-edge."""
    kind = rec.event.kind
    if isinstance(kind, Tangency):
        return []  # handled by generator identification
    x = [gens.word(e) for e in _block_side_edges(rec)]
    relators: list[Word] = []
    if isinstance(kind, Cusp):
        m = kind.m
        relators.append(
            alternating(x[0], x[1], m + 1) * alternating(x[1], x[0], m + 1).inverse()
        )
    elif isinstance(kind, Crossing):
        m = kind.m
        relators.append(
            alternating(x[0], x[1], m + 1) * alternating(x[1], x[0], m + 1).inverse()
        )
        far = [gens.word(e) for e in rec.far_edges]
        # the far edge continuing branch i (top-left joins top-right for
        # m = 4k-1, bottom-right for m = 4k+1)
        if m % 4 == 1:
            y = [far[1], far[0]]
            k = (m - 1) // 4
        else:
            y = [far[0], far[1]]
            k = (m + 1) // 4
        conj = (x[1] * x[0]) ** k
        for i in (0, 1):
            relators.append(y[i] * (x[i].conjugated_by(conj)).inverse())
    elif isinstance(kind, Ordinary):
        m = kind.m
        xbar = [Word.identity()]
        for j in range(m):
            xbar.append(x[j] * xbar[j])  # xbar_k = x_k ... x_1
        for j in range(1, m + 1):
            relators.append(commutator(xbar[m], x[j - 1]))
        far = [gens.word(e) for e in rec.far_edges]
        for j in range(1, m + 1):
            y_j = far[m - j]  # far side reverses the block
            relators.append(y_j * (x[j - 1].conjugated_by(xbar[j - 1])).inverse())
    return [r for r in relators if r]


def wirtinger_presentation(diagram: CurveDiagram) -> WirtingerResult:
    _require_valid(diagram)
    sw = sweep_ranks(diagram)
    gens = _build_generators(sw, sw.tangency_merges)
    relators: list[Word] = []
    for rec in sw.records:
        relators.extend(_vertex_relators(rec, gens))
    pres = Presentation(gens.names, tuple(relators))
    fiber = tuple(gens.names[gens.edge_gen[e] - 1] for e in sw.fiber_edges)
    complex_ = derive_edges(diagram, sw)
    gen_comp: dict = {}
    for e in range(1, sw.edge_count + 1):
        name = gens.names[gens.edge_gen[e] - 1]
        gen_comp.setdefault(name, complex_.edge_component[e])
    return WirtingerResult(pres, diagram, sw, gens, fiber, gen_comp)


def projective_closure(p: Presentation, fiber: tuple[str, ...] | None = None) -> Presentation:
    """Append the big-loop relator: the product of the fiber generators
    from bottom to top equals 1.  ``fiber`` lists generator names from top
    to bottom; by default all generators are taken in index order (the
    fiber-meridian case)."""
    names = tuple(fiber) if fiber is not None else p.generators
    index = {n: i + 1 for i, n in enumerate(p.generators)}
    w = Word.identity()
    for n in names:  # mu_d * ... * mu_1
        w = Word.gen(index[n]) * w
    return p.add_relators([w])


# ---------------------------------------------------------------------------
# sweep of meridian words and braid monodromy
# ---------------------------------------------------------------------------

def _half_local(kind) -> Braid:
    if isinstance(kind, Ordinary):
        return local_braid("ordinary", kind.m, half=True)
    if isinstance(kind, Crossing):
        return local_braid("A", kind.m, half=True)
    raise AssertionError("half braid requested for a one-sided vertex")


def edge_meridian_words(diagram: CurveDiagram, sweep: SweepResult | None = None) -> dict:
    """Meridian word (in the free group on the d fiber meridians, mu_1 the
    topmost) carried by each extended edge.  Only defined when every
    one-sided vertex points toward L, so that the outward sweep never
    creates strands."""
    _require_valid(diagram)
    sw = sweep if sweep is not None else sweep_ranks(diagram)
    words: dict[int, Word] = {}
    for rank, e in enumerate(sw.fiber_edges, start=1):
        words[e] = Word.gen(rank)
    for rec in sw.records:
        if rec.action == "birth":
            raise DiagramError(
                "meridian sweep undefined: %s points away from L" % rec.label()
            )
    for side in ("left", "right"):
        for event in diagram.events_on(side):
            rec = sw.record_for(event)
            if rec.action != "through":
                continue
            half_inv = _half_local(event.kind).inverse()
            block = [words[e] for e in rec.near_edges]
            images = {i + 1: block[i] for i in range(len(block))}
            for pos, e in enumerate(rec.far_edges, start=1):
                local = braid_act(Word.gen(pos), half_inv)
                words[e] = local.substitute(images)
    return words


@dataclass
class MonodromyDatum:
    event_index: int
    kind: str  # ordinary | crossing | cusp | tangency
    branches: int  # m_j: number of local strands (m for ordinary, else 2)
    position: int  # topmost global fiber position of the block
    delta: Braid  # full local braid, embedded on d strands
    eta: Braid  # transport braid from the base fiber to the event

    def local_exponent(self) -> int:
        return self.branches


def _full_local(kind) -> Braid:
    if isinstance(kind, Ordinary):
        return local_braid("ordinary", kind.m)
    if isinstance(kind, Tangency):
        return local_braid("A", 0)
    return local_braid("A", kind.m)


def diagram_braid_monodromy(diagram: CurveDiagram) -> list[MonodromyDatum]:
    """One datum per critical point of the projection, sweeping outward on
    both sides.  The transport eta composes the inverse half local braids
    of the two-sided vertices crossed between L and the event; one-sided
    vertices leave the surviving meridians untouched, and their strand
    pair keeps its fiber positions (the pair moves off the real plane but
    stays in the complex fiber)."""
    report = check_theorem(diagram)
    if not report.verified:
        raise DiagramError(
            "diagram not verified: " + "; ".join(report.violations)
        )
    d = diagram.d
    sw = sweep_ranks(diagram)
    data: dict[int, MonodromyDatum] = {}
    for side in ("left", "right"):
        positions = list(range(1, d + 1))  # fiber position of each live strand
        eta = Braid.identity(d)
        for event in diagram.events_on(side):
            rec = sw.record_for(event)
            size = event.kind.size
            block = positions[rec.top - 1: rec.top - 1 + size]
            if block != list(range(block[0], block[0] + size)):
                raise UnsupportedConfiguration(
                    "block of %s occupies non-adjacent fiber positions %s"
                    % (rec.label(), block)
                )
            delta = _full_local(event.kind).embedded(block[0], d)
            data[rec.index] = MonodromyDatum(
                rec.index,
                type(event.kind).__name__.lower(),
                size,
                block[0],
                delta,
                eta,
            )
            if rec.action == "through":
                eta = eta * _half_local(event.kind).embedded(block[0], d).inverse()
            elif rec.action == "death":
                del positions[rec.top - 1: rec.top - 1 + size]
    return [data[i] for i in range(len(diagram.events))]


def zvk_presentation(d: int, data: list[MonodromyDatum]) -> Presentation:
    """Fiber-meridian presentation: one relator per local strand but the
    last, for each critical point, transported by eta."""
    names = tuple("mu%d" % i for i in range(1, d + 1))
    relators: list[Word] = []
    for datum in data:
        for i in range(datum.branches - 1):
            mu = Word.gen(datum.position + i)
            lhs = braid_act(mu, datum.delta * datum.eta)
            rhs = braid_act(mu, datum.eta)
            rel = lhs * rhs.inverse()
            if rel:
                relators.append(rel)
    return Presentation(names, tuple(relators))


# ---------------------------------------------------------------------------
# extended method
# ---------------------------------------------------------------------------

@dataclass
class ExtendedResult:
    presentation: Presentation
    diagram: CurveDiagram
    sweep: SweepResult
    gens: GeneratorMap
    fiber_generators: tuple[str, ...]
    passed: dict  # event index -> list of passed obstruction event indices


def _passed_obstructions(diagram: CurveDiagram, sw: SweepResult, rec: EventRecord) -> list[EventRecord]:
    """One-sided vertices strictly between L and the given event whose
    strand pair sits strictly inside the event's strand span, ordered from
    L outward.  Loops reaching the event must travel around their
    obstruction points."""
    side = rec.side
    out = []
    for q in diagram.events_on(side):
        if q is rec.event:
            break
        if not isinstance(q.kind, (Cusp, Tangency)):
            continue
        qrec = sw.record_for(q)
        iv = next(
            i for i in sw.intervals[side] if i.outer_x == q.x
        )
        try:
            p_pos = sorted(
                iv.strands.index(tok) + 1 for tok in rec.block_strands
            )
        except ValueError:
            continue  # the event's strands do not reach that far inward
        q_lo, q_hi = qrec.top, qrec.top + 1
        if p_pos[0] < q_lo and q_hi < p_pos[-1]:
            out.append(qrec)
    return out


def _obstruction_loop(qrec: EventRecord, gens: GeneratorMap) -> Word:
    """Counterclockwise loop around the obstruction point of a one-sided
    vertex, in terms of the vertex's own block-side edge generators."""
    a, b = (gens.word(e) for e in _block_side_edges(qrec))
    kind = qrec.event.kind
    if isinstance(kind, Tangency):
        y1 = a
    else:
        twist = Braid.sigma(2, 1) ** (kind.m // 2)
        y1 = braid_act(Word.gen(1), twist.inverse()).substitute({1: a, 2: b})
    return y1 if kind.branch_side == "left" else y1.inverse()


def extended_wirtinger(diagram: CurveDiagram) -> ExtendedResult:
    _require_valid(diagram)
    sw = sweep_ranks(diagram)
    passed: dict[int, list[EventRecord]] = {}
    for rec in sw.records:
        passed[rec.index] = _passed_obstructions(diagram, sw, rec)

    # tangencies identify their two edges only when no obstruction point
    # stands between them and L
    merges = []
    for rec in sw.records:
        if isinstance(rec.event.kind, Tangency) and not passed[rec.index]:
            merges.append(tuple(_block_side_edges(rec)))
    gens = _build_generators(sw, merges)

    relators: list[Word] = []
    for rec in sw.records:
        kind = rec.event.kind
        crossed = passed[rec.index]
        if not crossed:
            relators.extend(_vertex_relators(rec, gens))
            continue
        if isinstance(kind, (Ordinary, Crossing)):
            raise UnsupportedConfiguration(
                "%s lies beyond an obstruction point; only one-sided "
                "vertices are supported there" % rec.label()
            )
        z = Word.identity()
        for qrec in crossed:
            z = z * _obstruction_loop(qrec, gens)
        conj = z if rec.side == "left" else z.inverse()
        a, b = (gens.word(e) for e in _block_side_edges(rec))
        b_hat = b.conjugated_by(conj.inverse())  # conj * b * conj^-1
        if isinstance(kind, Tangency):
            rel = a * b_hat.inverse()
        else:
            m = kind.m
            rel = (
                alternating(a, b_hat, m + 1)
                * alternating(b_hat, a, m + 1).inverse()
            )
        if rel:
            relators.append(rel)

    pres = Presentation(gens.names, tuple(relators))
    fiber = tuple(gens.names[gens.edge_gen[e] - 1] for e in sw.fiber_edges)
    return ExtendedResult(
        pres,
        diagram,
        sw,
        gens,
        fiber,
        {i: [q.index for q in qs] for i, qs in passed.items()},
    )
