"""End-to-end acceptance suite.

Each test covers one acceptance criterion and emits a single
"CRITERION n: PASS" line on success (visible with -s; with -v the pytest
status line itself serves as the pass/fail record, one line per criterion).
"""

import math
import random
from math import gcd

from wirtlab.abelian import abelianization
from wirtlab.braids import Braid, braid_act, local_braid
from wirtlab.diagram import (
    Crossing,
    Cusp,
    auto_region_B,
    check_connectivity,
    check_facing,
    check_theorem,
)
from wirtlab.fpgroups import (
    Presentation,
    artin_from_graph,
    braid_relator,
    commutator,
    ngon_semidirect,
    tietze_simplify,
)
from wirtlab.genpres import (
    diagram_braid_monodromy,
    extended_wirtinger,
    wirtinger_presentation,
    zvk_presentation,
)
from wirtlab.homcount import count_homs, symmetric_group
from wirtlab.hypocycloid import (
    HypoParams,
    critical_parameters,
    hypo_stats,
    orbifold_presentation,
    quotient_diagram,
    verify_case,
)
from wirtlab.profiles import profile, profiles_equal
from wirtlab.words import Word, alternating
from tests.conftest import all_corpus_stems, load


def cyclic_canonical(w: Word) -> tuple:
    w = w.cyclically_reduced()
    letters = tuple(w)
    if not letters:
        return ()
    reps = []
    for word in (letters, tuple(w.inverse())):
        for i in range(len(word)):
            reps.append(word[i:] + word[:i])
    return min(reps)


def canonical_relators(p: Presentation):
    return sorted(cyclic_canonical(r) for r in p.relators if r)


def done(n: int) -> None:
    print("CRITERION %d: PASS" % n)


def test_criterion_01_braid_action_laws():
    rng = random.Random(0xC0FFEE)

    def random_word(d, length):
        return Word([(rng.randint(1, d), rng.choice((1, -1))) for _ in range(length)])

    def random_braid(n, length):
        return Braid(n, [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)])

    for _ in range(1000):
        d = rng.randint(2, 6)
        w = random_word(d, rng.randint(0, 10))
        a = random_braid(d, rng.randint(0, 8))
        b = random_braid(d, rng.randint(0, 8))
        # right-action law
        assert braid_act(braid_act(w, a), b) == braid_act(w, a * b)
        # braid-relation invariance
        if d >= 3:
            i = rng.randint(1, d - 2)
            lhs = Braid.sigma(d, i) * Braid.sigma(d, i + 1) * Braid.sigma(d, i)
            rhs = Braid.sigma(d, i + 1) * Braid.sigma(d, i) * Braid.sigma(d, i + 1)
            assert braid_act(w, lhs) == braid_act(w, rhs)
        # the boundary word mu_d ... mu_1 is fixed
        boundary = Word([(i, 1) for i in range(d, 0, -1)])
        assert braid_act(boundary, a) == boundary
    done(1)


def test_criterion_02_local_relation_table():
    x1, x2 = Word.gen(1), Word.gen(2)
    expected = {
        0: cyclic_canonical(x1 * x2.inverse()),
        1: cyclic_canonical(commutator(x1, x2)),
        2: cyclic_canonical(braid_relator(x1, x2)),
    }
    for m, want in expected.items():
        beta = local_braid("A", m)
        got = {
            cyclic_canonical((braid_act(g, beta) * g.inverse()))
            for g in (x1, x2)
            if (braid_act(g, beta) * g.inverse()).cyclically_reduced()
        }
        assert got == {want}, (m, got, want)
    done(2)


def test_criterion_03_nodal_cubic():
    res = wirtinger_presentation(load("nodal_cubic"))
    q, transcript = tietze_simplify(res.presentation)
    assert transcript.kinds() <= {"I", "IIa"}
    assert len(q.generators) == 1 and not q.relators
    ab = abelianization(res.presentation)
    assert (ab.free_rank, ab.torsion) == (1, ())
    assert count_homs(res.presentation, symmetric_group(3)) == 6
    assert count_homs(res.presentation, symmetric_group(4)) == 24
    done(3)


def test_criterion_04_deltoid_is_the_triangle_artin_group():
    res = wirtinger_presentation(load("deltoid"))
    triangle = artin_from_graph(("a", "b", "c"), [("a", "b"), ("b", "c"), ("a", "c")])
    assert len(res.presentation.generators) == len(triangle.generators)
    # relator multisets agree up to renaming; the braid relator's canonical
    # form is symmetric under swapping its two letters, so generator-index
    # renaming reduces to multiset equality of canonical relators here
    assert canonical_relators(res.presentation) == canonical_relators(triangle)
    assert profiles_equal(profile(res.presentation), profile(triangle))
    done(4)


def test_criterion_05_parabola_with_two_tangent_lines():
    res = wirtinger_presentation(load("parabola_two_lines"))
    x, y, z = Word.gen(1), Word.gen(2), Word.gen(3)
    target = Presentation(
        ("x", "y", "z"),
        (
            commutator(x, y),
            alternating(y, z, 4) * alternating(z, y, 4).inverse(),
            alternating(x, z, 4) * alternating(z, x, 4).inverse(),
        ),
    )
    assert profiles_equal(profile(res.presentation), profile(target))
    done(5)


def test_criterion_06_counterexample_detection():
    facing = check_facing(load("cuspidal_cubic"))
    assert facing and all("away from L" in v for v in facing)
    assert any("cusp at x=0" in v for v in facing)

    for stem in ("cardioid", "concentric_circles"):
        region = auto_region_B(load(stem))
        assert not region.ok and region.blocked_faces, stem
        assert any("obstruction" in b for b in region.blocked_faces)

    conn = check_connectivity(load("smooth_cubic"))
    assert conn and any("never meets L" in v for v in conn)

    # the aggregated verdicts name the same violations
    assert any(v.startswith("facing:") for v in check_theorem(load("cuspidal_cubic")).violations)
    assert any(v.startswith("connectivity:") for v in check_theorem(load("smooth_cubic")).violations)
    done(6)


def test_criterion_07_extended_method():
    x1, x2 = Word.gen(1), Word.gen(2)
    cardioid_target = Presentation(
        ("x1", "x2"),
        (braid_relator(x1, x2), commutator(x1 * x1, x2)),
    )
    ext = extended_wirtinger(load("cardioid"))
    assert profiles_equal(profile(ext.presentation), profile(cardioid_target))

    circles = extended_wirtinger(load("concentric_circles"))
    free2 = Presentation(("a", "b"), ())
    prof = profile(circles.presentation)
    assert profiles_equal(prof, profile(free2))
    assert dict(prof.hom_counts)["S3"] == 36
    done(7)


def test_criterion_08_zvk_matches_wirtinger_on_verified_corpus():
    checked = 0
    for stem in all_corpus_stems():
        d = load(stem)
        if not check_theorem(d).verified:
            continue
        w = profile(wirtinger_presentation(d).presentation)
        z = profile(zvk_presentation(d.d, diagram_braid_monodromy(d)))
        assert profiles_equal(w, z), stem
        checked += 1
    assert checked == 5  # nodal cubic, parabola+lines, quotients k=2,3,4
    done(8)


def test_criterion_09_hypocycloid_statistics():
    for k in range(2, 13):
        for ell in range(1, k):
            if gcd(k, ell) != 1:
                continue
            n = k + ell
            s = hypo_stats(HypoParams(k, ell))
            assert s.degree == 2 * k
            assert s.cusps == n
            assert s.nodes == n * (k - 2)
            assert s.real_nodes == n * (ell - 1)
            assert s.tangencies == k - ell
            assert s.identity_holds
    for k in range(2, 13):
        crit = critical_parameters(HypoParams(k, k - 1))
        assert all(abs(r) < 1e-12 for r in crit.residuals.values()), k
    done(9)


def test_criterion_10_quotient_extraction():
    for k in (2, 3, 4):
        n = 2 * k - 1
        d = quotient_diagram(k)
        assert d.d == k + 1
        cusps = sum(1 for e in d.events if isinstance(e.kind, Cusp))
        tacnodes = sum(
            1 for e in d.events if isinstance(e.kind, Crossing) and e.kind.m == 3
        )
        nodes = sum(
            1 for e in d.events if isinstance(e.kind, Crossing) and e.kind.m == 1
        )
        contact3 = sum(
            1 for e in d.events if isinstance(e.kind, Crossing) and e.kind.m == 5
        )
        assert cusps == k - 1
        assert tacnodes == k - 2
        assert nodes == (n - 1) * (k - 2) // 2 + 1  # self-crossings + transversal
        assert contact3 == 1
        assert check_theorem(d).verified
    done(10)


def test_criterion_11_main_theorem_instances():
    for k in (2, 3, 4):
        result = verify_case(k)
        assert result.equal, (k, result.note)
        orb = orbifold_presentation(k)
        sd = ngon_semidirect(k)
        for p in (orb, sd):
            ab = abelianization(p)
            assert (ab.free_rank, ab.torsion) == (1, (2,)), (k, ab)
    done(11)


def test_criterion_12_tietze_safety_on_corpus():
    for stem in all_corpus_stems():
        p = wirtinger_presentation(load(stem)).presentation
        q, transcript = tietze_simplify(p, allow_iib=False)
        assert transcript.kinds() <= {"I", "IIa"}, stem
        assert profiles_equal(profile(p), profile(q)), stem
        assert abelianization(p) == abelianization(q), stem
    done(12)
