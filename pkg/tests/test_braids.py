import random

import pytest

from wirtlab.braids import Braid, braid_act, half_twist, local_braid
from wirtlab.words import Word, alternating


def random_braid(rng, n, length):
    return Braid(n, [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)])


def random_word(rng, d, length):
    return Word([(rng.randint(1, d), rng.choice((1, -1))) for _ in range(length)])


def test_generator_action_table():
    x1, x2, x3 = Word.gen(1), Word.gen(2), Word.gen(3)
    s1 = Braid.sigma(3, 1)
    assert braid_act(x1, s1) == x2
    assert braid_act(x2, s1) == x2 * x1 * x2.inverse()
    assert braid_act(x3, s1) == x3
    assert braid_act(x1, s1.inverse()) == x1.inverse() * x2 * x1
    assert braid_act(x2, s1.inverse()) == x1


def test_action_is_a_right_action():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 6)
        w = random_word(rng, n, rng.randint(0, 8))
        a = random_braid(rng, n, rng.randint(0, 6))
        b = random_braid(rng, n, rng.randint(0, 6))
        assert braid_act(braid_act(w, a), b) == braid_act(w, a * b)


def test_action_respects_braid_relations():
    rng = random.Random(23)
    for n in range(3, 6):
        for i in range(1, n - 1):
            lhs = Braid.sigma(n, i) * Braid.sigma(n, i + 1) * Braid.sigma(n, i)
            rhs = Braid.sigma(n, i + 1) * Braid.sigma(n, i) * Braid.sigma(n, i + 1)
            for _ in range(20):
                w = random_word(rng, n, 8)
                assert braid_act(w, lhs) == braid_act(w, rhs)
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                lhs = Braid.sigma(n, i) * Braid.sigma(n, j)
                rhs = Braid.sigma(n, j) * Braid.sigma(n, i)
                for _ in range(20):
                    w = random_word(rng, n, 8)
                    assert braid_act(w, lhs) == braid_act(w, rhs)


def test_action_fixes_descending_product():
    rng = random.Random(5)
    for n in range(2, 7):
        boundary = Word([(i, 1) for i in range(n, 0, -1)])
        for _ in range(50):
            b = random_braid(rng, n, rng.randint(0, 10))
            assert braid_act(boundary, b) == boundary


def test_braid_group_identities():
    b = Braid.sigma(4, 2)
    # braid words are not normalised, so check identities through the action
    w = Word([(1, 1), (3, -1), (2, 1)])
    assert braid_act(w, b * b.inverse()) == w
    assert braid_act(braid_act(w, b ** 3), b ** -3) == w
    # permutations compose consistently with braid multiplication
    rng = random.Random(3)
    for _ in range(50):
        a = random_braid(rng, 4, 5)
        c = random_braid(rng, 4, 5)
        pa, pc = a.permutation(), c.permutation()
        composed = tuple(pa[pc[i] - 1] for i in range(4))
        assert (a * c).permutation() == composed


def test_embedded_braid_shifts_strands():
    # embedded(offset, n) places the braid on strands offset..offset+m-1
    s = Braid.sigma(2, 1)
    e = s.embedded(2, 5)
    assert e.n == 5
    assert braid_act(Word.gen(2), e) == Word.gen(3)
    assert braid_act(Word.gen(1), e) == Word.gen(1)
    assert braid_act(Word.gen(4), e) == Word.gen(4)


def test_half_twist_squares_to_full_twist_action():
    # the full twist on m strands is central: it acts by conjugation by
    # the descending product, hence fixes it and conjugates each generator.
    for m in (2, 3, 4):
        full = local_braid("ordinary", m)
        boundary = Word([(i, 1) for i in range(m, 0, -1)])
        assert braid_act(boundary, full) == boundary
        for i in range(1, m + 1):
            img = braid_act(Word.gen(i), full)
            assert img == boundary * Word.gen(i) * boundary.inverse()


def test_local_braid_validation():
    with pytest.raises(ValueError):
        local_braid("A", -1)
    with pytest.raises(ValueError):
        local_braid("A", 2, half=True)
    with pytest.raises(ValueError):
        local_braid("ordinary", 1)
    with pytest.raises(ValueError):
        local_braid("nope", 2)
    assert local_braid("A", 3, half=True) ** 2 == local_braid("A", 3)
    assert half_twist(3) == Braid(3, [(1, 1), (2, 1), (1, 1)])


def cyclic_canonical(w: Word) -> tuple:
    """Least representative over cyclic rotations and inversion."""
    w = w.cyclically_reduced()
    letters = tuple(w)
    if not letters:
        return ()
    reps = []
    for word in (letters, tuple(w.inverse())):
        for i in range(len(word)):
            reps.append(word[i:] + word[:i])
    return min(reps)


def test_local_relator_table():
    # A_m local monodromy sigma^(m+1) on two strands yields, as reduced
    # relators x_i^beta * x_i^-1: identification (m=0), commutation (m=1),
    # and the braid relation (m=2).
    x1, x2 = Word.gen(1), Word.gen(2)
    expected = {
        0: cyclic_canonical(x1 * x2.inverse()),
        1: cyclic_canonical(x1 * x2 * x1.inverse() * x2.inverse()),
        2: cyclic_canonical(alternating(x1, x2, 3) * alternating(x2, x1, 3).inverse()),
    }
    for m, want in expected.items():
        beta = local_braid("A", m)
        got = set()
        for g in (x1, x2):
            rel = (braid_act(g, beta) * g.inverse()).cyclically_reduced()
            if rel:
                got.add(cyclic_canonical(rel))
        assert got == {want}, (m, got, want)
