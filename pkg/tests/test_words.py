import random

from wirtlab.words import Word, alternating, format_word, free_reduce


def random_word(rng, d, length):
    letters = [(rng.randint(1, d), rng.choice((1, -1))) for _ in range(length)]
    return Word(letters)


def test_free_reduction_cancels_inverse_pairs():
    w = Word([(1, 1), (2, 1), (2, -1), (1, -1)])
    assert w == Word.identity()
    assert not w


def test_group_laws_hold_on_random_words():
    rng = random.Random(20240817)
    for _ in range(300):
        a = random_word(rng, 4, rng.randint(0, 8))
        b = random_word(rng, 4, rng.randint(0, 8))
        c = random_word(rng, 4, rng.randint(0, 8))
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == Word.identity()
        assert a.inverse().inverse() == a
        assert (a * b).inverse() == b.inverse() * a.inverse()


def test_powers_and_conjugation():
    x = Word.gen(1)
    y = Word.gen(2)
    assert x ** 3 == Word([(1, 1)] * 3)
    assert x ** -2 == (x ** 2).inverse()
    assert x ** 0 == Word.identity()
    assert x.conjugated_by(y) == y.inverse() * x * y


def test_substitute_is_a_homomorphism():
    rng = random.Random(7)
    images = {1: Word([(2, 1), (3, -1)]), 2: Word.gen(3), 3: Word([(1, -1)])}
    for _ in range(100):
        a = random_word(rng, 3, 6)
        b = random_word(rng, 3, 6)
        assert (a * b).substitute(images) == a.substitute(images) * b.substitute(images)
        assert a.inverse().substitute(images) == a.substitute(images).inverse()


def test_cyclic_reduction_strips_conjugating_prefix():
    x, y = Word.gen(1), Word.gen(2)
    w = (x * y * x.inverse()).cyclically_reduced()
    assert w == y


def test_alternating_products():
    x, y = Word.gen(1), Word.gen(2)
    assert alternating(x, y, 3) == x * y * x
    assert alternating(y, x, 4) == y * x * y * x


def test_exponent_sum_and_max_generator():
    w = Word([(3, 1), (1, -1), (3, 1), (1, 1)])
    assert w.exponent_sum(3) == 2
    assert w.exponent_sum(1) == 0
    assert w.max_generator() == 3


def test_format_word_uses_names():
    w = Word([(1, 1), (2, -1)])
    assert format_word(w, ["a", "b"]) == "a*b^-1"


def test_free_reduce_function_matches_word_constructor():
    letters = [(1, 1), (1, 1), (1, -1), (2, -1), (2, 1), (1, -1)]
    assert free_reduce(letters) == tuple(Word(letters))
