"""Freely reduced words in a free group.

A word is a sequence of letters ``(i, e)`` where ``i >= 1`` indexes a
generator and ``e`` is ``+1`` or ``-1``.  Words are kept freely reduced at
all times: adjacent letters ``(i, e), (i, -e)`` cancel.  The empty word is
the identity.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Tuple

Letter = Tuple[int, int]


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent inverse pairs until no cancellation remains."""
    stack: list[Letter] = []
    for gen, exp in letters:
        if gen < 1:
            raise ValueError("generator indices start at 1, got %r" % gen)
        if exp not in (1, -1):
            raise ValueError("letter exponents must be +1 or -1, got %r" % exp)
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


class Word:
    """An immutable freely reduced word."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", free_reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @staticmethod
    def identity() -> "Word":
        return Word()

    @staticmethod
    def gen(i: int, exp: int = 1) -> "Word":
        """The word consisting of a single generator power ``x_i^exp``."""
        if exp == 0:
            return Word()
        letter = (i, 1 if exp > 0 else -1)
        return Word([letter] * abs(exp))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word([(g, -e) for g, e in reversed(self.letters)])

    def conjugated_by(self, w: "Word") -> "Word":
        """Return ``w^-1 * self * w``."""
        return w.inverse() * self * w

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def exponent_sum(self, i: int) -> int:
        return sum(e for g, e in self.letters if g == i)

    def substitute(self, images: dict[int, "Word"]) -> "Word":
        """Replace each generator by its image word (missing ones map to
        themselves)."""
        out: list[Letter] = []
        for g, e in self.letters:
            image = images.get(g)
            if image is None:
                out.append((g, e))
            elif e == 1:
                out.extend(image.letters)
            else:
                out.extend(image.inverse().letters)
        return Word(out)

    def cyclically_reduced(self) -> "Word":
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
            ls = ls[1:-1]
        return Word(ls)

    def __repr__(self) -> str:
        return "Word(%s)" % format_word(self)


def alternating(a: Word, b: Word, length: int) -> Word:
    """The alternating product ``a b a b ...`` with ``length`` factors."""
    out = Word()
    for i in range(length):
        out = out * (a if i % 2 == 0 else b)
    return out


def format_word(w: Word, names: list[str] | None = None) -> str:
    """Render a word like ``x1*x2^-1``; the empty word renders as ``1``."""
    if not w.letters:
        return "1"
    parts = []
    run_gen, run_exp = w.letters[0]
    count = run_exp
    for g, e in w.letters[1:]:
        if g == run_gen and (e > 0) == (count > 0):
            count += e
        else:
            parts.append((run_gen, count))
            run_gen, count = g, e
    parts.append((run_gen, count))
    texts = []
    for g, c in parts:
        name = names[g - 1] if names is not None else "x%d" % g
        texts.append(name if c == 1 else "%s^%d" % (name, c))
    return "*".join(texts)
