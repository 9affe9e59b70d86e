"""Counting homomorphisms into small finite groups by exhaustive search.

The count of homomorphisms from a finitely presented group into a fixed
finite group is a presentation-independent invariant, used here as a cheap
proxy for group isomorphism testing.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations

from .fpgroups import Presentation
from .words import Word

DEFAULT_HOM_BOUND = 10**8
HOM_BOUND_ENV = "WIRTLAB_HOM_BOUND"


class ResourceGuardError(RuntimeError):
    """Raised when a homomorphism count would exceed the search bound."""


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group as a multiplication table on element indices."""

    name: str
    size: int
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int = 0

    def __post_init__(self):
        for i in range(self.size):
            if self.mult[self.identity][i] != i or self.mult[i][self.identity] != i:
                raise ValueError("identity index is wrong")
            j = self.inverse[i]
            if self.mult[i][j] != self.identity:
                raise ValueError("inverse table is wrong")


def symmetric_group(n: int) -> FiniteGroupTable:
    """S_n for 2 <= n <= 5, with the identity permutation at index 0."""
    if not 2 <= n <= 5:
        raise ValueError("symmetric_group supports n = 2 .. 5")
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}

    def compose(p, q):  # (p then q) acting on points: (p*q)(x) = q(p(x))
        return tuple(q[p[x]] for x in range(n))

    mult = tuple(
        tuple(index[compose(p, q)] for q in elems) for p in elems
    )
    inverse = []
    for p in elems:
        inv = [0] * n
        for x in range(n):
            inv[p[x]] = x
        inverse.append(index[tuple(inv)])
    return FiniteGroupTable("S%d" % n, len(elems), mult, tuple(inverse))


def hom_bound() -> int:
    value = os.environ.get(HOM_BOUND_ENV)
    return int(value) if value else DEFAULT_HOM_BOUND


def _evaluate(word: Word, assign: list[int], table: FiniteGroupTable) -> int:
    acc = table.identity
    mult = table.mult
    inv = table.inverse
    for g, e in word.letters:
        x = assign[g - 1]
        if e == -1:
            x = inv[x]
        acc = mult[acc][x]
    return acc


def count_homs(p: Presentation, table: FiniteGroupTable, bound: int | None = None) -> int:
    """Number of homomorphisms from the presented group into the group.

    Exhaustive backtracking over generator images with relator pruning.
    Raises :class:`ResourceGuardError` when ``|G|^#generators`` exceeds the
    bound (``WIRTLAB_HOM_BOUND`` environment variable, default 1e8); callers
    should Tietze-simplify first.
    """
    if bound is None:
        bound = hom_bound()
    n = len(p.generators)
    if table.size**n > bound:
        raise ResourceGuardError(
            "search space %d^%d exceeds bound %d; simplify the presentation "
            "or raise %s" % (table.size, n, bound, HOM_BOUND_ENV)
        )
    if n == 0:
        return 1

    # Order generators so relators become fully assigned (and hence
    # checkable) as early as possible.
    supports = [frozenset(g for g, _ in r.letters) for r in p.relators]
    order: list[int] = []
    remaining = set(range(1, n + 1))
    while remaining:
        def score(g: int) -> tuple[int, int]:
            chosen = set(order) | {g}
            done = sum(1 for s in supports if s and s <= chosen)
            return (done, -g)

        best = max(remaining, key=score)
        order.append(best)
        remaining.discard(best)

    # relators checked at the depth where their last generator is assigned
    checks: list[list[Word]] = [[] for _ in range(n + 1)]
    for r, s in zip(p.relators, supports):
        if not s:
            if r.letters:  # non-trivial relator on no generators: impossible
                return 0
            continue
        depth = max(order.index(g) for g in s) + 1
        checks[depth].append(r)

    assign = [0] * n
    identity = table.identity
    size = table.size
    total = 0

    def consistent(depth: int) -> bool:
        for r in checks[depth]:
            if _evaluate(r, assign, table) != identity:
                return False
        return True

    depth = 0
    candidate = [0] * (n + 1)
    while depth >= 0:
        if depth == n:
            total += 1
            depth -= 1
            continue
        c = candidate[depth]
        if c >= size:
            candidate[depth] = 0
            depth -= 1
            continue
        candidate[depth] = c + 1
        assign[order[depth] - 1] = c
        if consistent(depth + 1):
            depth += 1
            candidate[depth] = 0
    return total
