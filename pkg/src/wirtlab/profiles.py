"""Invariant profiles: abelianisation plus homomorphism counts.

Two presentations with different profiles present non-isomorphic groups;
equal profiles are strong (but not conclusive) evidence of isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbelianInvariants, abelianization
from .fpgroups import Presentation, tietze_simplify
from .homcount import FiniteGroupTable, count_homs, symmetric_group

DEFAULT_TARGETS = ("S3", "S4")


@dataclass(frozen=True)
class InvariantProfile:
    abelian: AbelianInvariants
    hom_counts: tuple[tuple[str, int], ...]

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "abelian": {
                "free_rank": self.abelian.free_rank,
                "torsion": list(self.abelian.torsion),
            },
            "hom_counts": dict(self.hom_counts),
        }


def _target_table(name: str) -> FiniteGroupTable:
    if name in ("S2", "S3", "S4", "S5"):
        return symmetric_group(int(name[1]))
    raise ValueError("unknown target group %r" % name)


def profile(
    p: Presentation,
    targets: tuple[str, ...] = DEFAULT_TARGETS,
    simplify: bool = True,
    bound: int | None = None,
) -> InvariantProfile:
    """Compute the invariant profile, Tietze-simplifying first by default.

    S5 is deliberately not a default target (6^5 times slower); pass
    ``targets=("S3", "S4", "S5")`` to opt in.
    """
    q = tietze_simplify(p)[0] if simplify else p
    counts = tuple(
        (name, count_homs(q, _target_table(name), bound=bound)) for name in targets
    )
    return InvariantProfile(abelianization(q), counts)


def profiles_equal(a: InvariantProfile, b: InvariantProfile) -> bool:
    return a.abelian == b.abelian and dict(a.hom_counts) == dict(b.hom_counts)
