"""Splitting-type arithmetic for vector bundles on the projective line.

A splitting type is a multiset of integer degrees (d1, ..., dr) standing for
O(d1) + ... + O(dr).  Cohomology on the line is elementary: h0(O(d)) =
max(d+1, 0) and h1(O(d)) = max(-d-1, 0), and the wedge square splits as the
pairwise degree sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class RankError(ValueError):
    """Operation needs a higher-rank bundle."""


@dataclass(frozen=True)
class SplittingType:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("splitting type needs at least one summand")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)


def splitting(*degrees: int) -> SplittingType:
    return SplittingType(tuple(degrees))


def cohomology_dims(s: SplittingType) -> tuple[int, int]:
    h0 = sum(max(d + 1, 0) for d in s.degrees)
    h1 = sum(max(-d - 1, 0) for d in s.degrees)
    return h0, h1


def wedge2(s: SplittingType) -> SplittingType:
    if s.rank < 2:
        raise RankError("wedge square needs rank >= 2")
    return SplittingType(tuple(a + b for a, b in combinations(s.degrees, 2)))


def expected_presentation_counts(s: SplittingType) -> tuple[int, int, int]:
    """(generators, relations, quadratic relations) for the deformation
    problem with normal-bundle splitting type ``s``.

    Generators = h0(s); relations = h0(wedge2(s)).  The quadratic relations
    count the image of the section-wise multiplication maps: the map
    H0(O(a)) x H0(O(b)) -> H0(O(a+b)) is surjective when a, b >= 0 and zero
    when either factor has no sections, giving sum of (di+dj+1) over pairs
    i < j with di, dj >= 0.
    """
    h0, _ = cohomology_dims(s)
    relations = cohomology_dims(wedge2(s))[0] if s.rank >= 2 else 0
    quadratic = sum(
        a + b + 1 for a, b in combinations(s.degrees, 2) if a >= 0 and b >= 0
    )
    return h0, relations, quadratic


# number of trivial summands in the exceptional line's normal bundle per length
_TRIVIAL_SUMMANDS = {2: 1, 3: 3, 4: 4, 5: 5, 6: 5}


def contraction_splitting_type(l: int) -> SplittingType:
    """Normal-bundle splitting type of the exceptional line for each length:
    O(1) + O^k + O(-1)^3 with k trivial summands as in ``_TRIVIAL_SUMMANDS``
    (so the deformation problem has 2 + k generators)."""
    if l not in _TRIVIAL_SUMMANDS:
        raise ValueError("length must be in 2..6")
    return SplittingType((1,) + (0,) * _TRIVIAL_SUMMANDS[l] + (-1, -1, -1))
