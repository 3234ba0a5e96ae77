"""
Numerical semigroups and their relative ideals

A numerical semigroup S is stored as its members below the conductor plus the
conductor itself; every integer >= conductor belongs to S. Relative ideals and
other value sets use the same shape through IntSet.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple, Union

from src.utils.error_handler import InvalidSemigroupError, PreconditionError
from src.utils.logger import setup_logger

logger = setup_logger(name="semigroup")


@dataclass(frozen=True)
class IntSet:
    """
    A set of integers bounded below with a cofinite tail.

    Attributes:
        members: explicit members, all strictly below threshold
        threshold: every integer >= threshold belongs to the set
    """
    members: FrozenSet[int]
    threshold: int

    @classmethod
    def build(cls, members: Iterable[int], threshold: int) -> 'IntSet':
        """Normalize so that threshold is as small as possible."""
        kept = {m for m in members if m < threshold}
        while threshold - 1 in kept:
            threshold -= 1
            kept.discard(threshold)
        return cls(members=frozenset(kept), threshold=threshold)

    def __contains__(self, n: int) -> bool:
        return n >= self.threshold or n in self.members

    def min(self) -> int:
        """Least member."""
        return min(self.members) if self.members else self.threshold

    def explicit(self, upto: int) -> List[int]:
        """Sorted members that are <= upto."""
        below = sorted(m for m in self.members if m <= upto)
        return below + list(range(self.threshold, upto + 1))

    def shift(self, k: int) -> 'IntSet':
        """The translate self + k."""
        return IntSet.build((m + k for m in self.members), self.threshold + k)

    def union(self, other: 'IntSet') -> 'IntSet':
        threshold = min(self.threshold, other.threshold)
        return IntSet.build(self.members | other.members, threshold)

    def sumset(self, other: 'IntSet') -> 'IntSet':
        """The Minkowski sum {x + y : x in self, y in other}."""
        lo_self, lo_other = self.min(), other.min()
        threshold = min(self.threshold + lo_other, lo_self + other.threshold)
        left = self.explicit(threshold - lo_other)
        right = other.explicit(threshold - lo_self)
        sums = {x + y for x in left for y in right if x + y < threshold}
        return IntSet.build(sums, threshold)

    def count_not_in(self, other: 'IntSet') -> int:
        """#(self \\ other); finite because both sets have cofinite tails."""
        upto = max(self.threshold, other.threshold) - 1
        return sum(1 for n in self.explicit(upto) if n not in other)


@dataclass(frozen=True)
class NumericalSemigroup:
    """
    Cofinite submonoid of the nonnegative integers.

    Attributes:
        generators: minimal generating set, sorted
        elements_below_conductor: members of S in [0, conductor), sorted
        conductor: least beta with [beta, oo) inside S (0 for S = N)
        gaps: N minus S, sorted
    """
    generators: Tuple[int, ...]
    elements_below_conductor: Tuple[int, ...]
    conductor: int
    gaps: Tuple[int, ...]
    _members: FrozenSet[int] = field(default=frozenset(), repr=False, compare=False)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def delta(self) -> int:
        return len(self.gaps)

    @property
    def multiplicity(self) -> int:
        if len(self.elements_below_conductor) > 1:
            return self.elements_below_conductor[1]
        return max(self.conductor, 1)

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def contains(self, n: int) -> bool:
        """Membership test."""
        if n < 0:
            return False
        return n >= self.conductor or n in self._members

    __contains__ = contains

    def is_symmetric(self) -> bool:
        """a gap <=> frobenius - a in S; equivalently conductor = 2 * delta."""
        return self.conductor == 2 * self.delta

    @cached_property
    def pseudo_frobenius(self) -> Tuple[int, ...]:
        """Gaps f with f + s in S for every nonzero s in S."""
        return tuple(
            f for f in self.gaps
            if all(self.contains(f + g) for g in self.generators)
        )

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    def is_almost_symmetric(self) -> bool:
        return 2 * self.delta == self.frobenius + self.type if self.delta else True

    def as_intset(self) -> IntSet:
        return IntSet(members=frozenset(self.elements_below_conductor), threshold=self.conductor)

    def describe(self) -> str:
        """Compact label such as <3,10,14>."""
        return "<" + ",".join(str(g) for g in self.generators) + ">"

    def summary(self) -> dict:
        """Integer-only summary used in reports."""
        return {
            'generators': list(self.generators),
            'gaps': list(self.gaps),
            'frobenius': self.frobenius,
            'conductor': self.conductor,
            'delta': self.delta,
        }

    @classmethod
    def _from_membership(cls, members: Iterable[int], conductor: int) -> 'NumericalSemigroup':
        below = tuple(sorted(m for m in members if m < conductor))
        member_set = frozenset(below)
        gaps = tuple(n for n in range(conductor) if n not in member_set)
        semigroup = cls(
            generators=(),
            elements_below_conductor=below,
            conductor=conductor,
            gaps=gaps,
            _members=member_set,
        )
        object.__setattr__(semigroup, 'generators', semigroup._minimal_generators())
        return semigroup

    def _minimal_generators(self) -> Tuple[int, ...]:
        # minimal generators never exceed conductor + multiplicity
        bound = self.conductor + self.multiplicity
        nonzero = [s for s in range(1, bound + 1) if self.contains(s)]
        generators = []
        for s in nonzero:
            decomposable = any(self.contains(s - x) for x in nonzero if x <= s - x and s - x > 0)
            if not decomposable:
                generators.append(s)
        return tuple(generators)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> 'NumericalSemigroup':
        """
        Build the additive closure of the given generators.

        Raises:
            InvalidSemigroupError: empty list, non-positive entries, or gcd != 1
        """
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise InvalidSemigroupError("generator list is empty")
        if gens[0] <= 0:
            raise InvalidSemigroupError(f"generators must be positive: {gens}")
        if math.gcd(*gens) != 1:
            raise InvalidSemigroupError(f"gcd of generators {gens} is not 1; not a numerical semigroup")

        smallest = gens[0]
        membership: List[bool] = []
        run = 0
        n = 0
        while run < smallest:
            is_member = n == 0 or any(n >= g and membership[n - g] for g in gens)
            membership.append(is_member)
            run = run + 1 if is_member else 0
            n += 1
        conductor = n - smallest
        members = [k for k, flag in enumerate(membership) if flag]
        semigroup = cls._from_membership(members, conductor)
        logger.debug(f"Built {semigroup.describe()} with conductor {conductor}")
        return semigroup

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> 'NumericalSemigroup':
        """
        Build the semigroup whose complement is the given gap set.

        Raises:
            InvalidSemigroupError: non-positive gaps or a complement that is not closed
        """
        gap_set = set(int(g) for g in gaps)
        if any(g <= 0 for g in gap_set):
            raise InvalidSemigroupError(f"gaps must be positive: {sorted(gap_set)}")
        conductor = max(gap_set) + 1 if gap_set else 0
        members = [n for n in range(conductor) if n not in gap_set]
        if not is_closed_complement(gap_set):
            raise InvalidSemigroupError(f"complement of {sorted(gap_set)} is not closed under addition")
        return cls._from_membership(members, conductor)

    @classmethod
    def natural_numbers(cls) -> 'NumericalSemigroup':
        return cls.from_generators([1])


def is_closed_complement(gap_set: FrozenSet[int]) -> bool:
    """True when N minus gap_set is closed under addition."""
    if not gap_set:
        return True
    top = max(gap_set)
    members = [n for n in range(1, top + 1) if n not in gap_set]
    member_set = set(members)
    for i, x in enumerate(members):
        for y in members[i:]:
            if x + y > top:
                break
            if x + y not in member_set:
                return False
    return True


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def canonical_ideal(semigroup: NumericalSemigroup) -> IntSet:
    """K = {a in Z : frobenius - a not in S}."""
    gamma = semigroup.frobenius
    members = [a for a in range(0, gamma + 1) if not semigroup.contains(gamma - a)]
    return IntSet.build(members, semigroup.conductor)


def eta(semigroup: NumericalSemigroup) -> int:
    """#(K \\ S): gaps a whose reflection frobenius - a is also a gap."""
    return canonical_ideal(semigroup).count_not_in(semigroup.as_intset())


def blowup_values(semigroup: NumericalSemigroup) -> IntSet:
    """
    Stable union of the sumsets nK.

    Since 0 is in K the iterates increase, and they live inside N with the
    same tail, so the loop stops after at most conductor + 1 rounds.
    """
    ideal = canonical_ideal(semigroup)
    current = ideal
    for _ in range(semigroup.conductor + 1):
        following = current.sumset(ideal)
        if following == current:
            return current
        current = following
    return current


def mu(semigroup: NumericalSemigroup) -> int:
    """#(blowup_values \\ K)."""
    return blowup_values(semigroup).count_not_in(canonical_ideal(semigroup))


class ShiftDirection(Enum):
    UP = "up"
    DOWN = "down"


def shift_degree(semigroup: NumericalSemigroup, r: int,
                 direction: Union[ShiftDirection, str]) -> int:
    """
    Size of (S + r) \\ S for UP, of (S - r) \\ S for DOWN.

    DOWN counts negative members of S - r as well.
    """
    if r < 1:
        raise PreconditionError(f"shift must be a positive integer, got {r}")
    direction = ShiftDirection(direction)
    if direction is ShiftDirection.UP:
        return sum(1 for s in semigroup.elements_below_conductor if not semigroup.contains(s + r))
    candidates = [s for s in range(semigroup.conductor + r) if semigroup.contains(s)]
    return sum(1 for s in candidates if not semigroup.contains(s - r))
