"""
Enumeration of numerical semigroups by genus

Every semigroup of genus g + 1 is obtained exactly once from a semigroup of
genus g by removing one minimal generator larger than its Frobenius number.
"""

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from typing import FrozenSet, List, Optional

from src.semigroups.semigroup import NumericalSemigroup, is_closed_complement
from src.utils.error_handler import GenusCapError, PreconditionError
from src.utils.logger import setup_logger

DEFAULT_MAX_GENUS = 12


def _gap_key(semigroup: NumericalSemigroup):
    return semigroup.gaps


class SemigroupEnumerator:
    """
    Walks the semigroup tree level by level.

    The frontier of each level is expanded on a thread pool when
    max_workers > 1; the emitted list is always sorted by gap set.
    """

    def __init__(self, max_genus: Optional[int] = None, max_workers: Optional[int] = None):
        """
        Args:
            max_genus: Enumeration cap (default: CATALOG_MAX_GENUS env var or 12)
            max_workers: Threads used per level (default: CATALOG_WORKERS env var or 1)
        """
        if max_genus is None:
            max_genus = int(os.getenv('CATALOG_MAX_GENUS', str(DEFAULT_MAX_GENUS)))
        if max_workers is None:
            max_workers = int(os.getenv('CATALOG_WORKERS', '1'))
        self.max_genus = max_genus
        self.max_workers = max(1, max_workers)
        self.logger = setup_logger(name="semigroup_enumerator")

    def _check_genus(self, genus: int) -> None:
        if genus < 0:
            raise PreconditionError(f"genus must be nonnegative, got {genus}")
        if genus > self.max_genus:
            raise GenusCapError(
                f"genus {genus} exceeds the enumeration cap {self.max_genus} "
                "(set CATALOG_MAX_GENUS to raise it)"
            )

    @staticmethod
    def children(semigroup: NumericalSemigroup) -> List[NumericalSemigroup]:
        """Semigroups S minus {x} for minimal generators x > frobenius."""
        return [
            NumericalSemigroup.from_gaps(semigroup.gaps + (x,))
            for x in semigroup.generators
            if x > semigroup.frobenius
        ]

    def _expand(self, frontier: List[NumericalSemigroup]) -> List[NumericalSemigroup]:
        if self.max_workers == 1 or len(frontier) < 2:
            batches = [self.children(s) for s in frontier]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                batches = list(executor.map(self.children, frontier))
        return [child for batch in batches for child in batch]

    def levels(self, max_genus: int) -> List[List[NumericalSemigroup]]:
        """All levels 0..max_genus of the tree, each sorted by gap set."""
        self._check_genus(max_genus)
        frontier = [NumericalSemigroup.natural_numbers()]
        result = [frontier]
        for genus in range(1, max_genus + 1):
            frontier = sorted(self._expand(frontier), key=_gap_key)
            self.logger.debug(f"Genus {genus}: {len(frontier)} semigroups")
            result.append(frontier)
        return result

    def enumerate(self, genus: int) -> List[NumericalSemigroup]:
        """
        All numerical semigroups of exactly the given genus.

        Raises:
            GenusCapError: genus above the configured cap
            PreconditionError: negative genus
        """
        semigroups = self.levels(genus)[genus]
        self.logger.info(f"Enumerated {len(semigroups)} semigroups of genus {genus}")
        return semigroups

    def enumerate_range(self, min_genus: int, max_genus: int) -> List[NumericalSemigroup]:
        """Semigroups with min_genus <= genus <= max_genus, ordered by genus then gap set."""
        if min_genus > max_genus:
            return []
        self._check_genus(min_genus)
        levels = self.levels(max_genus)
        return [s for level in levels[min_genus:] for s in level]


def enumerate_semigroups(genus: int, max_genus: Optional[int] = None,
                         max_workers: Optional[int] = None) -> List[NumericalSemigroup]:
    return SemigroupEnumerator(max_genus=max_genus, max_workers=max_workers).enumerate(genus)


def brute_force_gap_sets(genus: int) -> List[FrozenSet[int]]:
    """
    Gap sets of size genus inside [1, 2 genus - 1] whose complement is closed.

    Independent of the tree; used to check it.
    """
    if genus == 0:
        return [frozenset()]
    candidates = range(1, 2 * genus)
    return [
        frozenset(subset)
        for subset in itertools.combinations(candidates, genus)
        if is_closed_complement(frozenset(subset))
    ]


def brute_force_count(genus: int) -> int:
    return len(brute_force_gap_sets(genus))
