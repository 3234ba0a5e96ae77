"""
Arithmetic-progression partitions of canonical exponent sets

A monomial curve (t^a : a in A) lies on the scroll S_{m1..md} exactly when A
splits into d arithmetic progressions with one common difference r and
m_i + 1 elements each. For a fixed r the maximal r-chains give the fewest
parts: any difference-r part lies inside one maximal chain, so there are at
least as many parts as chains, and taking the chains themselves attains it.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.utils.error_handler import PreconditionError
from src.utils.logger import setup_logger

logger = setup_logger(name="scrollfit")


def _normalize(exponents: Iterable[int]) -> Tuple[int, ...]:
    values = tuple(sorted(set(int(a) for a in exponents)))
    if not values:
        raise PreconditionError("exponent set is empty; nothing to fit")
    return values


def format_scroll(scroll_type: Sequence[int]) -> str:
    """S_{2,3} style label."""
    return "S_{" + ",".join(str(m) for m in scroll_type) + "}"


@dataclass(frozen=True)
class APFit:
    """
    Partition of A into maximal chains {x, x+r, ..., x+kr}.

    Attributes:
        r: common difference
        parts: chains ordered by their least element
    """
    r: int
    parts: Tuple[Tuple[int, ...], ...]

    @property
    def scroll_type(self) -> Tuple[int, ...]:
        return tuple(sorted(len(part) - 1 for part in self.parts))

    @property
    def smooth(self) -> bool:
        return all(m >= 1 for m in self.scroll_type)

    @property
    def dimension(self) -> int:
        return len(self.parts)

    def label(self) -> str:
        return format_scroll(self.scroll_type)

    def to_dict(self) -> dict:
        return {
            'r': self.r,
            'parts': [list(part) for part in self.parts],
            'scroll_type': list(self.scroll_type),
            'smooth': self.smooth,
        }


def count_chains(exponents: Sequence[int], r: int) -> int:
    """Number of chain heads: x in A with x - r not in A."""
    members = set(exponents)
    return sum(1 for x in members if x - r not in members)


def fit_with_difference(exponents: Iterable[int], r: int) -> APFit:
    """
    Maximal-chain partition of A for the difference r.

    Raises:
        PreconditionError: empty A or r < 1
    """
    values = _normalize(exponents)
    if r < 1:
        raise PreconditionError(f"common difference must be positive, got {r}")
    members = set(values)
    parts = []
    for head in values:
        if head - r in members:
            continue
        chain = [head]
        while chain[-1] + r in members:
            chain.append(chain[-1] + r)
        parts.append(tuple(chain))
    return APFit(r=r, parts=tuple(parts))


class ScrollFitter:
    """
    Sweeps the common difference r over [1, max(A)].

    The sweep may run on a thread pool; results are collected per r so the
    reduction is identical to the sequential one.
    """

    def __init__(self, max_workers: int = 1):
        self.max_workers = max(1, max_workers)
        self.logger = logger

    def sweep(self, exponents: Iterable[int]) -> Dict[int, int]:
        """Map r -> number of parts of the maximal-chain fit."""
        values = _normalize(exponents)
        if len(values) < 2:
            raise PreconditionError("best fit needs at least two exponents")
        candidates = list(range(1, values[-1] + 1))
        if self.max_workers == 1:
            counts = [count_chains(values, r) for r in candidates]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                counts = list(executor.map(lambda r: count_chains(values, r), candidates))
        return dict(zip(candidates, counts))

    def minimizers(self, exponents: Iterable[int]) -> List[int]:
        counts = self.sweep(exponents)
        least = min(counts.values())
        return [r for r, count in counts.items() if count == least]

    def fits(self, exponents: Iterable[int]) -> List[APFit]:
        """Fits at every minimizing r, in increasing r."""
        values = _normalize(exponents)
        return [fit_with_difference(values, r) for r in self.minimizers(values)]

    def best(self, exponents: Iterable[int]) -> APFit:
        """Minimizing fit; smooth scrolls first, then the smallest r."""
        fits = self.fits(exponents)
        smooth = [fit for fit in fits if fit.smooth]
        chosen = (smooth or fits)[0]
        self.logger.debug(f"Best fit r={chosen.r} {chosen.label()} among {[f.r for f in fits]}")
        return chosen


_default_fitter = ScrollFitter()


def all_minimizers(exponents: Iterable[int]) -> List[int]:
    return _default_fitter.minimizers(exponents)


def fits_for(exponents: Iterable[int]) -> List[APFit]:
    return _default_fitter.fits(exponents)


def best_fit(exponents: Iterable[int]) -> APFit:
    return _default_fitter.best(exponents)


def gonality(exponents: Iterable[int]) -> int:
    """Least number of parts plus one."""
    return min(_default_fitter.sweep(exponents).values()) + 1


@dataclass(frozen=True)
class ScrollMatrix:
    """
    Two-row block matrix whose 2x2 minors cut out the scroll.

    Each block lists column pairs (x + i r, x + (i+1) r) of one chain.
    """
    r: int
    blocks: Tuple[Tuple[Tuple[int, int], ...], ...]

    @property
    def columns(self) -> int:
        return sum(len(block) for block in self.blocks)

    def block_sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    def render(self) -> str:
        """Text layout with blocks separated by '|'."""
        top = " | ".join(" ".join(f"t^{a}" for a, _ in block) for block in self.blocks)
        bottom = " | ".join(" ".join(f"t^{b}" for _, b in block) for block in self.blocks)
        return f"[ {top} ]\n[ {bottom} ]"

    def to_dict(self) -> dict:
        return {'r': self.r, 'blocks': [[list(pair) for pair in block] for block in self.blocks]}


def scroll_matrix(exponents: Iterable[int], r: int) -> ScrollMatrix:
    """Block layout of the determinantal matrix for the fit of A with difference r."""
    fit = fit_with_difference(exponents, r)
    blocks = tuple(
        tuple((part[i], part[i + 1]) for i in range(len(part) - 1))
        for part in fit.parts if len(part) > 1
    )
    return ScrollMatrix(r=r, blocks=blocks)


def brute_force_min_cover(exponents: Iterable[int], r: int,
                          limit: Optional[int] = 12) -> int:
    """
    Exhaustive least number of difference-r progressions partitioning A.

    Only meant for small sets; limit guards against accidental blowups.
    """
    values = _normalize(exponents)
    if limit is not None and len(values) > limit:
        raise PreconditionError(f"brute force cover limited to {limit} elements")

    def search(remaining: frozenset) -> int:
        if not remaining:
            return 0
        head = min(remaining)
        best = None
        chain = []
        x = head
        while x in remaining:
            chain.append(x)
            rest = search(remaining - frozenset(chain))
            if best is None or rest + 1 < best:
                best = rest + 1
            x += r
        return best

    return search(frozenset(values))
