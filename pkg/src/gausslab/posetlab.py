"""Classical ranked posets and their exact verifications.

Covers the subset lattice (with exhaustive antichain search and the exact
LYM sum), the weak order on permutations ranked by inversions, the refinement
order on set partitions with Stirling counts, and Eulerian polynomials from
the descent statistic.  Everything is enumerated exactly; completed posets
are immutable and freely shareable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .errors import EnumerationBudgetExceeded, NotAnAntichain
from .polycore import IntPoly

Permutation = tuple[int, ...]
SetPartition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RankedPoset:
    """Finite poset given by its cover relation plus a rank labelling.

    ``covers`` holds index pairs (i, j) meaning elements[j] covers
    elements[i]; ranks change by exactly 1 across every cover, in one
    consistent direction (ranks may increase or decrease along covers).
    """

    elements: tuple
    covers: tuple[tuple[int, int], ...]
    ranks: tuple[int, ...]

    def rank_histogram(self) -> list[int]:
        """Element counts per rank value, from the minimum rank upward."""
        lo, hi = min(self.ranks), max(self.ranks)
        hist = [0] * (hi - lo + 1)
        for r in self.ranks:
            hist[r - lo] += 1
        return hist

    def to_json_dict(self) -> dict:
        return {
            "elements": [_element_json(e) for e in self.elements],
            "covers": [list(c) for c in self.covers],
            "ranks": list(self.ranks),
        }


def _element_json(e):
    if isinstance(e, tuple):
        return [_element_json(x) for x in e]
    return e


def validate_ranked_poset(p: RankedPoset) -> None:
    """Check the rank axioms: |step| = 1 across covers, one consistent direction."""
    if not p.covers:
        return
    steps = {p.ranks[j] - p.ranks[i] for i, j in p.covers}
    if steps not in ({1}, {-1}):
        raise ValueError(f"cover rank steps must be uniformly +1 or -1, got {steps}")


def count_maximal_chains(p: RankedPoset) -> int:
    """Number of saturated chains from a minimal to a maximal element."""
    n = len(p.elements)
    has_in = [False] * n
    has_out = [False] * n
    incoming: list[list[int]] = [[] for _ in range(n)]
    for i, j in p.covers:
        has_in[j] = True
        has_out[i] = True
        incoming[j].append(i)
    step = p.ranks[p.covers[0][1]] - p.ranks[p.covers[0][0]] if p.covers else 1
    order = sorted(range(n), key=lambda i: step * p.ranks[i])
    paths = [0] * n
    for i in order:
        paths[i] = 1 if not has_in[i] else sum(paths[src] for src in incoming[i])
    return sum(paths[i] for i in range(n) if not has_out[i])


# -- the subset lattice ---------------------------------------------------------


def subset_lattice(n: int) -> RankedPoset:
    """All subsets of {1..n} as bitmasks, ordered by inclusion, ranked by size."""
    if not 1 <= n <= 20:
        raise ValueError("need 1 <= n <= 20")
    elements = tuple(range(1 << n))
    covers = tuple(
        (s, s | (1 << i)) for s in elements for i in range(n) if not s >> i & 1
    )
    ranks = tuple(s.bit_count() for s in elements)
    return RankedPoset(elements, covers, ranks)


def subset_leq(s: int, t: int) -> bool:
    return s & t == s


def mask_of(subset: Iterable[int], n: int) -> int:
    mask = 0
    for x in subset:
        if not 1 <= x <= n:
            raise ValueError(f"element {x} outside 1..{n}")
        mask |= 1 << (x - 1)
    return mask


def _comparable(s: int, t: int) -> bool:
    return s & t == s or s & t == t


def iter_antichains(n: int, max_n: int = 5) -> Iterator[tuple[int, ...]]:
    """Every antichain of subsets of {1..n} (as mask tuples), empty one included.

    The count is Dedekind-sized, hence the cap; raise it explicitly for n = 6
    if you can afford the wait.
    """
    if n > max_n:
        raise EnumerationBudgetExceeded(
            f"antichain families for n = {n} exceed the cap {max_n}"
        )
    masks = list(range(1 << n))

    def rec(start: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield chosen
        for idx in range(start, len(masks)):
            m = masks[idx]
            if all(not _comparable(m, c) for c in chosen):
                yield from rec(idx + 1, chosen + (m,))

    yield from rec(0, ())


@dataclass(frozen=True)
class SpernerSearch:
    """Result of the exhaustive antichain search on the subset lattice."""

    n: int
    max_size: int
    num_maximum: int
    total_antichains: int
    bound: int

    @property
    def bound_holds(self) -> bool:
        return self.max_size <= self.bound


def max_antichain(n: int, max_n: int = 5) -> SpernerSearch:
    """Exhaustively verify the antichain bound C(n, ceil(n/2)) and count winners."""
    best = 0
    winners = 0
    total = 0
    for chain in iter_antichains(n, max_n):
        total += 1
        size = len(chain)
        if size > best:
            best, winners = size, 1
        elif size == best:
            winners += 1
    return SpernerSearch(n, best, winners, total, math.comb(n, (n + 1) // 2))


def lym_sum(antichain: Iterable[Iterable[int]], n: int) -> Fraction:
    """Exact sum of 1 / C(n, |A|) over a verified antichain of subsets of {1..n}."""
    masks = sorted({mask_of(a, n) for a in antichain})
    for s, t in itertools.combinations(masks, 2):
        if _comparable(s, t):
            raise NotAnAntichain((_mask_set(s), _mask_set(t)))
    return sum(
        (Fraction(1, math.comb(n, m.bit_count())) for m in masks), Fraction(0)
    )


def _mask_set(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def full_layer(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-element subsets of {1..n} as sorted tuples."""
    return [tuple(c) for c in itertools.combinations(range(1, n + 1), k)]


# -- permutations and the weak order --------------------------------------------


def check_permutation(word: Sequence[int]) -> Permutation:
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {word}")
    return tuple(word)


def inv(word: Sequence[int]) -> int:
    """Number of out-of-order pairs i < j with word[i] > word[j]."""
    w = check_permutation(word)
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def des(word: Sequence[int]) -> int:
    """Number of positions i (1 <= i <= n-1) with word[i] > word[i+1]."""
    w = check_permutation(word)
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def weak_bruhat(n: int) -> RankedPoset:
    """All permutations of 1..n; covers swap an adjacent ascent; rank = inv."""
    if not 1 <= n <= 8:
        raise ValueError("need 1 <= n <= 8")
    elements = tuple(sorted(itertools.permutations(range(1, n + 1))))
    index = {w: i for i, w in enumerate(elements)}
    covers = []
    for i, w in enumerate(elements):
        for pos in range(n - 1):
            if w[pos] < w[pos + 1]:
                swapped = w[:pos] + (w[pos + 1], w[pos]) + w[pos + 2:]
                covers.append((i, index[swapped]))
    ranks = tuple(inv(w) for w in elements)
    return RankedPoset(elements, tuple(covers), ranks)


def inversion_polynomial(n: int) -> IntPoly:
    """Generating polynomial of inv over all permutations of 1..n."""
    if not 1 <= n <= 8:
        raise ValueError("need 1 <= n <= 8")
    counts = [0] * (n * (n - 1) // 2 + 1)
    for w in itertools.permutations(range(1, n + 1)):
        total = sum(
            1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]
        )
        counts[total] += 1
    return IntPoly(counts)


# -- set partitions and Stirling numbers ----------------------------------------


def stirling2(n: int, k: int) -> int:
    """S(n, k) by the two-term recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    row = [1]  # S(1, 1)
    for m in range(2, n + 1):
        row = [
            (j + 1) * (row[j] if j < len(row) else 0) + (row[j - 1] if j >= 1 else 0)
            for j in range(m)
        ]
    return row[k - 1]


def stirling_row(n: int) -> list[int]:
    """(S(n, 1), ..., S(n, n))."""
    return [stirling2(n, k) for k in range(1, n + 1)]


def stirling_polynomial(n: int) -> IntPoly:
    """sum_k S(n, k) X^k, i.e. the Stirling row with a leading zero coefficient."""
    return IntPoly([0] + stirling_row(n))


def set_partitions(n: int) -> list[SetPartition]:
    """All partitions of {1..n} in canonical form (blocks sorted by minimum)."""
    if n < 1:
        raise ValueError("need n >= 1")
    out: list[SetPartition] = []

    def rec(i: int, blocks: list[list[int]]) -> None:
        if i > n:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        rec(i + 1, blocks)
        blocks.pop()

    rec(1, [])
    return out


def refines(p: SetPartition, q: SetPartition) -> bool:
    """True iff every block of p is contained in some block of q."""
    lookup = {}
    for bi, block in enumerate(q):
        for x in block:
            lookup[x] = bi
    return all(len({lookup[x] for x in block}) == 1 for block in p)


def _merge_blocks(p: SetPartition, i: int, j: int) -> SetPartition:
    merged = tuple(sorted(p[i] + p[j]))
    rest = [b for t, b in enumerate(p) if t not in (i, j)]
    return tuple(sorted(rest + [merged], key=lambda b: b[0]))


def partition_lattice(n: int) -> RankedPoset:
    """Set partitions of {1..n} under refinement; rank = number of blocks.

    The rank decreases along covers (a cover merges exactly two blocks), which
    is the decreasing orientation of a rank function.
    """
    if not 1 <= n <= 9:
        raise ValueError("need 1 <= n <= 9")
    elements = tuple(sorted(set_partitions(n)))
    index = {p: i for i, p in enumerate(elements)}
    covers = []
    for i, p in enumerate(elements):
        for bi in range(len(p)):
            for bj in range(bi + 1, len(p)):
                covers.append((i, index[_merge_blocks(p, bi, bj)]))
    ranks = tuple(len(p) for p in elements)
    return RankedPoset(elements, tuple(covers), ranks)


# -- Eulerian polynomials --------------------------------------------------------


def eulerian(n: int) -> IntPoly:
    """Generating polynomial of the descent statistic over permutations of 1..n.

    Direct enumeration through n = 9; the standard two-term recurrence beyond.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n <= 9:
        counts = [0] * n
        for w in itertools.permutations(range(1, n + 1)):
            counts[sum(1 for i in range(n - 1) if w[i] > w[i + 1])] += 1
        return IntPoly(counts)
    return eulerian_recurrence(n)


def eulerian_recurrence(n: int) -> IntPoly:
    """A(n, k) = (k + 1) A(n-1, k) + (n - k) A(n-1, k-1), row by row."""
    if n < 1:
        raise ValueError("need n >= 1")
    row = [1]
    for m in range(2, n + 1):
        row = [
            (k + 1) * (row[k] if k < len(row) else 0)
            + (m - k) * (row[k - 1] if 1 <= k else 0)
            for k in range(m)
        ]
    return IntPoly(row)


# -- rank-function relations ------------------------------------------------------


def affine_rank_relation(
    r1: Sequence[int], r2: Sequence[int]
) -> Optional[tuple[int, int]]:
    """(slope, offset) with r2 = slope * r1 + offset and slope in {1, -1}, or None."""
    if len(r1) != len(r2) or not r1:
        return None
    for slope in (1, -1):
        offset = r2[0] - slope * r1[0]
        if all(y == slope * x + offset for x, y in zip(r1, r2)):
            return slope, offset
    return None
