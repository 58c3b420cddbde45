"""Integer partitions, Young-diagram hook lengths, and brute-force hook counters.

A partition is a non-increasing tuple of positive parts.  Everything here is
exact and deterministic: enumeration streams yield partitions in descending
lexicographic order, and the counting functions ("oracles") work by direct
enumeration so they can serve as ground truth for the series engine.  The
oracles refuse weights beyond a guard; larger weights belong to the series
engine in :mod:`hookbias.genfun`.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

__all__ = [
    "ORDINARY_ENUMERATION_GUARD",
    "TWO_REGULAR_ENUMERATION_GUARD",
    "T_REGULAR_ENUMERATION_GUARD",
    "OracleGuardError",
    "Partition",
    "HookTally",
    "TwoRegularClass",
    "make_partition",
    "enumerate_partitions",
    "enumerate_t_regular",
    "conjugate",
    "hook_lengths",
    "hook_tally",
    "hook_length_census",
    "oracle_ordinary",
    "oracle_regular",
    "oracle_ordinary_bivariate",
    "partition_count",
    "min_part_two_count",
    "raise_largest_part",
    "classify_2regular",
    "fold_into_repeated",
]

# Enumeration guards keep a full oracle sweep below roughly a minute.
ORDINARY_ENUMERATION_GUARD = 60
TWO_REGULAR_ENUMERATION_GUARD = 80
T_REGULAR_ENUMERATION_GUARD = 60


class OracleGuardError(ValueError):
    """An enumeration-based count was requested beyond the feasibility guard."""


class Partition(tuple):
    """A partition: non-increasing tuple of positive integer parts.

    Instances are plain tuples, so they hash, compare and iterate like
    ``(5, 2, 1)``.  The empty partition is the unique partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        p = tuple(parts)
        for x in p:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ValueError(f"parts must be positive integers, got {x!r}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError("parts must be non-increasing; use make_partition to sort")
        return tuple.__new__(cls, p)

    @classmethod
    def _from_sorted(cls, parts: tuple[int, ...]) -> "Partition":
        # fast path for internal generators that already produce canonical tuples
        return tuple.__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicities(self) -> Counter:
        """Multiplicity of each part size, the m_lambda(s) view."""
        return Counter(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class HookTally:
    """Hook-length histogram of one Young diagram.

    ``counts[k]`` is the number of boxes whose hook length is ``k``; keys with
    zero count are omitted.  ``total_cells`` equals the partition weight, since
    every box has exactly one hook.
    """

    counts: Mapping[int, int]
    total_cells: int


class TwoRegularClass(Enum):
    """The three-way split of 2-regular (odd-part) partitions."""

    REPEATED_PART = "R"  # some part occurs more than once
    DISTINCT_WITH_ONE = "S"  # distinct parts, smallest part is 1
    DISTINCT_ABOVE_ONE = "T"  # distinct parts, smallest part exceeds 1


def make_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize an unsorted list of positive parts into a Partition."""
    p = tuple(sorted(parts, reverse=True))
    for x in p:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"parts must be positive integers, got {x!r}")
    return Partition._from_sorted(p)


def _partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as tuples, in descending lexicographic order."""
    if n == 0:
        yield ()
        return
    parts = (n,)
    yield parts
    while True:
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        # shrink the rightmost part above 1 and repack the freed weight greedily
        free = len(parts) - i
        parts = parts[:i] + (parts[i] - 1,)
        while free > 0:
            nxt = min(parts[-1], free)
            parts += (nxt,)
            free -= nxt
        yield parts


def _t_regular_tuples(n: int, t: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n with no part divisible by t, descending lexicographic."""
    if n == 0:
        yield ()
        return
    top = n if cap is None else min(cap, n)
    for first in range(top, 0, -1):
        if first % t == 0:
            continue
        for rest in _t_regular_tuples(n - first, t, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, largest-first lexicographic."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _partition_tuples(n):
        yield Partition._from_sorted(parts)


def enumerate_t_regular(n: int, t: int) -> Iterator[Partition]:
    """Yield the partitions of n with no part divisible by t, each once."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not isinstance(t, int) or t < 2:
        raise ValueError("t must be an integer >= 2")
    for parts in _t_regular_tuples(n, t):
        yield Partition._from_sorted(parts)


def _conjugate_list(parts: tuple[int, ...]) -> list[int]:
    """Column heights of the Young diagram, i.e. the transpose parts."""
    if not parts:
        return []
    conj = [0] * parts[0]
    prev = 0
    for i in range(len(parts) - 1, -1, -1):
        p = parts[i]
        if p > prev:
            height = i + 1
            for j in range(prev, p):
                conj[j] = height
            prev = p
    return conj


def conjugate(partition: Iterable[int]) -> Partition:
    """Transpose of the Young diagram; an involution."""
    return Partition._from_sorted(tuple(_conjugate_list(tuple(partition))))


def hook_lengths(partition: Iterable[int]) -> list[int]:
    """Hook lengths of all boxes, row by row.

    The box in row i, column j (0-based) has hook
    ``parts[i] - j + conj[j] - i - 1``: its arm, its leg, and itself.
    """
    parts = tuple(partition)
    conj = _conjugate_list(parts)
    hooks = []
    for i, p in enumerate(parts):
        base = p - i - 1
        for j in range(p):
            hooks.append(base - j + conj[j])
    return hooks


def hook_tally(partition: Iterable[int]) -> HookTally:
    """Histogram of hook lengths for one partition."""
    parts = tuple(partition)
    counts = Counter(hook_lengths(parts))
    return HookTally(counts=dict(counts), total_cells=sum(parts))


@lru_cache(maxsize=None)
def _census(n: int, t: int) -> tuple[int, tuple[int, ...]]:
    """(number of partitions, hook tally over all of them); t == 0 means ordinary.

    Pure brute force: enumerate every partition and tally every box.  This is
    the ground truth that the generating-function engine is checked against.
    """
    tally = [0] * (n + 1)
    count = 0
    source = _partition_tuples(n) if t == 0 else _t_regular_tuples(n, t)
    for parts in source:
        count += 1
        if not parts:
            continue
        conj = [0] * parts[0]
        prev = 0
        for i in range(len(parts) - 1, -1, -1):
            p = parts[i]
            if p > prev:
                height = i + 1
                for j in range(prev, p):
                    conj[j] = height
                prev = p
        for i, p in enumerate(parts):
            base = p - i - 1
            for j in range(p):
                tally[base - j + conj[j]] += 1
    return count, tuple(tally)


def _guard_limit(t: int | None) -> int:
    if t is None:
        return ORDINARY_ENUMERATION_GUARD
    if t == 2:
        return TWO_REGULAR_ENUMERATION_GUARD
    return T_REGULAR_ENUMERATION_GUARD


def _check_guard(n: int, t: int | None) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    limit = _guard_limit(t)
    if n > limit:
        raise OracleGuardError(
            f"n={n} exceeds the enumeration guard {limit}; "
            "use the series engine (hookbias.genfun) for large n"
        )


def hook_length_census(n: int, t: int | None = None) -> tuple[int, dict[int, int]]:
    """Count partitions of n (t-regular if t is given) and tally all their hooks.

    Returns ``(number_of_partitions, {hook_length: total_count})``.  The tally
    sums to ``n * number_of_partitions`` since each partition contributes one
    hook per box.
    """
    if t is not None and (not isinstance(t, int) or t < 2):
        raise ValueError("t must be an integer >= 2")
    _check_guard(n, t)
    count, tally = _census(n, 0 if t is None else t)
    return count, {k: c for k, c in enumerate(tally) if k and c}


def oracle_ordinary(n: int, k: int) -> int:
    """Number of hooks of length k across all partitions of n, by enumeration."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    _check_guard(n, None)
    _, tally = _census(n, 0)
    return tally[k] if k < len(tally) else 0


def oracle_regular(n: int, t: int, k: int) -> int:
    """Number of hooks of length k across all t-regular partitions of n."""
    if not isinstance(t, int) or t < 2:
        raise ValueError("t must be an integer >= 2")
    if k < 1:
        raise ValueError("k must be a positive integer")
    _check_guard(n, t)
    _, tally = _census(n, t)
    return tally[k] if k < len(tally) else 0


def oracle_ordinary_bivariate(n: int, k: int) -> dict[int, int]:
    """Histogram over partitions of n of their number of length-k hooks.

    The result maps m to the number of partitions of n carrying exactly m
    hooks of length k; values sum to p(n) and the first moment is
    ``oracle_ordinary(n, k)``.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    _check_guard(n, None)
    hist: Counter = Counter()
    for parts in _partition_tuples(n):
        m = 0
        if parts:
            conj = _conjugate_list(parts)
            for i, p in enumerate(parts):
                base = p - i - 1
                for j in range(p):
                    if base - j + conj[j] == k:
                        m += 1
        hist[m] += 1
    return dict(hist)


_PARTITION_COUNTS = [1]


def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence, exact for any n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    counts = _PARTITION_COUNTS
    while len(counts) <= n:
        m = len(counts)
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * counts[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * counts[m - g2]
            j += 1
        counts.append(total)
    return counts[n]


def min_part_two_count(n: int) -> int:
    """Number of partitions of n whose smallest part is at least 2.

    Removing one part equal to 1 is a bijection onto partitions of n-1, so
    the count is p(n) - p(n-1); the empty partition gives 1 at n = 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return partition_count(n) - partition_count(n - 1)


def raise_largest_part(partition: Iterable[int]) -> Partition:
    """Add one box to the first row; injective on partitions with no part 1.

    Sends a nonempty partition with smallest part >= 2 and weight n to one
    with the same property and weight n + 1.
    """
    parts = tuple(partition)
    if not parts:
        raise ValueError("the empty partition has no largest part to raise")
    if parts[-1] < 2:
        raise ValueError("defined only for partitions with smallest part >= 2")
    return Partition._from_sorted((parts[0] + 1,) + parts[1:])


def classify_2regular(partition: Iterable[int]) -> TwoRegularClass:
    """Sort a 2-regular partition into repeated / distinct-with-1 / distinct-above-1.

    The three classes are disjoint and cover all odd-part partitions.
    """
    parts = tuple(partition)
    if any(x % 2 == 0 for x in parts):
        raise ValueError("not 2-regular: partition has an even part")
    if len(set(parts)) < len(parts):
        return TwoRegularClass.REPEATED_PART
    if parts and parts[-1] == 1:
        return TwoRegularClass.DISTINCT_WITH_ONE
    return TwoRegularClass.DISTINCT_ABOVE_ONE


def fold_into_repeated(partition: Iterable[int]) -> Partition:
    """Rebuild a distinct-odd-parts partition with a 1 into one with a repeat.

    For (l1, ..., lr, 1) with at least two parts above the 1, the image is
    (l2, l2, l3, ..., lr, 1^(l1-l2+1)).  For the two-part case (n-1, 1) the
    even weight n decides: ((n-2)/2, (n-2)/2, 1, 1) when 4 divides n, else
    (n/2, n/2).  Weight is preserved, the image has a repeated odd part, and
    the map is injective on each weight class.  Only defined for weight > 4.
    """
    parts = tuple(partition)
    if classify_2regular(parts) is not TwoRegularClass.DISTINCT_WITH_ONE:
        raise ValueError("defined only for distinct odd parts with smallest part 1")
    weight = sum(parts)
    if weight <= 4:
        raise ValueError("defined only for weight > 4")
    head = parts[:-1]
    if len(head) >= 2:
        l1, l2 = head[0], head[1]
        out = (l2, l2) + head[2:] + (1,) * (l1 - l2 + 1)
    else:
        # (n-1, 1) with n even, since all parts are odd
        if weight % 4 == 0:
            half = (weight - 2) // 2
            out = (half, half, 1, 1)
        else:
            half = weight // 2
            out = (half, half)
    return Partition._from_sorted(out)
