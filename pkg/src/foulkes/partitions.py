"""Integer partitions: generation, constructions, and part statistics.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0. Everything here is a pure
function on immutable values, so concurrent use is safe. Generation
results are memoized and must not be mutated by callers.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import cache
from typing import Iterable

from .errors import (
    EmptyIncludeSetError,
    OddPartError,
    PartitionParseError,
    RepeatedPartsError,
)

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate *parts* and return it as a canonical partition tuple.

    Raises ValueError unless the parts are positive integers in weakly
    decreasing order.
    """
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i and lam[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


@cache
def _bounded(n: int, cap: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@cache
def _bounded_distinct(n: int, cap: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _bounded_distinct(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def generate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order.

    >>> generate_partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _bounded(n, n)


def generate_distinct_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n with pairwise distinct parts, reverse-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _bounded_distinct(n, n)


def double(alpha: Iterable[int]) -> Partition:
    """Double every part: (3, 1) -> (6, 2)."""
    return tuple(2 * p for p in as_partition(alpha))


def halve_even(lam: Iterable[int]) -> Partition:
    """Halve every part, the inverse of double.

    Raises OddPartError if any part is odd.
    """
    lam = as_partition(lam)
    for p in lam:
        if p % 2:
            raise OddPartError(f"part {p} is odd, cannot halve {lam}")
    return tuple(p // 2 for p in lam)


def double_hook(alpha: Iterable[int]) -> Partition:
    """The partition of 2n built from a distinct-part partition of n.

    Its i-th part is alpha_i + i and its i-th leading diagonal hook
    length is 2 * alpha_i; below the diagonal it is determined by the
    column heights alpha_i + i - 1. Raises RepeatedPartsError unless
    the parts of alpha are pairwise distinct.

    >>> double_hook((5, 2, 1))
    (6, 4, 4, 1, 1)
    """
    a = as_partition(alpha)
    if len(set(a)) != len(a):
        raise RepeatedPartsError(f"parts must be distinct, got {a}")
    k = len(a)
    if k == 0:
        return ()
    rows = [a[i] + i + 1 for i in range(k)]
    heights = [a[j] + j for j in range(k)]
    rows.extend(sum(1 for h in heights if h > r) for r in range(k, heights[0]))
    return tuple(rows)


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose the Young diagram: (4, 1, 1) -> (3, 1, 1, 1)."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def diagonal_hook_lengths(lam: Iterable[int]) -> tuple[int, ...]:
    """Hook lengths of the leading diagonal cells (i, i), top left first."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    d = sum(1 for i in range(len(lam)) if lam[i] > i)
    return tuple(lam[i] + conj[i] - 2 * i - 1 for i in range(d))


def distinct_part_count(lam: Iterable[int]) -> int:
    """Number of distinct part values."""
    return len(set(as_partition(lam)))


def repeated_part_count(lam: Iterable[int]) -> int:
    """Number of part values that occur at least twice."""
    return sum(1 for m in Counter(as_partition(lam)).values() if m >= 2)


def drop_count(gamma: Iterable[int]) -> int:
    """Number of indices i with gamma_i > gamma_{i+1} + 1.

    The part after the last one is taken to be 0, so a final part of at
    least 2 counts as a drop.

    >>> drop_count((5, 3, 1))
    2
    """
    gam = as_partition(gamma)
    count = 0
    for i, p in enumerate(gam):
        nxt = gam[i + 1] if i + 1 < len(gam) else 0
        if p > nxt + 1:
            count += 1
    return count


def count_even_shifts(
    lam: Iterable[int],
    include: Iterable[int],
    exclude: Iterable[int] = (),
) -> int:
    """Count k >= 0 such that every include value, shifted by 2k, is a
    part value of lam and no exclude value, shifted by 2k, is one.

    Membership is tested against the set of part values, so repeated
    parts count once. Raises EmptyIncludeSetError when include is empty
    (the count would be infinite).
    """
    lam = as_partition(lam)
    inc = {int(x) for x in include}
    exc = {int(y) for y in exclude}
    if not inc:
        raise EmptyIncludeSetError("include set must be nonempty for a finite count")
    values = set(lam)
    if not values:
        return 0
    top = (max(values) - min(inc)) // 2
    count = 0
    for k in range(top + 1):
        if all(x + 2 * k in values for x in inc) and not any(
            y + 2 * k in values for y in exc
        ):
            count += 1
    return count


def irreducible_dimension(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = as_partition(lam)
    n = sum(lam)
    conj = conjugate(lam)
    denom = 1
    for i, row in enumerate(lam):
        for j in range(row):
            denom *= row - j + conj[j] - i - 1
    return math.factorial(n) // denom


def centralizer_order(mu: Iterable[int]) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    mu = as_partition(mu)
    out = 1
    for value, mult in Counter(mu).items():
        out *= value**mult * math.factorial(mult)
    return out


def parse_partition(text: str) -> Partition:
    """Parse the shared command-line syntax for partitions.

    Comma-separated positive integers in weakly decreasing order, for
    example '6,4,4,1,1'. An exponent token like '4^2' repeats a part.
    The empty string and '-' both denote the empty partition. Raises
    PartitionParseError on anything else.
    """
    s = text.strip()
    if s in ("", "-"):
        return ()
    parts: list[int] = []
    for token in s.split(","):
        token = token.strip()
        base, sep, exp = token.partition("^")
        try:
            value = int(base)
            count = int(exp) if sep else 1
        except ValueError:
            raise PartitionParseError(f"bad partition token {token!r}") from None
        if value < 1 or count < 1:
            raise PartitionParseError(f"bad partition token {token!r}")
        parts.extend([value] * count)
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise PartitionParseError(str(exc)) from None


def format_partition(lam: Iterable[int]) -> str:
    """Render a partition in the same syntax parse_partition accepts.

    Parts are always written out in full; exponent shorthand is accepted
    on input but never emitted.
    """
    lam = as_partition(lam)
    if not lam:
        return "-"
    return ",".join(str(p) for p in lam)
