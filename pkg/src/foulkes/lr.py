"""Littlewood-Richardson coefficients and products in the Schur basis.

Two independent enumerations live here on purpose. lr_coefficient
counts fillings of a fixed skew shape straight from the definition,
visiting cells in reverse reading order (right to left within a row,
top row first) so the lattice-word constraint can be checked exactly at
every step. schur_multiply expands whole products through chains of
horizontal strips, which only ever visits result partitions with a
nonzero coefficient; the test suite cross-checks the two engines
against each other.
"""

from __future__ import annotations

from collections import Counter
from functools import cache

from .expansions import SchurExpansion
from .partitions import Partition, as_partition


def _contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def lr_coefficient(
    lam: "Partition | list[int]",
    mu: "Partition | list[int]",
    nu: "Partition | list[int]",
) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu, nu}.

    Counts semistandard fillings of the skew shape lam/mu with content
    nu whose reverse reading word is a lattice word. Returns 0 whenever
    the sizes do not satisfy |lam| = |mu| + |nu| or mu is not contained
    in lam.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    nu = as_partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not _contains(lam, mu):
        return 0
    if not nu:
        return 1
    k = len(nu)
    cells: list[tuple[int, int]] = []
    for r in range(len(lam)):
        inner = mu[r] if r < len(mu) else 0
        cells.extend((r, c) for c in range(lam[r] - 1, inner - 1, -1))
    counts = [0] * (k + 1)
    grid: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = grid.get((r, c + 1))
        hi = right if right is not None else k
        above = grid.get((r - 1, c)) if r else None
        lo = above + 1 if above is not None else 1
        total = 0
        for e in range(lo, hi + 1):
            if counts[e] >= nu[e - 1]:
                continue
            # lattice word: after placing, count(e) may not exceed count(e-1)
            if e > 1 and counts[e] >= counts[e - 1]:
                continue
            counts[e] += 1
            grid[(r, c)] = e
            total += fill(idx + 1)
            counts[e] -= 1
            del grid[(r, c)]
        return total

    return fill(0)


@cache
def _product_terms(a: Partition, b: Partition) -> tuple[tuple[Partition, int], ...]:
    """Expansion of s_a * s_b as (partition, coefficient) pairs.

    Enumerates chains a = k0 <= k1 <= ... where each step adds a
    horizontal strip of b_i cells, subject to the row-prefix lattice
    condition: through any row r, strip i may not contain more cells in
    rows 1..r than strip i-1 holds in rows 1..r-1.
    """
    counts: Counter[Partition] = Counter()
    entries = len(b)

    def place(entry: int, shape: tuple[int, ...], prev: tuple[int, ...]) -> None:
        if entry == entries:
            counts[shape] += 1
            return
        need = b[entry]
        nrows = len(shape)
        if entry:
            prefix = [0] * (nrows + 2)
            for q in range(nrows + 1):
                prefix[q + 1] = prefix[q] + (prev[q] if q < len(prev) else 0)
        new_rows: list[int] = []
        row_counts: list[int] = []

        def fill(r: int, remaining: int, placed: int) -> None:
            if r == nrows + 1:
                if remaining == 0:
                    shape2 = tuple(new_rows if new_rows[-1] else new_rows[:-1])
                    place(entry + 1, shape2, tuple(row_counts))
                return
            old = shape[r] if r < nrows else 0
            cap = remaining
            if r:
                cap = min(cap, shape[r - 1] - old)
            if entry:
                cap = min(cap, prefix[r] - placed)
            for s in range(max(cap, 0), -1, -1):
                new_rows.append(old + s)
                row_counts.append(s)
                fill(r + 1, remaining - s, placed + s)
                new_rows.pop()
                row_counts.pop()

        fill(0, need, 0)

    place(0, a, ())
    return tuple(sorted(counts.items(), reverse=True))


def schur_multiply(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    """Product of two Schur expansions, expanded back into the basis.

    Bilinear: the coefficient of s_lam is the sum over (mu, nu) of
    f(mu) * g(nu) * c^lam_{mu, nu}.
    """
    if not isinstance(f, SchurExpansion) or not isinstance(g, SchurExpansion):
        raise TypeError("schur_multiply expects two SchurExpansion values")
    acc: dict[Partition, int] = {}
    for mu, cf in f.items():
        for nu, cg in g.items():
            w = cf * cg
            for lam, c in _product_terms(mu, nu):
                acc[lam] = acc.get(lam, 0) + w * c
    return SchurExpansion(acc)
