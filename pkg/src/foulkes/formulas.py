"""Closed formulas for twisted Foulkes characters.

phi(n, nu) denotes the character of the symmetric group on 2n points
obtained by inducing from the wreath product of S_2 with S_n, twisted
by the irreducible labeled nu; equivalently the plethysm s_nu(s_(2))
written in symmetric group language. The functions here decompose it
into irreducibles for nu with at most two rows, at most two columns, or
hook shape, plus dedicated closed forms for nu = (n-1, 1) and
nu = (2, 1^(n-2)) and a classification table for nu = (n-2, 1, 1) and
nu = (n-2, 2).
"""

from __future__ import annotations

from typing import Iterable

from .errors import InvalidShapeError
from .expansions import SchurExpansion, omega_schur
from .lr import schur_multiply
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    count_even_shifts,
    distinct_part_count,
    double,
    double_hook,
    drop_count,
    generate_distinct_partitions,
    generate_partitions,
    repeated_part_count,
)

# The two nu families the multiplicity table covers, keyed the same way
# the command line spells them.
TABLE_NU_KINDS = ("n-2,1,1", "n-2,2")

_TABLE_CLASSES = (
    "all-even",
    "2-odd-distinct",
    "2-odd-equal",
    "4-odd-distinct",
    "4-odd-one-pair",
    "4-odd-two-pairs",
    "other",
)


def phi_one_row(n: int) -> SchurExpansion:
    """Decomposition for nu = (n): one copy of s_lam for every doubled
    partition lam = 2 * alpha with alpha a partition of n."""
    if n < 0:
        raise InvalidShapeError("n must be nonnegative")
    return SchurExpansion({double(alpha): 1 for alpha in generate_partitions(n)})


def phi_one_column(n: int) -> SchurExpansion:
    """Decomposition for nu = (1^n): one copy of s_lam for every
    double hook lam built from a distinct-part partition of n."""
    if n < 0:
        raise InvalidShapeError("n must be nonnegative")
    return SchurExpansion(
        {double_hook(alpha): 1 for alpha in generate_distinct_partitions(n)}
    )


def induce_product(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    """Combine two decomposed characters of smaller symmetric groups
    into the induced product on the union of the points.

    The multiplicities multiply through Littlewood-Richardson
    coefficients of the labels, so this is exactly the Schur-basis
    product of the two expansions.
    """
    return schur_multiply(f, g)


def phi_two_row(n: int, r: int) -> SchurExpansion:
    """Decomposition for nu = (n-r, r), requiring 0 <= r <= n-r.

    Products of one-row decompositions for the split (n-r, r) minus the
    products for the split (n-r+1, r-1).
    """
    if n < 1:
        raise InvalidShapeError("n must be a positive integer")
    if r < 0 or r > n - r:
        raise InvalidShapeError(f"need 0 <= r <= n-r, got n={n}, r={r}")
    result = schur_multiply(phi_one_row(n - r), phi_one_row(r))
    if r:
        result = result - schur_multiply(phi_one_row(n - r + 1), phi_one_row(r - 1))
    return result


def phi_two_column(n: int, r: int) -> SchurExpansion:
    """Decomposition for nu = (2^r, 1^(n-2r)), requiring 0 <= 2r <= n.

    Same telescoping difference as phi_two_row with the one-column
    decompositions in place of the one-row ones.
    """
    if n < 1:
        raise InvalidShapeError("n must be a positive integer")
    if r < 0 or 2 * r > n:
        raise InvalidShapeError(f"need 0 <= 2r <= n, got n={n}, r={r}")
    result = schur_multiply(phi_one_column(n - r), phi_one_column(r))
    if r:
        result = result - schur_multiply(
            phi_one_column(n - r + 1), phi_one_column(r - 1)
        )
    return result


def phi_hook(n: int, r: int, variant: str = "first") -> SchurExpansion:
    """Decomposition for the hook nu = (n-r, 1^r), 0 <= r <= n-1.

    Two alternating sums evaluate to the same answer. The first runs
    j = 0..r over products of the one-row decomposition of n-r+j with
    the one-column decomposition of r-j, signed (-1)^j. The second runs
    j = 1..n-r over products for n-r-j and r+j, signed (-1)^(j-1).
    """
    if n < 1:
        raise InvalidShapeError("n must be a positive integer")
    if r < 0 or r > n - 1:
        raise InvalidShapeError(f"need 0 <= r <= n-1, got n={n}, r={r}")
    if variant not in ("first", "second"):
        raise ValueError(f"variant must be 'first' or 'second', got {variant!r}")
    result = SchurExpansion()
    if variant == "first":
        for j in range(r + 1):
            term = schur_multiply(phi_one_row(n - r + j), phi_one_column(r - j))
            result = result - term if j % 2 else result + term
    else:
        for j in range(1, n - r + 1):
            term = schur_multiply(phi_one_row(n - r - j), phi_one_column(r + j))
            result = result + term if j % 2 else result - term
    return result


def phi_hook_depth1_closed(n: int) -> SchurExpansion:
    """Closed form for nu = (n-1, 1), n >= 2, with no alternating sum.

    Every doubled partition 2*gamma contributes its number of distinct
    parts minus one, and every partition of 2n with exactly two odd
    parts of different values contributes once.
    """
    if n < 2:
        raise InvalidShapeError("closed form needs n >= 2")
    acc: dict[Partition, int] = {}
    for gamma in generate_partitions(n):
        lam = double(gamma)
        c = distinct_part_count(lam) - 1
        if c:
            acc[lam] = acc.get(lam, 0) + c
    for mu in generate_partitions(2 * n):
        odd = [p for p in mu if p % 2]
        if len(odd) == 2 and odd[0] != odd[1]:
            acc[mu] = acc.get(mu, 0) + 1
    return SchurExpansion(acc)


def _addable_pairs(t: Partition) -> set[Partition]:
    """Partitions obtained from t by adding two cells in distinct
    columns, skipping pairs that sit at the two ends of one leading
    diagonal hook of t (one extending the arm, the other the leg)."""
    rows = len(t)
    conj = conjugate(t)
    diag = sum(1 for i in range(rows) if t[i] > i)
    forbidden = {frozenset(((i, t[i]), (conj[i], i))) for i in range(diag)}

    def length(r: int) -> int:
        return t[r] if r < rows else 0

    out: set[Partition] = set()
    # both cells in one row
    for r in range(rows + 1):
        new = [length(q) for q in range(max(rows, r + 1))]
        new[r] += 2
        if all(new[i] >= new[i + 1] for i in range(len(new) - 1)):
            out.add(tuple(v for v in new if v))
    # cells in two different rows
    for r in range(rows + 1):
        for s in range(r + 1, rows + 2):
            cell_a = (r, length(r))
            cell_b = (s, length(s))
            if cell_a[1] == cell_b[1]:
                continue
            if frozenset((cell_a, cell_b)) in forbidden:
                continue
            new = [length(q) for q in range(max(rows, s + 1))]
            new[r] += 1
            new[s] += 1
            if all(new[i] >= new[i + 1] for i in range(len(new) - 1)):
                out.add(tuple(v for v in new if v))
    return out


def phi_two_one_column_closed(n: int) -> SchurExpansion:
    """Closed form for nu = (2, 1^(n-2)), n >= 2, with no alternating sum.

    Double hooks of distinct-part partitions gamma of n contribute their
    drop count minus one, and each partition reachable from some double
    hook of a distinct-part partition of n-1 by adding two cells in
    distinct columns (not at the two ends of one diagonal hook)
    contributes once, counted once no matter how many ways it arises.
    """
    if n < 2:
        raise InvalidShapeError("closed form needs n >= 2")
    acc: dict[Partition, int] = {}
    for gamma in generate_distinct_partitions(n):
        c = drop_count(gamma) - 1
        if c:
            lam = double_hook(gamma)
            acc[lam] = acc.get(lam, 0) + c
    targets: set[Partition] = set()
    for alpha in generate_distinct_partitions(n - 1):
        targets |= _addable_pairs(double_hook(alpha))
    for mu in targets:
        acc[mu] = acc.get(mu, 0) + 1
    return SchurExpansion(acc)


def table_row_class(lam: Iterable[int]) -> str:
    """Classification label used by the multiplicity table: the odd
    parts of lam decide the row."""
    lam = as_partition(lam)
    odd = [p for p in lam if p % 2]
    if not odd:
        return "all-even"
    if len(odd) == 2:
        return "2-odd-distinct" if odd[0] != odd[1] else "2-odd-equal"
    if len(odd) == 4:
        values = sorted(odd.count(v) for v in set(odd))
        if values == [1, 1, 1, 1]:
            return "4-odd-distinct"
        if values == [1, 1, 2]:
            return "4-odd-one-pair"
        if values == [2, 2]:
            return "4-odd-two-pairs"
    return "other"


def table_multiplicity(lam: Iterable[int], kind: str, n: int) -> int:
    """Multiplicity of s_lam in the decomposition for nu = (n-2, 1, 1)
    (kind 'n-2,1,1', n >= 3) or nu = (n-2, 2) (kind 'n-2,2', n >= 4),
    read off a classification of the odd parts of lam.

    lam must be a partition of 2n. Partitions outside every listed
    class have multiplicity 0.
    """
    lam = as_partition(lam)
    if kind not in TABLE_NU_KINDS:
        raise ValueError(f"kind must be one of {TABLE_NU_KINDS}, got {kind!r}")
    hook_kind = kind == "n-2,1,1"
    if hook_kind and n < 3:
        raise InvalidShapeError("kind 'n-2,1,1' needs n >= 3")
    if not hook_kind and n < 4:
        raise InvalidShapeError("kind 'n-2,2' needs n >= 4")
    if sum(lam) != 2 * n:
        raise InvalidShapeError(f"lam must have size {2 * n}, got {sum(lam)}")
    cls = table_row_class(lam)
    if cls == "all-even":
        a = distinct_part_count(lam)
        if hook_kind:
            return a * (a - 1) // 2 - a + 1
        return a * (a - 2) + count_even_shifts(lam, {4}, {2}) + repeated_part_count(lam)
    if cls == "2-odd-distinct":
        if hook_kind:
            return (
                count_even_shifts(lam, {3}, {2})
                + 2 * count_even_shifts(lam, {2}, {1})
                + count_even_shifts(lam, {1, 2})
                - 1
            )
        return (
            2 * count_even_shifts(lam, {2}, {1})
            + count_even_shifts(lam, {1, 2})
            + count_even_shifts(lam, {3}, {1, 2})
            - 1
        )
    if cls == "2-odd-equal":
        if hook_kind:
            return count_even_shifts(lam, {3}, {2}) + count_even_shifts(lam, {2}, {1})
        return 0
    if cls == "4-odd-distinct":
        return 3
    if cls == "4-odd-one-pair":
        return 1
    if cls == "4-odd-two-pairs":
        return 0 if hook_kind else 1
    return 0


def omega_dual(f: SchurExpansion) -> SchurExpansion:
    """Pass from s_nu(s_(2)) to s_nu(s_(1,1)): conjugate every label."""
    return omega_schur(f)
