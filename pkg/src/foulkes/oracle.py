"""Brute-force plethysm oracle, independent of the closed formulas.

Expands s_nu(s_(2)) and s_nu(s_(1,1)) from first principles: write
s_nu in the power-sum basis, substitute each p_r by its plethysm with
the inner function, multiply out, and convert back to the Schur basis.
The only shared code with the formula side is the basic partition and
expansion types; in particular nothing here touches the
Littlewood-Richardson engine, and the s_(1,1) route is computed
directly rather than through the omega involution so that the duality
relation stays testable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable

from .errors import ResourceBoundError
from .expansions import (
    PowerSumExpansion,
    SchurExpansion,
    powersum_to_schur,
    schur_to_powersum,
)
from .partitions import Partition, as_partition

# Cap on |nu| for oracle runs; the substitution cost grows like the
# square of the number of partitions of 2|nu|. Callers can raise it
# explicitly (the CLI reads FOULKES_MAX_N).
DEFAULT_MAX_WEIGHT = 9


def p_plethysm_h2(r: int) -> PowerSumExpansion:
    """p_r composed with the complete homogeneous h_2 = s_(2).

    Equals (p_r * p_r + p_2r) / 2.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    return PowerSumExpansion({(r, r): Fraction(1, 2), (2 * r,): Fraction(1, 2)})


def p_plethysm_e2(r: int) -> PowerSumExpansion:
    """p_r composed with the elementary e_2 = s_(1,1).

    Equals (p_r * p_r - p_2r) / 2.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    return PowerSumExpansion({(r, r): Fraction(1, 2), (2 * r,): Fraction(-1, 2)})


def _check_cap(nu: Partition, max_weight: int | None) -> None:
    cap = DEFAULT_MAX_WEIGHT if max_weight is None else max_weight
    if sum(nu) > cap:
        raise ResourceBoundError(
            f"|nu| = {sum(nu)} exceeds the oracle cap {cap}; "
            "raise max_weight (or FOULKES_MAX_N for the CLI) to override"
        )


@cache
def _oracle(nu: Partition, inner: str) -> SchurExpansion:
    factor = p_plethysm_h2 if inner == "s2" else p_plethysm_e2
    acc: dict[Partition, Fraction] = {}
    for mu, coeff in schur_to_powersum(nu).items():
        term = PowerSumExpansion({(): 1})
        for part in mu:
            term = term * factor(part)
        for lam, c in term.items():
            acc[lam] = acc.get(lam, Fraction(0)) + coeff * c
    return powersum_to_schur(PowerSumExpansion(acc))


def oracle_plethysm_s2(
    nu: Iterable[int], max_weight: int | None = None
) -> SchurExpansion:
    """Schur expansion of s_nu(s_(2)), computed by brute force.

    Results are cached per nu for the life of the process. Raises
    ResourceBoundError when |nu| exceeds the cap (DEFAULT_MAX_WEIGHT
    unless max_weight says otherwise).
    """
    nu = as_partition(nu)
    _check_cap(nu, max_weight)
    return _oracle(nu, "s2")


def oracle_plethysm_e2(
    nu: Iterable[int], max_weight: int | None = None
) -> SchurExpansion:
    """Schur expansion of s_nu(s_(1,1)), computed by brute force."""
    nu = as_partition(nu)
    _check_cap(nu, max_weight)
    return _oracle(nu, "e2")
