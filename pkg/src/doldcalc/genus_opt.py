"""Smallest genus on which a given set is realized as algebraic periods.

Two solvers share one witness type.  :func:`upper_bound_genus` is the
closed-form construction (every coefficient on the target set set to -1,
then parity-fixed), :func:`min_genus_exact` is a certified exhaustive search
below that bound.  The integer program behind the search is

    minimise  2g = 2 - sum_{n in A} n a_n,   a_n in Z \\ {0}
    s.t.      sum_{n in A} a_n <= 2,  sum_{kn in A} a_{kn} <= 0  (k >= 2),
              sum_{n in A} a_n and sum_{2n in A} a_{2n} even,

which is the same as searching over non-negative spectra (``r_k``) with even
``r_1, r_2``.  The search runs over spectra, since only degrees dividing some
element of ``A`` can carry a nonzero ``r_k`` when the support lies in ``A``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .doldcore import (
    DoldSequence,
    RootSpectrum,
    StructuralError,
    dold_to_spectrum,
    genus_of,
    is_realizable,
    spectrum_to_dold,
)
from .spectra_enum import enumerate_catalog, spectra_over

__all__ = [
    "GenusWitness",
    "divisor_closure",
    "min_genus_exact",
    "min_genus_odd",
    "upper_bound_genus",
]


@dataclass(frozen=True)
class GenusWitness:
    genus: int
    dold: DoldSequence
    spectrum: RootSpectrum

    @classmethod
    def from_spectrum(cls, r: RootSpectrum) -> GenusWitness:
        return cls(genus_of(r), spectrum_to_dold(r), r)


def _as_target(A: Iterable[int]) -> frozenset[int]:
    target = frozenset(int(n) for n in A)
    if not target:
        raise ValueError("target set must be nonempty")
    if min(target) < 1:
        raise ValueError("periods must be positive integers")
    return target


def divisor_closure(A: Iterable[int]) -> list[int]:
    """All k dividing at least one element of ``A``."""
    return sorted({k for n in A for k in range(1, n + 1) if n % k == 0})


def upper_bound_genus(A: Iterable[int]) -> GenusWitness:
    target = _as_target(A)
    a = {n: -1 for n in target}
    odd_total = len(target) % 2 == 1
    odd_even_part = sum(1 for n in target if n % 2 == 0) % 2 == 1
    evens = sorted(n for n in target if n % 2 == 0)
    odds = sorted(n for n in target if n % 2)

    n0 = n1 = 0
    if odd_even_part:
        if not evens:
            raise StructuralError("no even index available for the parity fix")
        n0 = evens[0]
        # bumping a_{n0} flips both sums
        odd_total = not odd_total
    if odd_total:
        if not odds:
            raise StructuralError("no odd index available for the parity fix")
        n1 = odds[0]
    for n in (n0, n1):
        if n:
            a[n] = -2

    dold = DoldSequence(a)
    ok, diag = is_realizable(dold)
    if not ok:
        raise StructuralError(f"bound construction not realizable: {diag}")
    r = dold_to_spectrum(dold)
    g = genus_of(r)
    if 2 * g != 2 + sum(target) + n0 + n1:
        raise StructuralError("genus formula mismatch")
    return GenusWitness(g, dold, r)


def min_genus_exact(A: Iterable[int]) -> GenusWitness:
    """Minimal genus with algebraic periods exactly ``A``, plus a witness.

    Exhaustive over every genus up to the closed-form bound, so the returned
    genus is certified minimal.  Ties go to the first spectrum in enumeration
    order.
    """
    target = _as_target(A)
    bound = upper_bound_genus(target)
    ks = divisor_closure(target)
    for g in range(1, bound.genus + 1):
        for r in spectra_over(2 * g, ks):
            if spectrum_to_dold(r).support == target:
                return GenusWitness.from_spectrum(r)
    raise StructuralError("search exhausted below a realizable bound")


def min_genus_odd(A: Iterable[int], jobs: int = 1) -> GenusWitness:
    """Minimal genus with odd algebraic periods exactly ``A`` (even ones free)."""
    target = _as_target(A)
    if any(n % 2 == 0 for n in target):
        raise ValueError("odd-period target must contain only odd integers")
    # the exact-support bound is valid here since the support is all odd
    bound = upper_bound_genus(target)
    for g in range(1, bound.genus + 1):
        for rec in enumerate_catalog(g, jobs):
            if rec.mper == target:
                return GenusWitness(g, rec.dold, rec.spectrum)
    raise StructuralError("search exhausted below a realizable bound")
