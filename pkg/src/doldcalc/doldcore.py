"""Dold coefficients, root spectra and the conversions between them.

A quasi-unipotent orientation-preserving map of a closed surface is
described on the algebraic level either by its Dold coefficients ``a_n``
(the coefficients of the periodic expansion of ``n -> L(f^n)``) or by the
multiplicities ``r_k`` of primitive ``k``-th roots of unity in the spectrum
of its action on first homology.  The two are related by

    a_n = 2*[n == 1] - sum_{n | k} mu(k/n) r_k
    r_1 = 2 - sum_n a_n,    r_k = -sum_n a_{kn}  (k >= 2)

and the genus is recovered from ``2g = sum_k r_k phi(k) = 2 - sum_n n a_n``.
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from typing import Iterable, Sequence

from .numtheory import divisors, mobius, ramanujan_sum, totient

__all__ = [
    "APSet",
    "DEFAULT_HORIZON_CAP",
    "DoldSequence",
    "HorizonError",
    "LefschetzView",
    "PeriodBound",
    "RootSpectrum",
    "StructuralError",
    "algebraic_periods",
    "check_dold_congruences",
    "dold_coefficients",
    "dold_to_spectrum",
    "evaluate_expansion",
    "genus_of",
    "horizon",
    "is_realizable",
    "lefschetz_of",
    "periodic_point_bounds",
    "spectrum_to_dold",
]

DEFAULT_HORIZON_CAP = 10_000

APSet = frozenset  # set of algebraic periods, always a frozenset[int]


class StructuralError(ArithmeticError):
    """An internal identity failed; indicates a bug in the caller, not bad data."""


class HorizonError(ValueError):
    """The lcm horizon of a spectrum exceeds the configured cap."""


class _Sparse(Mapping):
    """Finitely supported integer sequence indexed by positive integers."""

    __slots__ = ("_d", "_hash")

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        d: dict[int, int] = {}
        for k, v in items:
            k, v = int(k), int(v)
            if k < 1:
                raise ValueError(f"indices must be positive, got {k}")
            d[k] = d.get(k, 0) + v
        self._d = {k: d[k] for k in sorted(d) if d[k] != 0}
        self._hash = None

    @classmethod
    def from_dense(cls, values: Sequence[int]):
        """Build from ``(x_1, x_2, ...)``; position ``i`` holds index ``i + 1``."""
        return cls((i + 1, v) for i, v in enumerate(values))

    def __getitem__(self, k: int) -> int:
        return self._d.get(k, 0)

    def __contains__(self, k: object) -> bool:
        return k in self._d

    def __iter__(self) -> Iterator[int]:
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def __eq__(self, other: object) -> bool:
        if type(other) is type(self):
            return self._d == other._d
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._d.items())))
        return self._hash

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._d)

    @property
    def horizon(self) -> int:
        """Largest index in the support, 0 when empty."""
        return max(self._d, default=0)

    def to_dense(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(1, self.horizon + 1))

    def pairs(self) -> list[tuple[int, int]]:
        return list(self._d.items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._d})"


class DoldSequence(_Sparse):
    """Dold coefficients ``a_n`` of a map; absent indices are zero."""

    __slots__ = ()


class RootSpectrum(_Sparse):
    """Multiplicities ``r_k`` of the primitive ``k``-th roots of unity."""

    __slots__ = ()

    @classmethod
    def from_multiset(cls, elements: Iterable[int]) -> RootSpectrum:
        """``{3, 4}``-style multiset: each ``k`` listed once per unit of ``r_k``."""
        return cls((k, 1) for k in elements)

    def multiset(self) -> tuple[int, ...]:
        if any(v < 0 for v in self._d.values()):
            raise ValueError("a spectrum with negative entries has no multiset view")
        return tuple(k for k, v in self._d.items() for _ in range(v))

    def violations(self) -> list[str]:
        """Human readable list of failed realizability conditions."""
        out = [f"r_{k} = {v} negative" for k, v in self._d.items() if v < 0]
        for k in (1, 2):
            if self[k] % 2:
                out.append(f"r_{k} = {self[k]} odd")
        return out

    @property
    def is_realizable(self) -> bool:
        return not self.violations()

    @property
    def period(self) -> int:
        return reduce(lcm, self._d, 1)


def dold_coefficients(values: Sequence[int]) -> list[Fraction]:
    """Coefficients of the periodic expansion of ``psi(1), ..., psi(N)``.

    ``a_k = (1/k) * sum_{d | k} mu(k/d) psi(d)``.  Results are rationals;
    they are all integers exactly when ``psi`` satisfies the Dold congruences.
    """
    if len(values) == 0:
        raise ValueError("need at least one value")
    out = []
    for k in range(1, len(values) + 1):
        s = sum(mobius(k // d) * values[d - 1] for d in divisors(k))
        out.append(Fraction(s, k))
    return out


def evaluate_expansion(a: Mapping[int, int], n: int) -> int:
    """``psi(n) = sum_{d | n} d * a_d`` for a finitely supported expansion."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(d * a[d] for d in divisors(n) if d in a)


def check_dold_congruences(values: Sequence[int]) -> bool:
    for n in range(1, len(values) + 1):
        s = sum(mobius(n // k) * values[k - 1] for k in divisors(n))
        if s % n:
            return False
    return True


@lru_cache(maxsize=None)
def _contributions(k: int) -> tuple[tuple[int, int], ...]:
    # r_k feeds a_n with weight -mu(k/n) for every n | k
    return tuple((n, -m) for n in divisors(k) if (m := mobius(k // n)))


def spectrum_to_dold(r: Mapping[int, int]) -> DoldSequence:
    a = {1: 2}
    for k, rk in r.items():
        for n, w in _contributions(k):
            a[n] = a.get(n, 0) + w * rk
    return DoldSequence(a)


def dold_to_spectrum(a: Mapping[int, int]) -> RootSpectrum:
    """Inverse of :func:`spectrum_to_dold`.

    With ``m_k = sum_n a_{kn}`` one has ``r_1 = 2 - m_1`` and ``r_k = -m_k``.
    """
    m: dict[int, int] = {}
    for n, an in a.items():
        for k in divisors(n):
            m[k] = m.get(k, 0) + an
    r = {k: -v for k, v in m.items()}
    r[1] = r.get(1, 0) + 2
    return RootSpectrum(r)


def is_realizable(a: Mapping[int, int]) -> tuple[bool, list[str]]:
    """Whether ``a`` are the Dold coefficients of some surface homeomorphism.

    Returns the verdict and the list of violated conditions on the spectrum.
    """
    diag = dold_to_spectrum(a).violations()
    return not diag, diag


def genus_of(r: Mapping[int, int]) -> int:
    if any(v < 0 for v in r.values()):
        raise ValueError("genus is only defined for non-negative spectra")
    total = sum(v * totient(k) for k, v in r.items())
    if total % 2:
        raise StructuralError(f"spectrum size {total} is odd")
    a = spectrum_to_dold(r)
    if total != 2 - sum(n * v for n, v in a.items()):
        raise StructuralError("genus formulas disagree")
    return total // 2


def horizon(r: Mapping[int, int], cap: int = DEFAULT_HORIZON_CAP) -> int:
    """lcm of the spectrum support; the Lefschetz sequence has this period."""
    h = reduce(lcm, r, 1)
    if h > cap:
        raise HorizonError(f"lcm horizon {h} exceeds cap {cap}")
    return h


def lefschetz_of(r: Mapping[int, int], n: int) -> int:
    """``L(f^n) = 2 - sum_k r_k c_k(n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 - sum(v * ramanujan_sum(k, n) for k, v in r.items())


@dataclass(frozen=True)
class LefschetzView:
    """The Lefschetz sequence of a spectrum, periodic with ``period``."""

    spectrum: RootSpectrum

    @property
    def period(self) -> int:
        return self.spectrum.period

    def __call__(self, n: int) -> int:
        return lefschetz_of(self.spectrum, n)

    def values(self, count: int) -> list[int]:
        return [self(n) for n in range(1, count + 1)]


def algebraic_periods(a: Mapping[int, int], odd_only: bool = False) -> frozenset[int]:
    return frozenset(n for n, v in a.items() if v and (n % 2 or not odd_only))


@dataclass(frozen=True)
class PeriodBound:
    """Lower bound on periodic points of a transversal map.

    ``odd-exact``: at least ``bound`` points of minimal period ``n``.
    ``even-pair``: at least ``bound`` points of minimal period ``n`` or ``n/2``.
    """

    n: int
    kind: str
    bound: int


def periodic_point_bounds(a: Mapping[int, int]) -> list[PeriodBound]:
    return [
        PeriodBound(n, "odd-exact" if n % 2 else "even-pair", abs(v))
        for n, v in sorted(a.items())
        if v
    ]
