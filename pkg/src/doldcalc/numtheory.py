"""Exact elementary number theory.

Everything here works on Python ints, so results are exact for any size.
Small caches are kept with :func:`functools.lru_cache`, which is safe for
concurrent readers.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd, prod
from typing import Sequence

__all__ = [
    "IntPolynomial",
    "cyclotomic",
    "divisors",
    "factorize",
    "inverse_totient",
    "mobius",
    "ramanujan_sum",
    "reg",
    "totient",
]


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with ascending ``p``."""
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    """Euler's totient: the number of ``1 <= k <= n`` coprime to ``n``."""
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    _check_positive(n)
    return list(_divisors(n))


def _is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


@lru_cache(maxsize=1024)
def _inverse_totient(n: int) -> tuple[int, ...]:
    # Any m with phi(m) = n only has prime factors p with (p - 1) | n.  Walk
    # those primes in decreasing order, peeling off one prime power at a time.
    primes = sorted(
        (d + 1 for d in _divisors(n) if _is_prime(d + 1)), reverse=True
    )

    found: set[int] = set()

    def walk(rest: int, idx: int, acc: int) -> None:
        if rest == 1:
            found.add(acc)
            if acc % 2:  # phi(2m) = phi(m) for odd m
                found.add(2 * acc)
            return
        for j in range(idx, len(primes)):
            p = primes[j]
            if rest % (p - 1):
                continue
            r = rest // (p - 1)
            pk = p
            while True:
                walk(r, j + 1, acc * pk)
                if r % p:
                    break
                r //= p
                pk *= p

    walk(n, 0, 1)
    return tuple(sorted(found))


def inverse_totient(n: int) -> list[int]:
    """All ``m`` with ``totient(m) == n``, ascending (possibly empty)."""
    _check_positive(n)
    return list(_inverse_totient(n))


def ramanujan_sum(k: int, n: int) -> int:
    """Sum of the ``n``-th powers of the primitive ``k``-th roots of unity.

    ``n = 0`` is accepted and gives ``totient(k)``, the trace of 1 in the
    ``k``-th cyclotomic field.
    """
    _check_positive(k, "k")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    g = gcd(k, n)
    return sum(mobius(k // d) * d for d in _divisors(g))


def reg(k: int, n: int) -> int:
    """Elementary periodic function: ``k`` if ``k`` divides ``n``, else 0."""
    _check_positive(k, "k")
    _check_positive(n)
    return k if n % k == 0 else 0


class IntPolynomial:
    """Immutable integer polynomial; ``coefficients[i]`` is the coefficient of x**i."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Sequence[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def is_palindromic(self) -> bool:
        return self._c == self._c[::-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self._c), len(other._c))
        a = self._c + (0,) * (n - len(self._c))
        b = other._c + (0,) * (n - len(other._c))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-x for x in self._c])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self._c or not other._c:
            return IntPolynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __pow__(self, e: int) -> IntPolynomial:
        result = IntPolynomial([1])
        for _ in range(e):
            result = result * self
        return result

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Quotient and remainder by a monic divisor (stays inside the integers)."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self._c)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i]
            if q:
                quot[i - dd] = q
                for j, c in enumerate(divisor._c):
                    rem[i - dd + j] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([i * c for i, c in enumerate(self._c)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                body = xpart if a == 1 else f"{a}*{xpart}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPolynomial:
    """The ``k``-th cyclotomic polynomial, by exact division of x**k - 1."""
    _check_positive(k, "k")
    num = IntPolynomial.monomial(k) - IntPolynomial([1])
    for d in _divisors(k)[:-1]:
        num, rem = num.divmod_monic(cyclotomic(d))
        assert rem.degree < 0
    return num


def poly_product(polys) -> IntPolynomial:
    return prod(polys, start=IntPolynomial([1]))
