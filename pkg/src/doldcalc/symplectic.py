"""Integer symplectic matrices with a prescribed cyclotomic spectrum.

For ``k >= 3`` a matrix with characteristic polynomial ``Phi_k`` is built in
the ring of integers ``Z[xi]`` of the ``k``-th cyclotomic field:

1. power basis ``beta = (1, xi, ..., xi^(2g-1))`` and its conjugate
   ``beta~`` (``xi -> 1/xi``);
2. trace-dual basis ``beta'`` from the trace form ``Tr(xi^(i+j))``;
3. ``Delta = xi^(1-g) Phi_k'(xi)`` and the integer skew matrix ``M`` with
   ``M beta~ = Delta beta'``;
4. integer ``Q`` with ``M = Q^T Omega Q`` (integral Darboux reduction);
5. ``A`` with ``A alpha = xi alpha`` for ``alpha = Q beta``.

Coordinates are row vectors in the power basis throughout, so a vector of
field elements is written as the matrix whose rows are their coordinates.
The symplectic form uses the paired layout, blocks ``[[0, 1], [-1, 0]]``
down the diagonal, which makes direct sums symplectic for free.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .doldcore import DEFAULT_HORIZON_CAP, RootSpectrum, horizon, lefschetz_of
from .exactmatrix import ExactMatrix, block_diag
from .numtheory import IntPolynomial, cyclotomic, poly_product, ramanujan_sum, totient

__all__ = [
    "ConstructionError",
    "CyclotomicConstruction",
    "CyclotomicElement",
    "RealizationReport",
    "SymplecticForm",
    "char_poly",
    "construct_cyclotomic",
    "cyclotomic_symplectic",
    "darboux_factor",
    "field_mul",
    "is_symplectic",
    "lefschetz_sequence",
    "realize_spectrum",
    "skew_gram_matrix",
    "trace_form_matrix",
    "verify_realization",
]


class ConstructionError(ArithmeticError):
    """A construction postcondition failed; this is a bug, not bad input."""


@dataclass(frozen=True)
class CyclotomicElement:
    """Element of Q(xi), xi a primitive ``k``-th root of unity.

    ``coeffs[i]`` is the coefficient of ``xi**i``; always reduced modulo
    ``Phi_k`` so ``len(coeffs) == totient(k)``.
    """

    k: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != totient(self.k):
            raise ValueError("coefficient vector must have length totient(k)")

    @classmethod
    def reduce(cls, k: int, coeffs: Sequence) -> CyclotomicElement:
        f = cyclotomic(k).coefficients
        n = len(f) - 1
        c = [Fraction(x) for x in coeffs]
        for i in range(len(c) - 1, n - 1, -1):
            q = c[i]
            if q:
                for j in range(n + 1):
                    c[i - n + j] -= q * f[j]
        c = (c + [Fraction(0)] * n)[:n]
        return cls(k, tuple(c))

    @classmethod
    def power(cls, k: int, m: int) -> CyclotomicElement:
        """``xi**m`` for any integer ``m`` (negative powers via ``xi**k == 1``)."""
        m %= k
        return cls.reduce(k, [0] * m + [1])

    @classmethod
    def one(cls, k: int) -> CyclotomicElement:
        return cls.power(k, 0)

    def __add__(self, other: CyclotomicElement) -> CyclotomicElement:
        _same_field(self, other)
        return CyclotomicElement(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> CyclotomicElement:
        return CyclotomicElement(self.k, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: CyclotomicElement) -> CyclotomicElement:
        return field_mul(self.k, self, other)


def _same_field(x: CyclotomicElement, y: CyclotomicElement, k: int | None = None) -> None:
    if x.k != y.k or (k is not None and x.k != k):
        raise ValueError(f"elements live in different cyclotomic fields ({x.k}, {y.k})")


def field_mul(k: int, x: CyclotomicElement, y: CyclotomicElement) -> CyclotomicElement:
    _same_field(x, y, k)
    prod = [Fraction(0)] * (len(x.coeffs) + len(y.coeffs) - 1)
    for i, a in enumerate(x.coeffs):
        if a:
            for j, b in enumerate(y.coeffs):
                prod[i + j] += a * b
    return CyclotomicElement.reduce(k, prod)


def _combine(k: int, coords: Sequence, basis: Sequence[CyclotomicElement]) -> CyclotomicElement:
    acc = CyclotomicElement(k, (Fraction(0),) * totient(k))
    for c, b in zip(coords, basis):
        if c:
            acc = acc + b.scale(c)
    return acc


def _coord_matrix(elements: Sequence[CyclotomicElement]) -> ExactMatrix:
    return ExactMatrix([e.coeffs for e in elements])


def _require_k(k: int) -> None:
    if k < 3:
        raise ValueError("cyclotomic construction needs k >= 3; k = 1, 2 use +-I_2 blocks")


def trace_form_matrix(k: int) -> ExactMatrix:
    """``Tr(xi^i xi^j) = c_k(i + j)`` over the power basis."""
    _require_k(k)
    n = totient(k)
    return ExactMatrix([[ramanujan_sum(k, i + j) for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class CyclotomicConstruction:
    """All intermediate objects of the construction for one ``k``."""

    k: int
    trace_form: ExactMatrix
    dual_basis: tuple[CyclotomicElement, ...]
    delta: CyclotomicElement
    delta_dual: ExactMatrix
    conj_basis: ExactMatrix
    skew: ExactMatrix
    darboux: ExactMatrix
    matrix: ExactMatrix = field(repr=False)


@lru_cache(maxsize=None)
def construct_cyclotomic(k: int) -> CyclotomicConstruction:
    _require_k(k)
    n = totient(k)
    g = n // 2
    f = cyclotomic(k)

    beta = [CyclotomicElement.power(k, i) for i in range(n)]
    conj = _coord_matrix([CyclotomicElement.power(k, -i) for i in range(n)])

    mtr = trace_form_matrix(k)
    mtr_inv = mtr.inverse()
    # dual vectors are the columns of the inverse trace form
    dual = tuple(_combine(k, col, beta) for col in zip(*mtr_inv.rows))

    fprime = CyclotomicElement.reduce(k, f.derivative().coefficients)
    delta = CyclotomicElement.power(k, 1 - g) * fprime
    delta_dual = _coord_matrix([delta * b for b in dual])

    M = delta_dual @ conj.inverse()
    if not M.is_integer():
        raise ConstructionError(f"skew Gram matrix for k={k} is not integral")
    if not M.is_skew():
        raise ConstructionError(f"skew Gram matrix for k={k} is not skew-symmetric")
    if M.det() not in (1, -1):
        raise ConstructionError(f"skew Gram matrix for k={k} is not unimodular")

    Q = darboux_factor(M)
    alpha = [_combine(k, row, beta) for row in Q.rows]
    xi = CyclotomicElement.power(k, 1)
    A = _coord_matrix([xi * a for a in alpha]) @ Q.inverse()

    if not A.is_integer():
        raise ConstructionError(f"matrix for k={k} is not integral")
    if not is_symplectic(A, SymplecticForm(n)):
        raise ConstructionError(f"matrix for k={k} is not symplectic")
    if char_poly(A) != f:
        raise ConstructionError(f"matrix for k={k} has the wrong characteristic polynomial")
    return CyclotomicConstruction(k, mtr, dual, delta, delta_dual, conj, M, Q, A)


def skew_gram_matrix(k: int) -> ExactMatrix:
    return construct_cyclotomic(k).skew


def cyclotomic_symplectic(k: int) -> ExactMatrix:
    """Integer symplectic matrix of size ``totient(k)`` with char. poly ``Phi_k``."""
    return construct_cyclotomic(k).matrix


@dataclass(frozen=True)
class SymplecticForm:
    """Standard symplectic form of even ``size``.

    ``paired``: ``[[0, 1], [-1, 0]]`` blocks on the diagonal (basis a1, b1, a2, b2, ...).
    ``split``: ``[[0, I], [-I, 0]]`` (basis a1, ..., ag, b1, ..., bg).
    """

    size: int
    layout: str = "paired"

    def __post_init__(self):
        if self.size < 2 or self.size % 2:
            raise ValueError("symplectic form needs a positive even size")
        if self.layout not in ("paired", "split"):
            raise ValueError(f"unknown layout {self.layout!r}")

    @property
    def matrix(self) -> ExactMatrix:
        n, g = self.size, self.size // 2
        rows = [[0] * n for _ in range(n)]
        for i in range(g):
            if self.layout == "paired":
                a, b = 2 * i, 2 * i + 1
            else:
                a, b = i, g + i
            rows[a][b] = 1
            rows[b][a] = -1
        return ExactMatrix(rows)

    def permutation_to(self, layout: str) -> ExactMatrix:
        """Permutation ``P`` with ``P^T Omega_self P == Omega_layout``."""
        g = self.size // 2
        paired_of_split = [2 * i for i in range(g)] + [2 * i + 1 for i in range(g)]
        if layout == self.layout:
            return ExactMatrix.identity(self.size)
        perm = paired_of_split if self.layout == "paired" else _invert(paired_of_split)
        # column j of P is the basis vector e_{perm[j]}
        return ExactMatrix(
            [[int(perm[j] == i) for j in range(self.size)] for i in range(self.size)]
        )

    def convert(self, A: ExactMatrix, layout: str) -> ExactMatrix:
        """Rewrite a matrix symplectic for this form in the other layout's basis."""
        P = self.permutation_to(layout)
        return P.T @ A @ P


def _invert(perm: list[int]) -> list[int]:
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = i
    return out


def darboux_factor(M: ExactMatrix) -> ExactMatrix:
    """Integer unimodular ``Q`` with ``M == Q^T Omega Q`` (paired ``Omega``).

    Builds a symplectic basis of the lattice for the form ``x^T M y`` one
    pair at a time.  Row ``i`` is brought to a single entry by Euclidean
    steps on the remaining basis vectors; that entry is then a unit.  A unit
    ``+1`` is moved next to ``i``; a ``-1`` is fixed by exchanging the two
    vectors of the pair rather than negating one of them.
    """
    if not (M.is_square and M.is_integer() and M.is_skew()):
        raise ValueError("Darboux factorisation needs an integer skew-symmetric matrix")
    if M.det() not in (1, -1):
        raise ValueError("Darboux factorisation needs a unimodular matrix")
    n = M.shape[0]
    G = [list(r) for r in M.rows]
    P = [[int(i == j) for j in range(n)] for i in range(n)]

    def add(j: int, t: int, i: int) -> None:
        # basis vector v_j <- v_j + t v_i
        if not t:
            return
        P[j] = [x + t * y for x, y in zip(P[j], P[i])]
        G[j] = [x + t * y for x, y in zip(G[j], G[i])]
        for row in G:
            row[j] += t * row[i]

    def swap(i: int, j: int) -> None:
        if i == j:
            return
        P[i], P[j] = P[j], P[i]
        G[i], G[j] = G[j], G[i]
        for row in G:
            row[i], row[j] = row[j], row[i]

    for i in range(0, n, 2):
        while True:
            live = [j for j in range(i + 1, n) if G[i][j]]
            if not live:
                raise ConstructionError("degenerate form during Darboux reduction")
            p = min(live, key=lambda j: (abs(G[i][j]), j))
            if len(live) == 1:
                break
            for j in live:
                if j != p:
                    add(j, -(G[i][j] // G[i][p]), p)
        s = G[i][p]
        if abs(s) != 1:
            raise ConstructionError("pivot is not a unit; matrix is not unimodular")
        if s == 1:
            swap(p, i + 1)
        else:
            swap(i, p)
            swap(p, i + 1)
        for j in range(i + 2, n):
            add(j, -G[i][j], i + 1)
            add(j, G[i + 1][j], i)

    omega = SymplecticForm(n).matrix
    if ExactMatrix(G) != omega:
        raise ConstructionError("Darboux reduction did not reach the standard form")
    Q = ExactMatrix(P).inverse().T
    if not Q.is_integer() or Q.T @ omega @ Q != M:
        raise ConstructionError("Darboux factor failed verification")
    return Q


def char_poly(A: ExactMatrix) -> IntPolynomial:
    """``det(xI - A)`` by the Faddeev-LeVerrier recursion.

    For an integer matrix every division in the recursion is exact, so the
    whole computation stays in the integers.
    """
    if not A.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    if not A.is_integer():
        raise ValueError("char_poly expects an integer matrix")
    n = A.shape[0]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = ExactMatrix.zeros(n)
    identity = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = A @ Mk + identity.scale(coeffs[n - k + 1])
        t = (A @ Mk).trace()
        if t % k:
            raise ConstructionError("inexact division in Faddeev-LeVerrier")
        coeffs[n - k] = -t // k
    return IntPolynomial(coeffs)


def is_symplectic(A: ExactMatrix, omega: SymplecticForm) -> bool:
    W = omega.matrix
    if A.shape != W.shape:
        raise ValueError(f"matrix of shape {A.shape} does not match form of size {omega.size}")
    return A.T @ W @ A == W


def realize_spectrum(r: Mapping[int, int]) -> tuple[ExactMatrix, SymplecticForm]:
    """Block-diagonal integer symplectic matrix with root spectrum ``r``."""
    spectrum = r if isinstance(r, RootSpectrum) else RootSpectrum(r)
    problems = spectrum.violations()
    if problems:
        raise ValueError("spectrum is not realizable: " + "; ".join(problems))
    if not spectrum:
        raise ValueError("empty spectrum has no matrix (genus 0)")
    blocks = [ExactMatrix.identity(2)] * (spectrum[1] // 2)
    blocks += [-ExactMatrix.identity(2)] * (spectrum[2] // 2)
    for k, v in spectrum.items():
        if k >= 3:
            blocks += [cyclotomic_symplectic(k)] * v
    A = block_diag(blocks)
    return A, SymplecticForm(A.shape[0])


def lefschetz_sequence(A: ExactMatrix, count: int) -> list[int]:
    """``2 - trace(A^n)`` for ``n = 1 .. count``."""
    out = []
    P = A
    for _ in range(count):
        out.append(2 - P.trace())
        P = P @ A
    return out


@dataclass(frozen=True)
class RealizationReport:
    symplectic: bool
    char_poly: bool
    lefschetz: bool

    @property
    def ok(self) -> bool:
        return self.symplectic and self.char_poly and self.lefschetz


def verify_realization(
    A: ExactMatrix,
    omega: SymplecticForm,
    r: Mapping[int, int],
    cap: int = DEFAULT_HORIZON_CAP,
) -> RealizationReport:
    try:
        symp = is_symplectic(A, omega)
    except ValueError:
        symp = False
    expected = poly_product(cyclotomic(k) ** v for k, v in r.items() if v > 0)
    cp = A.is_square and A.is_integer() and char_poly(A) == expected
    h = horizon(r, cap)
    lef = A.is_square and lefschetz_sequence(A, h) == [
        lefschetz_of(r, n) for n in range(1, h + 1)
    ]
    return RealizationReport(symp, bool(cp), bool(lef))
