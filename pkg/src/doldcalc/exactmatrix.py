"""Small dense matrices over the rationals with exact arithmetic."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["ExactMatrix", "block_diag"]


def _norm(x):
    # keep ints as ints, collapse integral Fractions
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return int(x)


class ExactMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(_norm(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> ExactMatrix:
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return len(self.rows) == len(self.rows[0])

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix(zip(*self.rows))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def scale(self, c) -> ExactMatrix:
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def __pow__(self, e: int) -> ExactMatrix:
        if not self.is_square or e < 0:
            raise ValueError("only non-negative powers of square matrices")
        result = ExactMatrix.identity(self.shape[0])
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def trace(self):
        return sum(self.rows[i][i] for i in range(min(self.shape)))

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for r in self.rows for x in r)

    def is_skew(self) -> bool:
        return self.is_square and self == -self.T

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        a = [[Fraction(x) for x in r] for r in self.rows]
        n = len(a)
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            prev = a[k][k]
        return _norm(sign * a[n - 1][n - 1])

    def inverse(self) -> ExactMatrix:
        """Gauss-Jordan inverse over the rationals."""
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.shape[0]
        aug = [
            [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        for c in range(n):
            piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
        return ExactMatrix([row[n:] for row in aug])

    def to_grid(self) -> str:
        cells = [[str(x) for x in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def block_diag(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    n = sum(b.shape[0] for b in blocks)
    m = sum(b.shape[1] for b in blocks)
    out = [[0] * m for _ in range(n)]
    i0 = j0 = 0
    for b in blocks:
        for i, row in enumerate(b.rows):
            out[i0 + i][j0 : j0 + len(row)] = row
        i0 += b.shape[0]
        j0 += b.shape[1]
    return ExactMatrix(out)
