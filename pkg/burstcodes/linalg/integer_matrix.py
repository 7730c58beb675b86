"""
integer_matrix.py - contains the IntegerMatrix dataclass, an exact matrix over Z.

Used where a statement is about integer matrices (unimodularity, integer
inverses) rather than about residues mod p.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import *

from .matrix import Matrix
from ..gf.field import PrimeField, as_field
from ..exceptions.Exceptions import DimensionMismatchError, SingularMatrixError


@dataclass(frozen=True)
class IntegerMatrix:
    """
    IntegerMatrix - a square or rectangular matrix with big-int entries.
    """

    entries: Tuple[Tuple[int, ...], ...] = field(
        metadata={"description": "Row-major integer entries."}
    )

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if len({len(row) for row in rows}) > 1:
            raise DimensionMismatchError("IntegerMatrix rows must all have the same width.")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        # 1-based, as everywhere else
        i, j = ij
        return self.entries[i - 1][j - 1]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.entries)))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}."
            )
        cols = list(zip(*other.entries))
        return IntegerMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def determinant(self) -> int:
        """
        Exact determinant by fraction-free (Bareiss) elimination.
        """
        n = self.rows
        if n != self.cols:
            raise DimensionMismatchError("determinant needs a square matrix.")
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        """
        True iff the matrix has an integer inverse, i.e. determinant is +1 or -1.
        """
        return self.rows == self.cols and abs(self.determinant()) == 1

    def rational_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """
        Inverse over the rationals by Gauss-Jordan elimination.

        Raises:
            SingularMatrixError: If the determinant is zero.
        """
        n = self.rows
        if n != self.cols:
            raise DimensionMismatchError("rational_inverse needs a square matrix.")
        a = [
            [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.entries)
        ]
        for c in range(n):
            pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
            if pivot is None:
                raise SingularMatrixError("Integer matrix is singular.")
            a[c], a[pivot] = a[pivot], a[c]
            lead = a[c][c]
            a[c] = [v / lead for v in a[c]]
            for r in range(n):
                if r != c and a[r][c] != 0:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return tuple(tuple(row[n:]) for row in a)

    def integer_inverse(self) -> Optional["IntegerMatrix"]:
        """
        The inverse if it is integral, otherwise None.
        """
        inv = self.rational_inverse()
        if any(v.denominator != 1 for row in inv for v in row):
            return None
        return IntegerMatrix(tuple(tuple(int(v) for v in row) for row in inv))

    def reduce(self, field: Union[PrimeField, int]) -> Matrix:
        """
        Reduce every entry mod p. Big ints are reduced before reaching numpy.
        """
        fld = as_field(field)
        return Matrix.from_rows(
            [[v % fld.p for v in row] for row in self.entries], fld, self.cols
        )

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)
