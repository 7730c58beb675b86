"""
matrix.py - contains the Matrix dataclass, a dense immutable matrix over Z_p.

Entries are stored row-major in a read-only numpy int64 array, always reduced
into [0, p-1]. All positions exposed to callers are 1-based.
"""

from dataclasses import dataclass, field
from numbers import Integral
from typing import *

import galois
import numpy as np

from ..gf.field import FieldElement, PrimeField, as_field
from ..exceptions.Exceptions import (
    DimensionMismatchError,
    FieldMismatchError,
    IndexRangeError,
)


def _to_int(value) -> int:
    if isinstance(value, FieldElement):
        return value.value
    return int(value)


@dataclass(frozen=True, eq=False)
class Matrix:
    """
    Matrix - a rows x cols matrix over a PrimeField.

    Zero-row matrices are allowed; they stand for the generator of the
    zero-dimensional code.
    """

    entries: np.ndarray = field(
        metadata={"description": "rows x cols array of residues in [0, p-1]."},
        repr=False,
    )
    field: PrimeField = field(metadata={"description": "The field of the entries."})

    def __post_init__(self):
        fld = as_field(self.field)
        entries = self.entries
        if isinstance(entries, np.ndarray) and entries.dtype.kind in "iu":
            arr = entries.astype(np.int64)
        else:
            rows = [[_to_int(v) for v in row] for row in entries]
            widths = {len(row) for row in rows}
            if len(widths) > 1:
                raise DimensionMismatchError(
                    f"Ragged rows: found row widths {sorted(widths)}."
                )
            if rows:
                arr = np.array(rows, dtype=np.int64)
            else:
                arr = np.zeros((0, 0), dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatchError(
                f"Matrix entries must be 2-dimensional, got {arr.ndim} dimensions."
            )
        arr = np.mod(arr, fld.p)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "field", fld)

    # --- construction helpers ---

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], field, cols: int = None):
        """
        Build a matrix from nested sequences of ints or FieldElements.

        cols is only needed to give a zero-row matrix its width.
        """
        if len(rows) == 0:
            return cls(np.zeros((0, cols or 0), dtype=np.int64), field)
        return cls(rows, field)

    @classmethod
    def column_vector(cls, values: Sequence, field):
        """
        Build a len(values) x 1 column.
        """
        return cls(
            np.array([[_to_int(v)] for v in values], dtype=np.int64).reshape(-1, 1),
            field,
        )

    @classmethod
    def row_vector(cls, values: Sequence, field):
        """
        Build a 1 x len(values) row.
        """
        return cls(
            np.array([_to_int(v) for v in values], dtype=np.int64).reshape(1, -1),
            field,
        )

    # --- shape ---

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    # --- access (1-based) ---

    def _check_row(self, i: int) -> None:
        if not 1 <= i <= self.rows:
            raise IndexRangeError(f"Row {i} outside 1..{self.rows}.")

    def _check_col(self, j: int) -> None:
        if not 1 <= j <= self.cols:
            raise IndexRangeError(f"Column {j} outside 1..{self.cols}.")

    def entry(self, i: int, j: int) -> FieldElement:
        self._check_row(i)
        self._check_col(j)
        return FieldElement(int(self.entries[i - 1, j - 1]), self.field)

    def row(self, i: int) -> "Matrix":
        self._check_row(i)
        return Matrix(self.entries[i - 1 : i, :], self.field)

    def column(self, j: int) -> "Matrix":
        self._check_col(j)
        return Matrix(self.entries[:, j - 1 : j], self.field)

    def select_columns(self, positions: Iterable[int]) -> "Matrix":
        """
        Columns at the given 1-based positions, in the given order.
        """
        positions = list(positions)
        for j in positions:
            self._check_col(j)
        idx = [j - 1 for j in positions]
        return Matrix(self.entries[:, idx].reshape(self.rows, len(idx)), self.field)

    def to_list(self) -> List[List[int]]:
        return self.entries.tolist()

    def to_vector(self) -> Tuple[FieldElement, ...]:
        """
        Flatten a single row or column into a tuple of FieldElements.
        """
        if self.rows != 1 and self.cols != 1:
            raise DimensionMismatchError(
                f"to_vector needs a single row or column, got {self.rows}x{self.cols}."
            )
        return tuple(FieldElement(int(v), self.field) for v in self.entries.ravel())

    def is_identity(self) -> bool:
        return self.rows == self.cols and bool(
            np.array_equal(self.entries, np.eye(self.rows, dtype=np.int64))
        )

    def is_zero(self) -> bool:
        return not bool(self.entries.any())

    def galois_array(self) -> galois.FieldArray:
        """
        The entries as a galois FieldArray over the same field.
        """
        return self.field.array_class(self.entries)

    @classmethod
    def from_galois(cls, array: galois.FieldArray, field) -> "Matrix":
        return cls(np.asarray(array.view(np.ndarray), dtype=np.int64), field)

    # --- algebra ---

    def _same_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatchError(
                f"Cannot combine matrices over {self.field} and {other.field}."
            )

    def transpose(self) -> "Matrix":
        return Matrix(self.entries.T.copy(), self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}."
            )
        return Matrix((self.entries @ other.entries) % self.p, self.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f"Cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}."
            )
        return Matrix(self.entries + other.entries, self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.entries, self.field)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, FieldElement):
            if scalar.field != self.field:
                raise FieldMismatchError(
                    f"Cannot scale a matrix over {self.field} by an element of {scalar.field}."
                )
            scalar = scalar.value
        if not isinstance(scalar, Integral):
            return NotImplemented
        return Matrix(self.entries * (int(scalar) % self.p), self.field)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and bool(
            np.array_equal(self.entries, other.entries)
        )

    __hash__ = None

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.to_list())

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.to_list(),
        }

    @classmethod
    def from_dict(cls, data: dict):
        """
        from_dict - create a Matrix from {"p": ..., "entries": ...}.

        "cols" is only consulted for zero-row matrices.
        """
        required_keys = {"p", "entries"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        return cls.from_rows(data["entries"], PrimeField(data["p"]), data.get("cols"))
