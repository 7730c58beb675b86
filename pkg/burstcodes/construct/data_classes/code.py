"""
code.py - contains the Code dataclass for the construct module.
"""

from dataclasses import dataclass, field
from typing import *

from ...base.construction_schema import CONSTRUCTION_SCHEMA
from ...gf.field import PrimeField
from ...goodness.checks import failing_windows
from ...linalg.matrix import Matrix
from ...linalg.operations import is_systematic
from ...exceptions.Exceptions import NotGoodError, NotSystematicError

Provenance = Literal[
    "recursive",
    "explicit",
    "column-extended",
    "extended-dim",
    "extended-red",
    "manual",
]


@dataclass(frozen=True, eq=False)
class Code:
    """
    Code - an optimal [n,k] code over Z_p, i.e. one with a good k x n generator
    matrix. Every burst of n - k erasures, wrap-around included, can be corrected.

    Goodness is checked on construction, so a Code always holds a good matrix.
    """

    G: Matrix = field(metadata={"description": "The good k x n generator matrix."})
    provenance: Provenance = field(
        default="manual",
        metadata={"description": "Which construction produced G."},
    )
    field: PrimeField = field(
        default=None,
        metadata={"description": "The field of G. Filled from G when omitted."},
    )

    def __post_init__(self):
        if not isinstance(self.G, Matrix):
            raise TypeError(f"Code G must be a Matrix, not {type(self.G)}")
        if self.provenance not in CONSTRUCTION_SCHEMA:
            raise ValueError(
                f"Invalid provenance {self.provenance}. Valid provenances are: {list(CONSTRUCTION_SCHEMA.keys())}."
            )
        if self.field is None:
            object.__setattr__(self, "field", self.G.field)
        elif self.field != self.G.field:
            raise TypeError(f"Code field {self.field} does not match G over {self.G.field}.")
        if self.G.rows < 1 or self.G.rows > self.G.cols:
            raise ValueError(
                f"Code needs 1 <= k <= n, got a {self.G.rows}x{self.G.cols} generator."
            )
        if CONSTRUCTION_SCHEMA[self.provenance]["systematic"] and not is_systematic(
            self.G
        ):
            raise NotSystematicError(
                f"A {self.provenance} code must start with I_{self.G.rows}."
            )
        failing = failing_windows(self.G)
        if failing:
            raise NotGoodError(
                f"Generator is not good: windows {[w.window_start for w in failing]} are dependent.",
                failing_windows=failing,
            )

    @property
    def k(self) -> int:
        return self.G.rows

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def redundancy(self) -> int:
        """
        n - k, the longest correctable burst.
        """
        return self.n - self.k

    @property
    def is_systematic(self) -> bool:
        return is_systematic(self.G)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] code over {self.field} ({self.provenance})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.G == other.G

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "n": self.n,
            "provenance": self.provenance,
            "G": self.G.to_list(),
        }

    def keys(self):
        return self.to_dict().keys()

    def values(self):
        return self.to_dict().values()

    def items(self):
        return self.to_dict().items()

    @classmethod
    def manual(cls, G: Matrix) -> "Code":
        """
        Wrap a user-supplied matrix, checking that it is good.
        """
        return cls(G=G, provenance="manual")

    @classmethod
    def from_dict(cls, data: dict):
        """
        from_dict - create a Code from {"p", "G"} and an optional "provenance".
        """
        required_keys = {"p", "G"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        return cls(
            G=Matrix.from_rows(data["G"], PrimeField(data["p"])),
            provenance=data.get("provenance", "manual"),
        )
