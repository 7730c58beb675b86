"""
window_report.py - contains the WindowReport dataclass for the goodness module.
"""

from dataclasses import dataclass, field, asdict
from typing import *


@dataclass(order=True, frozen=True)
class WindowReport:
    """
    WindowReport - the outcome of checking one window of k cyclically
    consecutive columns.

    made with order=True so reports sort by start position.
    """

    window_start: int = field(
        metadata={"description": "1-based position of the first column of the window."}
    )
    columns: Tuple[int, ...] = field(
        metadata={"description": "The k cyclically consecutive 1-based column positions."},
        compare=False,
    )
    rank: int = field(
        metadata={"description": "Rank of the k x k window."}, compare=False
    )
    ok: bool = field(
        metadata={"description": "True iff the window has full rank k."},
        compare=False,
    )

    def __post_init__(self):
        if not isinstance(self.window_start, int) or self.window_start < 1:
            raise TypeError(
                f"WindowReport window_start must be a positive int, not {self.window_start!r}"
            )
        object.__setattr__(self, "columns", tuple(int(c) for c in self.columns))
        if not isinstance(self.rank, int):
            raise TypeError(f"WindowReport rank must be an int, not {type(self.rank)}")

    def __str__(self) -> str:
        cols = ",".join(str(c) for c in self.columns)
        return f"window {self.window_start} {{{cols}}}: rank {self.rank}{'' if self.ok else ' FAIL'}"

    def to_dict(self) -> dict:
        data = asdict(self)
        data["columns"] = list(self.columns)
        return data

    def keys(self):
        return self.to_dict().keys()

    def values(self):
        return self.to_dict().values()

    def items(self):
        return self.to_dict().items()

    @classmethod
    def from_dict(cls, data: dict):
        required_keys = {"window_start", "columns", "rank", "ok"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        return cls(**{key: data[key] for key in required_keys})
