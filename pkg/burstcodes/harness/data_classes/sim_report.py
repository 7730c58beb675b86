"""
sim_report.py - contains the SimReport dataclass returned by run_simulation.
"""

import json
from dataclasses import dataclass, field
from typing import *

from pandas import DataFrame

from ...base.limits import LIMITS


@dataclass(frozen=True)
class SimReport:
    """
    SimReport - tallies from one simulation run.

    Histograms are indexed by burst start: entry q-1 counts trials whose
    burst started at position q.
    """

    p: int = field(metadata={"description": "Field size of the simulated code."})
    k: int = field(metadata={"description": "Dimension of the simulated code."})
    n: int = field(metadata={"description": "Length of the simulated code."})
    channel: str = field(metadata={"description": "The channel spec string."})
    seed: int = field(metadata={"description": "The simulation seed."})
    trials: int = field(metadata={"description": "Number of trials run."})
    successes: int = field(metadata={"description": "Trials decoded to the sent codeword."})
    failures: int = field(metadata={"description": "Trials that raised or decoded wrongly."})
    start_histogram: Tuple[int, ...] = field(
        metadata={"description": "Trials per burst start."}
    )
    failure_histogram: Tuple[int, ...] = field(
        metadata={"description": "Failures per burst start."}
    )
    wall_time: float = field(
        default=None, metadata={"description": "Elapsed seconds, if measured."}
    )

    def __post_init__(self):
        if self.successes + self.failures != self.trials:
            raise ValueError(
                f"successes ({self.successes}) + failures ({self.failures}) != trials ({self.trials})."
            )
        if len(self.start_histogram) != self.n or len(self.failure_histogram) != self.n:
            raise ValueError(f"Histograms must have n={self.n} entries.")
        object.__setattr__(self, "start_histogram", tuple(self.start_histogram))
        object.__setattr__(self, "failure_histogram", tuple(self.failure_histogram))

    def __str__(self) -> str:
        return (
            f"[{self.n},{self.k}] over Z_{self.p}, channel {self.channel}: "
            f"{self.successes}/{self.trials} decoded, {self.failures} failed"
        )

    def to_dict(self, include_timing: bool = False) -> dict:
        """
        JSON-ready dict. wall_time is left out unless include_timing is set,
        so two runs with the same seed serialise identically.
        """
        data = {
            "schema": LIMITS["json_schema_version"],
            "code": {"p": self.p, "k": self.k, "n": self.n},
            "channel": self.channel,
            "seed": self.seed,
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "start_histogram": list(self.start_histogram),
            "failure_histogram": list(self.failure_histogram),
        }
        if include_timing:
            data["wall_time"] = self.wall_time
        return data

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True)

    def keys(self):
        return self.to_dict().keys()

    def values(self):
        return self.to_dict().values()

    def items(self):
        return self.to_dict().items()

    def to_dataframe(self) -> DataFrame:
        """
        One row per burst start with its trial and failure counts.
        """
        return DataFrame(
            {
                "start": range(1, self.n + 1),
                "trials": self.start_histogram,
                "failures": self.failure_histogram,
            }
        )

    @classmethod
    def from_dict(cls, data: dict):
        required_keys = {"code", "channel", "seed", "trials", "successes", "failures"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        return cls(
            p=data["code"]["p"],
            k=data["code"]["k"],
            n=data["code"]["n"],
            channel=data["channel"],
            seed=data["seed"],
            trials=data["trials"],
            successes=data["successes"],
            failures=data["failures"],
            start_histogram=tuple(data["start_histogram"]),
            failure_histogram=tuple(data["failure_histogram"]),
            wall_time=data.get("wall_time"),
        )
