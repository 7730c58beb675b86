"""
channel.py - contains the ChannelModel dataclass: a seeded source of burst
erasure patterns for the simulator.
"""

from dataclasses import dataclass, field, asdict
from typing import *

import numpy as np

from ...codec.data_classes.burst import BurstPattern
from ...exceptions.Exceptions import ChannelError

ChannelKind = Literal["fixed-burst", "uniform-start", "random-length"]

# spec string prefix -> kind
SPEC_PREFIXES = {
    "fixed": "fixed-burst",
    "uniform": "uniform-start",
    "random": "random-length",
}

MAX_SEED = 2**64


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    """
    The PCG64 generator for one simulation trial, seeded from (seed, trial).

    Trials never share state, so results do not depend on thread count.
    """
    return np.random.Generator(np.random.PCG64([seed, trial]))


@dataclass(frozen=True)
class ChannelModel:
    """
    ChannelModel - draws one burst per trial.

    fixed-burst: always (start, length).
    uniform-start: fixed length, start uniform on 1..n.
    random-length: length uniform on 0..max_length, start uniform on 1..n.
    """

    kind: ChannelKind = field(metadata={"description": "The kind of burst source."})
    seed: int = field(
        default=0, metadata={"description": "64-bit seed for messages and bursts."}
    )
    start: int = field(
        default=None, metadata={"description": "Burst start (fixed-burst only)."}
    )
    length: int = field(
        default=None,
        metadata={"description": "Burst length (fixed-burst and uniform-start)."},
    )
    max_length: int = field(
        default=None, metadata={"description": "Largest burst length (random-length only)."}
    )

    def __post_init__(self):
        if self.kind not in SPEC_PREFIXES.values():
            raise ChannelError(
                f"Invalid channel kind {self.kind}. Valid kinds are: {list(SPEC_PREFIXES.values())}."
            )
        if not isinstance(self.seed, int) or not 0 <= self.seed < MAX_SEED:
            raise ChannelError(f"Seed must be an integer in [0, 2^64), got {self.seed!r}.")
        needed = {
            "fixed-burst": ("start", "length"),
            "uniform-start": ("length",),
            "random-length": ("max_length",),
        }[self.kind]
        for name in needed:
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ChannelError(
                    f"{self.kind} channel needs a non-negative integer {name}, got {value!r}."
                )
        if self.kind == "fixed-burst" and self.start < 1:
            raise ChannelError(f"Burst start must be >= 1, got {self.start}.")

    def __str__(self) -> str:
        if self.kind == "fixed-burst":
            return f"fixed:{self.start}:{self.length}"
        if self.kind == "uniform-start":
            return f"uniform:{self.length}"
        return f"random:{self.max_length}"

    def validate_for(self, n: int, k: int) -> None:
        """
        Check that the channel can produce bursts for an [n,k] code.

        Raises:
            ChannelError: If a burst would not fit in n positions, or a
                random-length maximum exceeds n - k.
        """
        if self.kind == "fixed-burst":
            if self.start > n or self.length > n:
                raise ChannelError(
                    f"Burst {self} does not fit a word of length {n}."
                )
        elif self.kind == "uniform-start":
            if self.length > n:
                raise ChannelError(f"Burst length {self.length} exceeds n={n}.")
        elif self.max_length > n - k:
            raise ChannelError(
                f"random-length maximum {self.max_length} exceeds n - k = {n - k}."
            )

    def sample(self, n: int, k: int, rng: np.random.Generator) -> BurstPattern:
        """
        Draw one burst for a word of length n.

        Params:
            n (int): Code length.
            k (int): Code dimension.
            rng (np.random.Generator): The trial's generator.

        Returns:
            BurstPattern: The burst.
        """
        self.validate_for(n, k)
        if self.kind == "fixed-burst":
            return BurstPattern(start=self.start, length=self.length)
        if self.kind == "uniform-start":
            return BurstPattern(start=int(rng.integers(1, n + 1)), length=self.length)
        length = int(rng.integers(0, self.max_length + 1))
        return BurstPattern(start=int(rng.integers(1, n + 1)), length=length)

    @classmethod
    def from_spec(cls, spec: str, seed: int = 0) -> "ChannelModel":
        """
        Parse a channel spec: "fixed:START:LENGTH", "uniform:LENGTH" or "random:MAX".

        Raises:
            ChannelError: On an unknown kind or malformed numbers.
        """
        parts = spec.strip().split(":")
        kind = SPEC_PREFIXES.get(parts[0])
        if kind is None:
            raise ChannelError(
                f"Unknown channel {parts[0]!r}. Use one of: fixed:START:LENGTH, uniform:LENGTH, random:MAX."
            )
        expected = 3 if kind == "fixed-burst" else 2
        if len(parts) != expected:
            raise ChannelError(f"Channel spec {spec!r} needs {expected - 1} number(s).")
        try:
            numbers = [int(x) for x in parts[1:]]
        except ValueError:
            raise ChannelError(f"Channel spec {spec!r} contains a non-integer.")
        if kind == "fixed-burst":
            return cls(kind=kind, seed=seed, start=numbers[0], length=numbers[1])
        if kind == "uniform-start":
            return cls(kind=kind, seed=seed, length=numbers[0])
        return cls(kind=kind, seed=seed, max_length=numbers[0])

    def to_dict(self) -> dict:
        return asdict(self)

    def keys(self):
        return self.to_dict().keys()

    def values(self):
        return self.to_dict().values()

    def items(self):
        return self.to_dict().items()

    @classmethod
    def from_dict(cls, data: dict):
        required_keys = {"kind"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        return cls(**data)
