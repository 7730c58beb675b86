"""
burst.py - contains the Erasure marker and the BurstPattern and ReceivedWord
dataclasses for the codec module.
"""

from dataclasses import dataclass, field, asdict
from typing import *

from ...base.cyclic import as_cyclic_interval, cyclic_interval
from ...gf.field import FieldElement, PrimeField, as_field
from ...exceptions.Exceptions import (
    BurstTooLongError,
    FieldMismatchError,
    IndexRangeError,
    InputError,
    NotABurstError,
)

ERASURE_SIGIL = "?"


class Erasure:
    """
    Erasure - marks a symbol whose value was lost but whose position is known.

    There is a single instance, ERASURE.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ERASURE"

    def __str__(self) -> str:
        return ERASURE_SIGIL

    def __reduce__(self):
        return (Erasure, ())


ERASURE = Erasure()

Symbol = Union[FieldElement, Erasure]


@dataclass(frozen=True)
class BurstPattern:
    """
    BurstPattern - the cyclic interval start, start+1, ..., start+length-1 of
    erased positions (1-based, wrapping from n back to 1).
    """

    start: int = field(metadata={"description": "1-based first erased position."})
    length: int = field(metadata={"description": "Number of erased positions."})

    def __post_init__(self):
        if not isinstance(self.start, int) or self.start < 1:
            raise TypeError(f"BurstPattern start must be a positive int, not {self.start!r}")
        if not isinstance(self.length, int) or self.length < 0:
            raise TypeError(
                f"BurstPattern length must be a non-negative int, not {self.length!r}"
            )

    def __str__(self) -> str:
        return f"burst(start={self.start}, length={self.length})"

    def positions(self, n: int) -> Tuple[int, ...]:
        """
        The erased 1-based positions in a word of length n.

        Raises:
            BurstTooLongError: If the burst does not fit in n positions.
            IndexRangeError: If the start lies outside 1..n.
        """
        if self.length > n:
            raise BurstTooLongError(f"A burst of length {self.length} does not fit in n={n}.")
        if self.start > n:
            raise IndexRangeError(f"Burst start {self.start} is outside 1..{n}.")
        return cyclic_interval(self.start, self.length, n)

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
        required_keys = {"start", "length"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        return cls(start=data["start"], length=data["length"])


@dataclass(frozen=True)
class ReceivedWord:
    """
    ReceivedWord - n symbols, each a FieldElement or ERASURE, whose erased
    positions form a single cyclic burst.
    """

    symbols: Tuple[Symbol, ...] = field(
        metadata={"description": "The received symbols, ERASURE where lost."}
    )
    field: PrimeField = field(
        metadata={"description": "The field of the known symbols."}, repr=False
    )

    def __post_init__(self):
        fld = as_field(self.field)
        normalised = []
        for q, s in enumerate(self.symbols, start=1):
            if isinstance(s, Erasure):
                normalised.append(ERASURE)
            elif isinstance(s, FieldElement):
                if s.field != fld:
                    raise FieldMismatchError(
                        f"Symbol {q} is in {s.field}, the word is over {fld}."
                    )
                normalised.append(s)
            else:
                normalised.append(FieldElement(int(s), fld))
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "symbols", tuple(normalised))
        if as_cyclic_interval(self.erased_positions, self.n) is None:
            raise NotABurstError(
                f"Erased positions {list(self.erased_positions)} are not cyclically contiguous."
            )

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def erased_positions(self) -> Tuple[int, ...]:
        return tuple(q for q, s in enumerate(self.symbols, start=1) if s is ERASURE)

    @property
    def known_positions(self) -> Tuple[int, ...]:
        return tuple(q for q, s in enumerate(self.symbols, start=1) if s is not ERASURE)

    @property
    def burst(self) -> BurstPattern:
        """
        The erased burst; BurstPattern(1, 0) when nothing is erased.
        """
        start, length = as_cyclic_interval(self.erased_positions, self.n)
        return BurstPattern(start=start, length=length)

    def symbol(self, q: int) -> Symbol:
        return self.symbols[q - 1]

    def __str__(self) -> str:
        return self.to_csv()

    def to_csv(self) -> str:
        return ",".join(str(s) for s in self.symbols)

    def to_dict(self) -> dict:
        return {
            "p": self.field.p,
            "symbols": [None if s is ERASURE else s.value for s in self.symbols],
        }

    @classmethod
    def from_csv(cls, text: str, field: Union[PrimeField, int]) -> "ReceivedWord":
        """
        Parse "1,0,?" style input. "?" marks an erasure; other tokens must be
        integers in [0, p-1].

        Raises:
            InputError: On an unparseable or out-of-range token.
            NotABurstError: If the erasures are not cyclically contiguous.
        """
        fld = as_field(field)
        symbols = []
        for q, token in enumerate(text.strip().split(","), start=1):
            token = token.strip()
            if token == ERASURE_SIGIL:
                symbols.append(ERASURE)
                continue
            try:
                value = int(token)
            except ValueError:
                raise InputError(f"Symbol {q}: {token!r} is neither a digit nor '{ERASURE_SIGIL}'.")
            if not 0 <= value < fld.p:
                raise InputError(f"Symbol {q}: {value} is outside [0, {fld.p - 1}].")
            symbols.append(FieldElement(value, fld))
        return cls(symbols=tuple(symbols), field=fld)

    @classmethod
    def from_dict(cls, data: dict):
        required_keys = {"p", "symbols"}
        if not required_keys.issubset(data.keys()):
            raise ValueError(
                f"Dictionary must contain the following keys: {required_keys}"
            )
        fld = PrimeField(data["p"])
        return cls(
            symbols=tuple(ERASURE if s is None else s for s in data["symbols"]),
            field=fld,
        )
