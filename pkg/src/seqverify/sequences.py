"""Integer sequence tables with explicit index ranges and provenance.

A :class:`SequenceTable` is a contiguous run of arbitrary-precision integer
values starting at ``offset``.  Lookups outside the stored range raise
:class:`SequenceRangeError` instead of returning silent zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator


class Provenance(Enum):
    """Where a table's values came from."""

    CLOSED_FORM = "closed-form"
    EGF = "egf"
    BFILE = "b-file"
    RECURRENCE = "recurrence"


class SequenceRangeError(IndexError):
    """Lookup of indices a table does not cover."""

    def __init__(self, message: str, indices: tuple[int, ...] = ()):
        super().__init__(message)
        self.indices = tuple(indices)


class NonIntegralError(ValueError):
    """An exact computation that must yield an integer produced a proper fraction."""


@dataclass(frozen=True)
class SequenceTable:
    offset: int
    values: tuple[int, ...]
    provenance: Provenance

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def last_index(self) -> int:
        return self.offset + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def covers(self, lo: int, hi: int) -> bool:
        """True when every index in [lo, hi] is stored (empty ranges are covered)."""
        return lo > hi or (lo >= self.offset and hi <= self.last_index)

    def __getitem__(self, index: int) -> int:
        if not (self.offset <= index <= self.last_index):
            raise SequenceRangeError(
                f"index {index} outside stored range [{self.offset}, {self.last_index}]",
                (index,),
            )
        return self.values[index - self.offset]

    def indices(self) -> range:
        return range(self.offset, self.offset + len(self.values))

    def items(self) -> Iterator[tuple[int, int]]:
        for i, value in enumerate(self.values):
            yield self.offset + i, value
