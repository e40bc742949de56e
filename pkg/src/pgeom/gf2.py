"""Binary matrices packed into integer rows, and their rank over GF(2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .incidence import IncidenceStructure


@dataclass(frozen=True)
class BinaryMatrix:
    """Row-major bit matrix; bit ``j`` of ``bits[i]`` is entry ``(i, j)``."""

    rows: int
    cols: int
    bits: Tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.bits)}")
        limit = 1 << self.cols
        for i, r in enumerate(self.bits):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} has bits beyond column {self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "BinaryMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        packed = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            packed.append(sum(1 << j for j, x in enumerate(r) if x & 1))
        return cls(len(rows), ncols, tuple(packed))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.bits[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.bits]

    def transpose(self) -> "BinaryMatrix":
        cols = [0] * self.cols
        for i, r in enumerate(self.bits):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BinaryMatrix(self.cols, self.rows, tuple(cols))


def incidence_matrix(S: IncidenceStructure) -> BinaryMatrix:
    """Lines-by-points matrix: entry (i, j) is 1 iff point j is on line i."""
    return BinaryMatrix(S.b, S.v, tuple(S.line_masks()))


def rank2(M: BinaryMatrix) -> int:
    """Rank over GF(2) by Gaussian elimination on a copy of the rows."""
    work = [r for r in M.bits if r]
    rank = 0
    for col in range(M.cols):
        bit = 1 << col
        pivot = None
        for i in range(rank, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(rank + 1, len(work)):
            if work[i] & bit:
                work[i] ^= prow
        rank += 1
        if rank == len(work):
            break
    return rank
