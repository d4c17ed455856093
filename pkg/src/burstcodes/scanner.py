"""Incremental syndrome walk over the bursts starting in the message part.

The remaining patterns a candidate must keep distinct are the k * 2^(b-1)
non-wrapping bursts whose first set bit lies in coordinates 0..k-1.  Their
syndromes are visited with one column XOR each: within a block the b - 1
trailing bits of the burst follow a reflected Gray code, and because the
code's last row is (1, 0, ..., 0) the hop from the end of block q - 1 to
the start of block q also flips exactly one coordinate, q - 1.

A burst whose syndrome is already spoken for ends the walk; a clean pass
of all blocks certifies the candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .binmat import BitMatrix
from .bursts import SyndromeSet, column_syndromes
from .graycode import change_positions, gray_rows


@dataclass(frozen=True)
class ScanHit:
    """First burst whose syndrome was already taken."""

    start: int
    gray_index: int
    syndrome: int


def burst_vector(q: int, t: int, b: int) -> int:
    """The error vector visited at block q, Gray row t."""
    v = 1 << q
    if b > 1:
        row = gray_rows(b - 1).rows[t]
        for d in range(1, b):
            v |= (row >> (b - 1 - d) & 1) << (q + d)
    return v


def scan_syndromes(H: BitMatrix, k: int, b: int) -> Iterator[tuple[int, int, int]]:
    """Yield (block, gray index, syndrome) for the whole walk, in order.

    b = 1 degenerates to the k single-bit bursts; the block transition
    then moves the only set bit, so the syndrome is read directly instead
    of updated.
    """
    if k < 1 or b < 1:
        raise ValueError("need k >= 1 and b >= 1")
    if k + b - 1 > H.cols:
        raise ValueError("bursts would run past the block")
    cols = column_syndromes(H)
    if b == 1:
        for q in range(k):
            yield q, 0, cols[q]
        return
    deltas = change_positions(b - 1)
    s = 0
    for q in range(k):
        s ^= cols[q - 1 if q else 0]
        yield q, 0, s
        for t in range(1, 1 << (b - 1)):
            s ^= cols[q + deltas[t - 1]]
            yield q, t, s


def scan(H: BitMatrix, k: int, b: int, S: SyndromeSet) -> ScanHit | None:
    """Walk every burst; None means clean, otherwise the first repeat."""
    if S.width != H.rows:
        raise ValueError("syndrome width does not match the parity check")
    for q, t, s in scan_syndromes(H, k, b):
        if s in S:
            return ScanHit(q, t, s)
    return None
