"""Binary reflected Gray codes and their changed-coordinate sequence."""

from __future__ import annotations

from dataclasses import dataclass

MAX_WIDTH = 16


@dataclass(frozen=True)
class GrayTable:
    """All 2^m rows of the reflected code plus, for each transition,
    the 1-based coordinate (counted from the left) that flips."""

    m: int
    rows: tuple[int, ...]
    changes: tuple[int, ...]


def gray_rows(m: int) -> GrayTable:
    """Rows in reflected order; row i, read MSB first, is i ^ (i >> 1).

    Row 0 is all zero and the last row is 1 followed by zeros, so a
    walk that appends the table to a moving anchor re-enters the next
    anchor position with a single flip.
    """
    if not 1 <= m <= MAX_WIDTH:
        raise ValueError(f"width must be in 1..{MAX_WIDTH}")
    rows = tuple(i ^ (i >> 1) for i in range(1 << m))
    changes = tuple(m - ((t & -t).bit_length() - 1) for t in range(1, 1 << m))
    return GrayTable(m, rows, changes)


def change_positions(m: int) -> tuple[int, ...]:
    """changes[t - 1] is the coordinate flipping between rows t - 1 and t."""
    return gray_rows(m).changes
