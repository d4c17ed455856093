"""Dense GF(2) matrices with one integer per row.

Bit j of a row integer is the entry in column j.  Only the three
constructions the search needs are provided: the shifted generator
matrix, its systematic form, and the parity-check matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import Gf2Poly

MAX_COLS = 128


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or not 1 <= self.cols <= MAX_COLS:
            raise ValueError("bad matrix shape")
        if len(self.bits) != self.rows:
            raise ValueError("row count does not match storage")
        if any(r < 0 or r >> self.cols for r in self.bits):
            raise ValueError("row wider than the matrix")

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError("entry outside the matrix")
        return self.bits[r] >> c & 1


def build_generator(g: Gf2Poly, n: int, k: int) -> BitMatrix:
    """The k x n matrix whose row i is g's coefficient vector shifted by i."""
    if k < 1:
        raise ValueError("need at least one row")
    if g.degree != n - k:
        raise ValueError("generator degree must equal n - k")
    return BitMatrix(k, n, tuple(g.bits << i for i in range(k)))


def systematize(G: BitMatrix) -> BitMatrix:
    """Row-reduce G to (I_k | V) without permuting columns.

    Pivots are taken from columns 0..k-1 in order.  For matrices built
    by build_generator from a polynomial with constant term 1 the pivot
    always exists, so a missing pivot is an internal error.
    """
    k, n = G.rows, G.cols
    rows = list(G.bits)
    for c in range(k):
        piv = next((r for r in range(c, k) if rows[r] >> c & 1), None)
        assert piv is not None, "leading block is singular"
        rows[c], rows[piv] = rows[piv], rows[c]
        for r in range(k):
            if r != c and rows[r] >> c & 1:
                rows[r] ^= rows[c]
    return BitMatrix(k, n, tuple(rows))


def parity_check(G_sys: BitMatrix) -> BitMatrix:
    """H = (V^T | I) for a systematic G_sys = (I | V).

    The identity block sits on the right, so a vector supported on the
    last n - k coordinates has its own tail as syndrome.
    """
    k, n = G_sys.rows, G_sys.cols
    low = (1 << k) - 1
    if any(G_sys.bits[i] & low != 1 << i for i in range(k)):
        raise ValueError("matrix is not in systematic form")
    nk = n - k
    rows = []
    for r in range(nk):
        row = 1 << (k + r)
        for j in range(k):
            row |= (G_sys.bits[j] >> (k + r) & 1) << j
        rows.append(row)
    return BitMatrix(nk, n, tuple(rows))
