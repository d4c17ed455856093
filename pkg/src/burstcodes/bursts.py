"""Burst error patterns and their syndromes.

A burst of length L is an error vector whose set bits sit inside L
consecutive coordinates, with both end coordinates set.  It either fits
without wrapping (non-all-around) or runs past the last coordinate back
into the first ones (all-around).  The candidate test needs three
ingredients from here: the closed-form syndrome values of the bursts
confined to the parity region, the wrap-around patterns whose syndromes
must all be fresh, and the burst-weight shortcut that throws a candidate
away before any of that work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binmat import BitMatrix
from .gf2poly import Gf2Poly


class CollisionError(Exception):
    """Two correctable patterns landed on the same syndrome."""

    def __init__(self, syndrome: int):
        super().__init__(f"repeated syndrome {syndrome}")
        self.syndrome = syndrome


@dataclass(frozen=True)
class BurstPattern:
    """One burst: endpoints forced to 1, interior bits free.

    `interior` packs the length - 2 optional bits, bit o - 1 giving the
    coordinate `start + o` (mod n once expanded).  `wraps` marks the
    all-around case.
    """

    start: int
    length: int
    interior: int
    wraps: bool

    def __post_init__(self) -> None:
        if self.start < 0 or self.length < 1:
            raise ValueError("bad burst shape")
        if self.wraps and self.length < 2:
            raise ValueError("a wrapping burst spans at least two coordinates")
        free = max(self.length - 2, 0)
        if not 0 <= self.interior < 1 << free:
            raise ValueError("interior bits exceed the burst length")

    def positions(self, n: int) -> tuple[int, ...]:
        """The set coordinates inside a block of length n."""
        if self.start >= n or (self.wraps and self.length >= n):
            raise ValueError("burst does not fit the block")
        end = self.start + self.length - 1
        if self.wraps != (end >= n):
            raise ValueError("wrap flag disagrees with the block length")
        out = [self.start]
        for o in range(1, self.length - 1):
            if self.interior >> (o - 1) & 1:
                out.append((self.start + o) % n)
        if self.length > 1:
            out.append(end % n)
        return tuple(out)

    def vector(self, n: int) -> int:
        v = 0
        for p in self.positions(n):
            v |= 1 << p
        return v


@dataclass(frozen=True)
class Syndrome:
    """An (n - k)-bit value; the MSB is the first parity row."""

    value: int
    width: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < 1 << self.width:
            raise ValueError("syndrome wider than declared")


@dataclass(frozen=True)
class SyndromeSet:
    members: frozenset[int]
    width: int

    def __post_init__(self) -> None:
        if 0 not in self.members:
            raise ValueError("the all-zero syndrome is always reserved")
        if any(m < 0 or m >> self.width for m in self.members):
            raise ValueError("member wider than declared")

    def __contains__(self, value: int) -> bool:
        return value in self.members

    def __len__(self) -> int:
        return len(self.members)


def naa_syndrome_values(nk: int, b: int) -> list[int]:
    """Syndromes of every non-wrapping burst of length <= b confined to
    the parity region, read off in closed form.

    With the identity block on the right of H these are just the burst
    patterns themselves as nk-bit numbers: 0..2^(b-1) - 1 for bursts
    touching the last coordinate, then every longer placement is a shift
    2^j * t with 2^(b-1) <= t < 2^b and 0 <= j <= nk - b.  All values
    are distinct and 0 is included; the count is 2^(b-1) * (nk - b + 2).
    """
    if b < 1:
        raise ValueError("burst length must be positive")
    if 2 * b > nk:
        raise ValueError("need 2*b <= nk redundancy for b-burst correction")
    vals = list(range(1 << (b - 1)))
    for t in range(1 << (b - 1), 1 << b):
        for j in range(nk - b + 1):
            vals.append(t << j)
    vals.sort()
    return vals


def naa_bursts(n: int, b: int) -> list[BurstPattern]:
    """Every non-wrapping burst of length up to b, all starts, all interiors."""
    if not 1 <= b < n:
        raise ValueError("need 1 <= b < n")
    out = []
    for length in range(1, b + 1):
        free = max(length - 2, 0)
        for start in range(n - length + 1):
            for interior in range(1 << free):
                out.append(BurstPattern(start, length, interior, wraps=False))
    return out


def aa_bursts(n: int, ell: int) -> list[BurstPattern]:
    """Every all-around burst of exact length 2..ell.

    A wrapping burst of exact length L starts at one of the L - 1
    coordinates n - L + 1 .. n - 1, so there are (L - 1) * 2^(L - 2) of
    them.  ell = 1 yields nothing: a single set bit cannot wrap.
    """
    if not 1 <= ell < n:
        raise ValueError("need 1 <= ell < n")
    out = []
    for length in range(2, ell + 1):
        for start in range(n - length + 1, n):
            for interior in range(1 << (length - 2)):
                out.append(BurstPattern(start, length, interior, wraps=True))
    return out


def syndrome_of(vector: int, H: BitMatrix) -> Syndrome:
    """vector * H^T with the first parity row as most significant bit."""
    if vector < 0 or vector >> H.cols:
        raise ValueError("vector longer than the code")
    width = H.rows
    value = 0
    for r in range(width):
        value |= ((H.bits[r] & vector).bit_count() & 1) << (width - 1 - r)
    return Syndrome(value, width)


def column_syndromes(H: BitMatrix) -> list[int]:
    """The syndrome of each unit vector, i.e. the columns of H as numbers."""
    width = H.rows
    cols = [0] * H.cols
    for r in range(width):
        row = H.bits[r]
        bit = 1 << (width - 1 - r)
        for j in range(H.cols):
            if row >> j & 1:
                cols[j] |= bit
    return cols


def build_S(n: int, k: int, b: int, ell: int, H: BitMatrix) -> SyndromeSet:
    """The forbidden-syndrome set: parity-region bursts plus wrap-arounds.

    The closed-form values are distinct by construction, so the only
    possible repeats come from the wrap-around bursts; any repeat,
    against the closed-form values or among themselves, rejects the
    candidate via CollisionError.
    """
    nk = n - k
    if not 1 <= ell <= b:
        raise ValueError("need 1 <= ell <= b")
    if (H.rows, H.cols) != (nk, n):
        raise ValueError("parity-check shape does not match the code")
    members = set(naa_syndrome_values(nk, b))
    for pattern in aa_bursts(n, ell):
        s = syndrome_of(pattern.vector(n), H).value
        if s in members:
            raise CollisionError(s)
        members.add(s)
    return SyndromeSet(frozenset(members), nk)


def burst_b_weight(v: int, b: int) -> int:
    """Fewest non-wrapping bursts of length <= b covering the set bits.

    Greedy from the lowest set bit: anchor a window of b positions
    there, discard everything it covers, repeat.  Exchange argument
    makes this optimal.
    """
    if b < 1:
        raise ValueError("burst length must be positive")
    if v < 0:
        raise ValueError("vector must be non-negative")
    count = 0
    window = (1 << b) - 1
    while v:
        count += 1
        v &= ~(window << ((v & -v).bit_length() - 1))
    return count


def quick_skip(g: Gf2Poly, nk: int, b: int) -> bool:
    """True when the candidate cannot survive: burst-b weight below 3.

    Equivalent to all coefficients g_i with b <= i <= nk - b being zero,
    which is a single mask test.  Exactly 2^(2b - 2) candidates with
    both end coefficients set are skipped this way.
    """
    if g.degree != nk or not g.bits & 1:
        raise ValueError("expected a degree-nk candidate with constant term 1")
    if 2 * b > nk:
        raise ValueError("need 2*b <= nk")
    band = ((1 << (nk - 2 * b + 1)) - 1) << b
    return g.bits & band == 0
