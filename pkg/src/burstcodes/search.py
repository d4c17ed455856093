"""Candidate search over generator polynomials.

The space for an [n, k] attempt is every degree n-k binary polynomial
with nonzero constant term, walked in lexicographic order of the
coefficient vector (g_0, g_1, ..., g_{n-k}).  The constant and leading
coefficients are pinned to 1, so the interior bits form an ascending
counter with g_1 as its most significant bit and the all-ones vector
last.  The kernel applies the weight and mirror prunes, builds the
syndrome set, and runs the Gray-ordered burst scan; the first survivor
is the canonical witness, independent of how the range is chunked.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import core
from .gf2poly import Gf2Poly, bit_reverse, divides_x_n_plus_1

_SERIAL_CUTOFF = 1 << 13


@dataclass(frozen=True)
class CodeSpec:
    """Target parameters: block length, dimension, burst reach, wrap reach."""

    n: int
    k: int
    b: int
    ell: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("dimension k must be at least 1")
        if self.b < 1:
            raise ValueError("burst length b must be at least 1")
        if not 1 <= self.ell <= self.b:
            raise ValueError("wrap reach must satisfy 1 <= ell <= b")
        if 2 * self.b > self.n - self.k:
            raise ValueError(
                f"need 2*b <= n - k: bursts of length {self.b} do not fit in "
                f"{self.n - self.k} parity bits")

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def guard(self) -> int:
        return self.n - self.ell


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one [n, k] attempt with pruning counters.

    Every enumerated candidate lands in exactly one bucket: pruned by
    weight, pruned as a mirror, or tested; every tested candidate is a
    syndrome-set collision, a scan hit, or the survivor.
    """

    spec: CodeSpec
    generator: Gf2Poly | None
    candidates_tested: int
    pruned_reversal: int
    pruned_weight: int
    pruned_collision: int

    @property
    def scan_hits(self) -> int:
        survivors = 0 if self.generator is None else 1
        return self.candidates_tested - self.pruned_collision - survivors


@dataclass(frozen=True)
class EllEntry:
    """Best code found at one wrap reach; k = 0 when none exists."""

    ell: int
    n: int
    k: int
    generator: Gf2Poly | None
    rate: Fraction


@dataclass(frozen=True)
class GuardResult:
    b: int
    g: int
    per_ell: tuple[EllEntry, ...]
    best: EllEntry
    cyclic: bool


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("BURSTCODES_WORKERS")
        if env is not None:
            try:
                workers = int(env)
            except ValueError:
                raise ValueError(
                    f"BURSTCODES_WORKERS must be an integer, got {env!r}"
                ) from None
        else:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError("worker count must be at least 1")
    return workers


def _parallel_scan(spec: CodeSpec, workers: int, total: int):
    """Ordered reduction over contiguous chunks.

    Counters are summed through the first surviving chunk only, so the
    result (survivor and counters both) is identical to a serial run
    for any worker count.
    """
    n_chunks = workers * 4
    step = -(-total // n_chunks)
    bounds = []
    lo = 0
    while lo < total:
        bounds.append((lo, min(lo + step, total)))
        lo += step
    counters = [0] * 5
    survivor = None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(core.scan_candidates,
                        spec.n, spec.k, spec.b, spec.ell, c_lo, c_hi)
            for c_lo, c_hi in bounds
        ]
        for fut in futures:
            found, chunk_counters = fut.result()
            for i, c in enumerate(chunk_counters):
                counters[i] += c
            if found is not None:
                survivor = found
                for later in futures:
                    later.cancel()
                break
    return survivor, tuple(counters)


def search_code(spec: CodeSpec, workers: int | None = None) -> SearchResult:
    """Find the first surviving generator for spec, or record exhaustion."""
    w = _resolve_workers(workers)
    nk = spec.redundancy
    total = 1 << (nk - 1)
    if w == 1 or total <= _SERIAL_CUTOFF:
        survivor, counters = core.scan_candidates(
            spec.n, spec.k, spec.b, spec.ell, 0, total)
    else:
        survivor, counters = _parallel_scan(spec, w, total)
    generator = None
    if survivor is not None:
        key = (1 << nk) | (survivor << 1) | 1
        generator = Gf2Poly(bit_reverse(key, nk + 1))
    tested, skip_w, skip_r, coll, _ = counters
    return SearchResult(spec, generator, tested, skip_r, skip_w, coll)


def exists_code(spec: CodeSpec, workers: int | None = None) -> Gf2Poly | None:
    return search_code(spec, workers).generator


def check_candidate(g: Gf2Poly, spec: CodeSpec) -> bool:
    """Full per-candidate verdict for one polynomial, prunes excluded."""
    if g.degree != spec.redundancy:
        raise ValueError(
            f"degree {g.degree} generator cannot give [{spec.n}, {spec.k}]")
    if not g.bits & 1:
        raise ValueError("generator must have constant term 1")
    checker = core.candidate_checker(spec.n, spec.k, spec.b, spec.ell)
    return checker(g.bits)


def max_k(n: int, b: int, ell: int,
          workers: int | None = None) -> tuple[int, Gf2Poly] | None:
    """Largest dimension admitting an [n, k] code, with its witness."""
    if n <= 2 * b:
        raise ValueError("need n > 2*b to leave room for a message bit")
    for k in range(n - 2 * b, 0, -1):
        generator = exists_code(CodeSpec(n, k, b, ell), workers)
        if generator is not None:
            return k, generator
    return None


def best_for_guard(b: int, g: int,
                   workers: int | None = None) -> GuardResult:
    """Best rate over wrap reaches 1..b at a fixed guard space g.

    Each reach ell is tried at block length g + ell; ties in rate go to
    the smaller ell.
    """
    if g <= 2 * b:
        raise ValueError("guard space must exceed 2*b")
    entries = []
    for ell in range(1, b + 1):
        n = g + ell
        found = max_k(n, b, ell, workers)
        if found is None:
            entries.append(EllEntry(ell, n, 0, None, Fraction(0)))
        else:
            k, generator = found
            entries.append(EllEntry(ell, n, k, generator, Fraction(k, n)))
    best = entries[0]
    for entry in entries[1:]:
        if entry.rate > best.rate:
            best = entry
    cyclic = best.generator is not None and divides_x_n_plus_1(
        best.generator, best.n)
    return GuardResult(b, g, tuple(entries), best, cyclic)
