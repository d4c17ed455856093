"""Kernel selection and input preparation for the candidate scan.

Two interchangeable kernels exist: `_scan_cy`, a compiled extension
built at install time, and `_scan_py`, the pure-Python reference.  The
compiled one is picked when it imported cleanly and the redundancy fits
its bitset cap; BURSTCODES_BACKEND=pure or =compiled forces the choice.
"""

from __future__ import annotations

import os
from array import array

from . import _scan_py
from .bursts import aa_bursts, naa_syndrome_values

try:
    from . import _scan_cy
except ImportError:
    _scan_cy = None

COMPILED_MAX_REDUNDANCY = 28

_PURE_NAMES = {"py", "pure", "python"}
_COMPILED_NAMES = {"cy", "compiled", "cython"}


def compiled_available() -> bool:
    return _scan_cy is not None


def backend_name(redundancy: int | None = None) -> str:
    """Which kernel a scan would use: 'compiled' or 'pure'."""
    kern = _select(redundancy if redundancy is not None else 1)
    return "compiled" if kern is _scan_cy else "pure"


def _select(nk: int):
    forced = os.environ.get("BURSTCODES_BACKEND", "").strip().lower()
    if forced in _PURE_NAMES:
        return _scan_py
    if forced in _COMPILED_NAMES:
        if _scan_cy is None:
            raise RuntimeError("compiled kernel requested but not built")
        if nk > COMPILED_MAX_REDUNDANCY:
            raise RuntimeError(
                f"compiled kernel caps redundancy at {COMPILED_MAX_REDUNDANCY},"
                f" got {nk}")
        return _scan_cy
    if forced not in {"", "auto"}:
        raise ValueError(f"unknown backend {forced!r}")
    if _scan_cy is not None and nk <= COMPILED_MAX_REDUNDANCY:
        return _scan_cy
    return _scan_py


def prepare_tables(n: int, k: int, b: int, ell: int):
    """Precompute the per-parameter tables both kernels consume.

    Returns (no-wrap syndrome values, wrap-burst head masks, wrap-burst
    parity constants, weight-prune band mask).  A wrap burst's syndrome
    splits into columns of its positions below k (the head mask, one bit
    per position) plus a constant from its positions at k and beyond.
    """
    nk = n - k
    naa = array("Q", naa_syndrome_values(nk, b))
    heads = array("Q")
    tails = array("Q")
    for pat in aa_bursts(n, ell):
        hmask = 0
        tail = 0
        for p in pat.positions(n):
            if p < k:
                hmask |= 1 << p
            else:
                tail ^= 1 << (nk - 1 - (p - k))
        heads.append(hmask)
        tails.append(tail)
    band_mask = ((1 << (nk - 2 * b + 1)) - 1) << b
    return naa, heads, tails, band_mask


def scan_candidates(n: int, k: int, b: int, ell: int, lo: int, hi: int):
    """Run the selected kernel over candidate indices lo..hi-1.

    Returns (survivor index or None, counter tuple); see _scan_py.run.
    """
    naa, heads, tails, band_mask = prepare_tables(n, k, b, ell)
    kern = _select(n - k)
    return kern.run(n, k, b, ell, lo, hi, naa, heads, tails, band_mask)


def candidate_checker(n: int, k: int, b: int, ell: int):
    """Predicate on generator bits, prunes excluded; always pure."""
    naa, heads, tails, _ = prepare_tables(n, k, b, ell)
    return _scan_py.candidate_checker(n, k, b, ell, naa, heads, tails)
