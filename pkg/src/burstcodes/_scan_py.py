"""Pure-Python candidate kernel; reference twin of the compiled one.

Candidates are indexed by their free interior coefficients.  Index i maps
to the key (1, interior bits of i, 1) read as an nk+1 bit integer whose
MSB is the constant term g_0: ascending i walks the coefficient vectors
(g_0, g_1, ..., g_nk) in lexicographic order with g_1 as the most
significant free bit, ending at the all-ones vector.  The key is also the
bit reversal of the polynomial's ordinary encoding, which is what the
column recurrence below happens to want, so the reversal is only ever
computed for the mirror-pruning comparison.

All syndromes live in n - k bits with the first parity row as MSB.
"""

from __future__ import annotations

from .gf2poly import bit_reverse


def _columns(grev: int, nk: int, k: int, extra: int) -> list[int]:
    """Syndrome columns 0..k-1 plus the first `extra` identity columns.

    Column j for j < k is a state of a shift register run k - j times
    from the lone top bit, folding the reversed low coefficients back in
    whenever the top bit falls out.  One step per column, no division.
    """
    mask = (1 << nk) - 1
    cols = [0] * (k + extra)
    for m in range(extra):
        cols[k + m] = 1 << (nk - 1 - m)
    u = 1 << (nk - 1)
    for j in range(k - 1, -1, -1):
        u = ((u << 1) & mask) ^ (grev if u >> (nk - 1) & 1 else 0)
        cols[j] = u
    return cols


def _aa_overlay(cols, aa_heads, aa_tails, base):
    """Syndromes of the wrap-around bursts, or None on any repeat.

    Each pattern is pre-split into a fixed parity-region value and a
    small mask of message coordinates whose columns get XORed in.
    """
    extra = set()
    for hmask, tail in zip(aa_heads, aa_tails):
        s = tail
        h = hmask
        while h:
            s ^= cols[(h & -h).bit_length() - 1]
            h &= h - 1
        if s in base or s in extra:
            return None
        extra.add(s)
    return extra


def _scan_clean(cols, k: int, b: int, base, extra) -> bool:
    """Gray-coded walk of the k * 2^(b-1) message-part bursts."""
    if b == 1:
        return all(c not in base and c not in extra for c in cols[:k])
    s = 0
    for q in range(k):
        s ^= cols[q - 1 if q else 0]
        if s in base or s in extra:
            return False
        for t in range(1, 1 << (b - 1)):
            s ^= cols[q + b - 1 - ((t & -t).bit_length() - 1)]
            if s in base or s in extra:
                return False
    return True


def run(n, k, b, ell, lo, hi, naa_vals, aa_heads, aa_tails, band_mask):
    """Try candidate indices lo..hi-1 in order.

    Returns (survivor index or None, counters) where counters is the
    tuple (tested, skipped weight, skipped mirror, repeat in the
    syndrome set, hit during the scan).  Pruned candidates are counted
    but never tested, so the counters partition the range walked.
    """
    nk = n - k
    base = frozenset(naa_vals)
    top = 1 << nk
    mask = top - 1
    tested = skip_w = skip_r = coll = hits = 0
    for i in range(lo, hi):
        key = top | (i << 1) | 1
        if key & band_mask == 0:
            skip_w += 1
            continue
        if key > bit_reverse(key, nk + 1):
            skip_r += 1
            continue
        tested += 1
        cols = _columns(key & mask, nk, k, b - 1)
        extra = _aa_overlay(cols, aa_heads, aa_tails, base)
        if extra is None:
            coll += 1
            continue
        if not _scan_clean(cols, k, b, base, extra):
            hits += 1
            continue
        return i, (tested, skip_w, skip_r, coll, hits)
    return None, (tested, skip_w, skip_r, coll, hits)


def candidate_checker(n, k, b, ell, naa_vals, aa_heads, aa_tails):
    """A predicate running the full per-candidate test, prunes excluded.

    Takes the polynomial in its ordinary encoding (MSB = leading
    coefficient); used for spot verdicts and oracle cross-checks where
    enumeration order does not apply.
    """
    nk = n - k
    base = frozenset(naa_vals)
    mask = (1 << nk) - 1

    def check(g_bits: int) -> bool:
        grev = bit_reverse(g_bits, nk + 1) & mask
        cols = _columns(grev, nk, k, b - 1)
        extra = _aa_overlay(cols, aa_heads, aa_tails, base)
        if extra is None:
            return False
        return _scan_clean(cols, k, b, base, extra)

    return check
