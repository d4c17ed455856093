"""Ground-truth verifier, independent of the incremental machinery.

A code corrects the error set iff all the patterns in it have pairwise
distinct syndromes.  Any full-rank parity map works for that question;
the remainder modulo the generator is one, since its kernel is exactly
the codeword set.  Two patterns collide under it precisely when their
sum is a nonzero codeword, so distinct remainders certify the same thing
a parity-check matrix would, without sharing any code with the fast
path being audited.
"""

from __future__ import annotations

from .bursts import aa_bursts, naa_bursts
from .gf2poly import Gf2Poly, poly_remainder
from .search import CodeSpec

# Brute force is the point of this module, but keep it at desk scale.
ERROR_SET_CAP = 1 << 22


def error_set_size(n: int, b: int, ell: int) -> int:
    """Closed-form size of enumerate_error_set for the same parameters."""
    naa = sum((n - length + 1) << max(length - 2, 0) for length in range(1, b + 1))
    aa = sum((length - 1) << (length - 2) for length in range(2, ell + 1))
    return 1 + naa + aa


def enumerate_error_set(n: int, b: int, ell: int) -> list[int]:
    """Every correctable pattern: zero, all non-wrapping bursts of length
    up to b at every start, and all wrap-around bursts of exact length
    2..ell."""
    if n < 2:
        raise ValueError("need a block of at least two coordinates")
    if not 1 <= ell <= b < n:
        raise ValueError("need 1 <= ell <= b < n")
    vectors = [0]
    vectors += [p.vector(n) for p in naa_bursts(n, b)]
    vectors += [p.vector(n) for p in aa_bursts(n, ell)]
    return vectors


def verify_burst_correcting(g: Gf2Poly, spec: CodeSpec) -> bool:
    """True iff the code generated by g corrects the full error set.

    Refuses instances whose error set would not fit a desk-scale sweep;
    the searcher's own certificates stay well under the cap.
    """
    if g.degree != spec.n - spec.k:
        raise ValueError("generator degree must equal n - k")
    size = error_set_size(spec.n, spec.b, spec.ell)
    if size > ERROR_SET_CAP:
        raise ValueError(f"error set of {size} patterns is past the cap")
    seen = set()
    for e in enumerate_error_set(spec.n, spec.b, spec.ell):
        r = poly_remainder(e, g.bits)
        if r in seen:
            return False
        seen.add(r)
    return True
