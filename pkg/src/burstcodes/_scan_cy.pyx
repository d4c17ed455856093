# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled candidate kernel; behavioural twin of _scan_py.run.

Membership tests go through a flat bitset of 2^(n-k) bits, which caps the
redundancy at 28 (a 32 MiB bitset); callers fall back to the pure kernel
past that.  Wrap-around syndromes are stamped into the bitset per
candidate and unstamped on every exit path, so the bitset carries only
the shared no-wrap values between candidates.
"""

from libc.stdlib cimport calloc, free, malloc

ctypedef unsigned long long u64

COMPILED = True
MAX_REDUNDANCY = 28


cdef inline u64 _bitrev(u64 x, int width) nogil:
    cdef u64 r = 0
    cdef int i
    for i in range(width):
        r = (r << 1) | (x & 1)
        x >>= 1
    return r


cdef inline int _ctz(u64 x) nogil:
    # callers never pass zero, and the arguments stay under 2^16
    cdef int r = 0
    while not x & 1:
        x >>= 1
        r += 1
    return r


def run(int n, int k, int b, int ell,
        u64 lo, u64 hi,
        u64[::1] naa_vals, u64[::1] aa_heads, u64[::1] aa_tails,
        u64 band_mask):
    """Same contract and index mapping as _scan_py.run."""
    cdef int nk = n - k
    if nk > MAX_REDUNDANCY:
        raise ValueError(
            f"redundancy {nk} is past the compiled cap of {MAX_REDUNDANCY}")
    cdef u64 top = (<u64>1) << nk
    cdef u64 mask = top - 1
    cdef Py_ssize_t nwords = <Py_ssize_t>(top >> 6) + 1
    cdef Py_ssize_t n_naa = naa_vals.shape[0]
    cdef Py_ssize_t n_aa = aa_heads.shape[0]
    cdef int ncols = k + (b - 1 if b > 1 else 0)

    cdef u64 *bits = <u64 *>calloc(nwords, sizeof(u64))
    cdef u64 *cols = <u64 *>malloc(ncols * sizeof(u64))
    cdef u64 *stamped = <u64 *>malloc((n_aa if n_aa > 0 else 1) * sizeof(u64))
    if bits is NULL or cols is NULL or stamped is NULL:
        free(bits)
        free(cols)
        free(stamped)
        raise MemoryError

    cdef u64 tested = 0, skip_w = 0, skip_r = 0, coll = 0, hits = 0
    cdef u64 i, key, grev, u, s, h, survivor = 0
    cdef bint found = False, ok
    cdef Py_ssize_t a, m, n_stamped
    cdef int j, q, t, blocks = 1 << (b - 1)

    with nogil:
        for a in range(n_naa):
            s = naa_vals[a]
            bits[s >> 6] |= (<u64>1) << (s & 63)
        for j in range(b - 1):
            cols[k + j] = (<u64>1) << (nk - 1 - j)

        for i in range(lo, hi):
            key = top | (i << 1) | 1
            if key & band_mask == 0:
                skip_w += 1
                continue
            if key > _bitrev(key, nk + 1):
                skip_r += 1
                continue
            tested += 1

            grev = key & mask
            u = (<u64>1) << (nk - 1)
            for j in range(k - 1, -1, -1):
                if u >> (nk - 1) & 1:
                    u = ((u << 1) & mask) ^ grev
                else:
                    u = (u << 1) & mask
                cols[j] = u

            ok = True
            n_stamped = 0
            for a in range(n_aa):
                s = aa_tails[a]
                h = aa_heads[a]
                while h:
                    s ^= cols[_ctz(h)]
                    h &= h - 1
                if bits[s >> 6] >> (s & 63) & 1:
                    ok = False
                    break
                bits[s >> 6] |= (<u64>1) << (s & 63)
                stamped[n_stamped] = s
                n_stamped += 1

            if ok:
                if b == 1:
                    for q in range(k):
                        s = cols[q]
                        if bits[s >> 6] >> (s & 63) & 1:
                            ok = False
                            break
                else:
                    s = 0
                    for q in range(k):
                        s ^= cols[q - 1] if q else cols[0]
                        if bits[s >> 6] >> (s & 63) & 1:
                            ok = False
                            break
                        for t in range(1, blocks):
                            s ^= cols[q + b - 1 - _ctz(<u64>t)]
                            if bits[s >> 6] >> (s & 63) & 1:
                                ok = False
                                break
                        if not ok:
                            break
                for m in range(n_stamped):
                    s = stamped[m]
                    bits[s >> 6] &= ~((<u64>1) << (s & 63))
                if ok:
                    survivor = i
                    found = True
                    break
                hits += 1
            else:
                coll += 1
                for m in range(n_stamped):
                    s = stamped[m]
                    bits[s >> 6] &= ~((<u64>1) << (s & 63))

    free(bits)
    free(cols)
    free(stamped)
    if found:
        return survivor, (tested, skip_w, skip_r, coll, hits)
    return None, (tested, skip_w, skip_r, coll, hits)
