"""Both scan kernels against the plain module pipeline and each other."""

import random

import pytest

from burstcodes import (
    CollisionError,
    Gf2Poly,
    build_S,
    column_syndromes,
    scan,
)
from burstcodes import core
from burstcodes.core import COMPILED_MAX_REDUNDANCY, compiled_available
from burstcodes import _scan_py
from burstcodes.gf2poly import bit_reverse

from conftest import make_parity_check

if compiled_available():
    from burstcodes import _scan_cy
else:
    _scan_cy = None

needs_compiled = pytest.mark.skipif(
    not compiled_available(), reason="compiled kernel not built"
)

# (n, k, b, ell) -> full-space result, pinned once from the module pipeline
GOLDEN_RUNS = {
    (27, 20, 3, 2): (9, (5, 4, 1, 1, 3)),
    (28, 20, 3, 3): (None, (62, 16, 50, 18, 44)),
    (14, 8, 3, 3): (None, (10, 16, 6, 4, 6)),
    (23, 13, 5, 3): (118, (50, 64, 5, 13, 36)),
    (31, 20, 5, 5): (51, (35, 16, 1, 26, 8)),
}

SMALL_SPECS = sorted(GOLDEN_RUNS) + [(12, 6, 2, 2), (12, 5, 1, 1), (13, 5, 4, 4)]


def space_size(n, k):
    return 1 << (n - k - 1)


def key_of(i, nk):
    return (1 << nk) | (i << 1) | 1


def reference_run(n, k, b, ell, lo, hi):
    """The same scan spelled with the plain module objects, one candidate
    at a time: prune, build the parity check, build S, walk."""
    nk = n - k
    band = ((1 << (nk - 2 * b + 1)) - 1) << b
    counts = [0, 0, 0, 0, 0]
    for i in range(lo, hi):
        key = key_of(i, nk)
        if key & band == 0:
            counts[1] += 1
            continue
        bits = bit_reverse(key, nk + 1)
        if key > bits:
            counts[2] += 1
            continue
        counts[0] += 1
        H = make_parity_check(bits, n, k)
        try:
            S = build_S(n, k, b, ell, H)
        except CollisionError:
            counts[3] += 1
            continue
        if scan(H, k, b, S) is not None:
            counts[4] += 1
            continue
        return i, tuple(counts)
    return None, tuple(counts)


def run_kernel(kern, n, k, b, ell, lo, hi):
    naa, heads, tails, band = core.prepare_tables(n, k, b, ell)
    return kern.run(n, k, b, ell, lo, hi, naa, heads, tails, band)


class TestPureKernel:
    def test_full_spaces_match_module_pipeline(self):
        for n, k, b, ell in SMALL_SPECS:
            total = space_size(n, k)
            expect = reference_run(n, k, b, ell, 0, total)
            assert run_kernel(_scan_py, n, k, b, ell, 0, total) == expect

    def test_golden_results(self):
        for (n, k, b, ell), expect in GOLDEN_RUNS.items():
            total = space_size(n, k)
            assert run_kernel(_scan_py, n, k, b, ell, 0, total) == expect

    def test_counters_partition_the_range(self):
        for (n, k, b, ell), (surv, counts) in GOLDEN_RUNS.items():
            tested, skip_w, skip_r, coll, hits = counts
            enumerated = space_size(n, k) if surv is None else surv + 1
            assert tested + skip_w + skip_r == enumerated
            assert coll + hits == tested - (0 if surv is None else 1)

    def test_windowed_merge_equals_single_run(self):
        for n, k, b, ell in [(27, 20, 3, 2), (23, 13, 5, 3), (14, 8, 3, 3)]:
            total = space_size(n, k)
            naa, heads, tails, band = core.prepare_tables(n, k, b, ell)
            whole = _scan_py.run(n, k, b, ell, 0, total, naa, heads, tails, band)
            for step in (7, 16, 64):
                counts = [0] * 5
                got = None
                for lo in range(0, total, step):
                    surv, c = _scan_py.run(
                        n, k, b, ell, lo, min(lo + step, total), naa, heads, tails, band
                    )
                    counts = [a + x for a, x in zip(counts, c)]
                    if surv is not None:
                        got = surv
                        break
                assert (got, tuple(counts)) == whole

    def test_columns_match_parity_check(self):
        rng = random.Random(5)
        for _ in range(25):
            k = rng.randrange(1, 12)
            nk = rng.randrange(2, 13)
            bits = (1 << nk) | (rng.getrandbits(nk - 1) << 1) | 1
            grev = bit_reverse(bits, nk + 1) & ((1 << nk) - 1)
            extra = rng.randrange(0, nk)
            cols = _scan_py._columns(grev, nk, k, extra)
            H = make_parity_check(bits, nk + k, k)
            assert cols == column_syndromes(H)[: k + extra]


class TestCandidateChecker:
    def test_matches_module_verdicts(self):
        n, k, b, ell = 14, 8, 3, 3
        checker = core.candidate_checker(n, k, b, ell)
        for i in range(space_size(n, k)):
            bits = bit_reverse(key_of(i, n - k), n - k + 1)
            H = make_parity_check(bits, n, k)
            try:
                good = scan(H, k, b, build_S(n, k, b, ell, H)) is None
            except CollisionError:
                good = False
            assert checker(bits) == good

    def test_ignores_orientation_prunes(self):
        # the mirror of a surviving generator is skipped by the scan's
        # reversal prune but is still a perfectly good candidate
        checker = core.candidate_checker(27, 20, 3, 2)
        assert checker(147)
        assert checker(bit_reverse(147, 8))


@needs_compiled
class TestCompiledKernel:
    def test_full_spaces_match_pure(self):
        for n, k, b, ell in SMALL_SPECS:
            total = space_size(n, k)
            assert run_kernel(_scan_cy, n, k, b, ell, 0, total) == run_kernel(
                _scan_py, n, k, b, ell, 0, total
            )

    def test_golden_results(self):
        for (n, k, b, ell), expect in GOLDEN_RUNS.items():
            total = space_size(n, k)
            assert run_kernel(_scan_cy, n, k, b, ell, 0, total) == expect

    def test_random_windows_match_pure(self):
        rng = random.Random(17)
        for _ in range(20):
            b = rng.randrange(1, 5)
            ell = rng.randrange(1, b + 1)
            nk = rng.randrange(2 * b, 13)
            k = rng.randrange(1, 14)
            n = nk + k
            total = space_size(n, k)
            lo = rng.randrange(total)
            hi = rng.randrange(lo, min(lo + 512, total)) + 1
            assert run_kernel(_scan_cy, n, k, b, ell, lo, hi) == run_kernel(
                _scan_py, n, k, b, ell, lo, hi
            )

    def test_redundancy_cap(self):
        nk = COMPILED_MAX_REDUNDANCY + 2
        naa, heads, tails, band = core.prepare_tables(nk + 30, 30, 3, 1)
        with pytest.raises(ValueError):
            _scan_cy.run(nk + 30, 30, 3, 1, 0, 4, naa, heads, tails, band)


class TestBackendSelection:
    def test_force_pure(self, monkeypatch):
        monkeypatch.setenv("BURSTCODES_BACKEND", "pure")
        assert core.backend_name() == "pure"
        assert core.backend_name(40) == "pure"

    @needs_compiled
    def test_force_compiled(self, monkeypatch):
        monkeypatch.setenv("BURSTCODES_BACKEND", "compiled")
        assert core.backend_name() == "compiled"
        with pytest.raises(RuntimeError):
            core.backend_name(COMPILED_MAX_REDUNDANCY + 1)

    @needs_compiled
    def test_auto_spills_to_pure_past_cap(self, monkeypatch):
        monkeypatch.delenv("BURSTCODES_BACKEND", raising=False)
        assert core.backend_name(COMPILED_MAX_REDUNDANCY) == "compiled"
        assert core.backend_name(COMPILED_MAX_REDUNDANCY + 1) == "pure"

    def test_unknown_backend_rejected(self, monkeypatch):
        monkeypatch.setenv("BURSTCODES_BACKEND", "fortran")
        with pytest.raises(ValueError):
            core.backend_name()

    def test_scan_candidates_entry_point(self):
        got = core.scan_candidates(27, 20, 3, 2, 0, 64)
        assert got == GOLDEN_RUNS[(27, 20, 3, 2)]
