"""The incremental syndrome walk."""

import random

import pytest

from burstcodes import Gf2Poly, ScanHit, SyndromeSet, build_S, burst_vector, scan, scan_syndromes, syndrome_of

from conftest import REF_K, REF_N, make_parity_check

# all 32 syndromes of the reference walk, blocks of 4 in visiting order
REF_WALK = [
    52, 57, 35, 46,
    26, 59, 54, 23,
    13, 58, 27, 44,
    33, 29, 42, 22,
    55, 41, 21, 11,
    60, 51, 45, 34,
    30, 62, 49, 17,
    15, 31, 63, 47,
]


class TestBurstVector:
    def test_anchor_only(self):
        assert burst_vector(0, 0, 3) == 1
        assert burst_vector(5, 0, 4) == 1 << 5

    def test_trailing_bits_follow_gray_row(self):
        # row 2 of the width-2 table is 11
        assert burst_vector(0, 2, 3) == 0b111
        assert burst_vector(1, 1, 3) == 0b1010

    def test_width_one(self):
        assert burst_vector(3, 0, 1) == 8


class TestScanSyndromes:
    def test_reference_walk(self, ref_H):
        got = [s for _, _, s in scan_syndromes(ref_H, REF_K, 3)]
        assert got == REF_WALK

    def test_block_and_row_indices(self, ref_H):
        seq = [(q, t) for q, t, _ in scan_syndromes(ref_H, REF_K, 3)]
        assert seq == [(q, t) for q in range(REF_K) for t in range(4)]

    def test_walk_length(self, ref_H):
        assert len(list(scan_syndromes(ref_H, REF_K, 3))) == REF_K << 2

    def test_each_step_matches_direct_syndrome(self, ref_H):
        for q, t, s in scan_syndromes(ref_H, REF_K, 3):
            assert s == syndrome_of(burst_vector(q, t, 3), ref_H).value

    def test_direct_syndromes_on_random_candidates(self):
        rng = random.Random(7)
        for _ in range(10):
            n, k, b = 13, 6, 3
            bits = (1 << (n - k)) | (rng.getrandbits(n - k - 1) << 1) | 1
            H = make_parity_check(bits, n, k)
            for q, t, s in scan_syndromes(H, k, b):
                assert s == syndrome_of(burst_vector(q, t, b), H).value

    def test_width_one_walk(self, ref_H):
        got = list(scan_syndromes(ref_H, REF_K, 1))
        assert got == [(q, 0, syndrome_of(1 << q, ref_H).value) for q in range(REF_K)]

    def test_validation(self, ref_H):
        with pytest.raises(ValueError):
            list(scan_syndromes(ref_H, 0, 3))
        with pytest.raises(ValueError):
            list(scan_syndromes(ref_H, REF_K, 8))


class TestScan:
    def test_reference_full_reach_first_repeat(self, ref_H):
        S = build_S(REF_N, REF_K, 3, 3, ref_H)
        assert scan(ref_H, REF_K, 3, S) == ScanHit(1, 2, 54)

    def test_reference_reach_two_is_clean(self, ref_H):
        S = build_S(REF_N, REF_K, 3, 2, ref_H)
        assert scan(ref_H, REF_K, 3, S) is None

    def test_hit_agrees_with_walk_membership(self, ref_H):
        S = build_S(REF_N, REF_K, 3, 3, ref_H)
        first = next(
            (q, t, s) for q, t, s in scan_syndromes(ref_H, REF_K, 3) if s in S
        )
        assert scan(ref_H, REF_K, 3, S) == ScanHit(*first)

    def test_width_mismatch(self, ref_H):
        with pytest.raises(ValueError):
            scan(ref_H, REF_K, 3, SyndromeSet(frozenset({0}), 5))
