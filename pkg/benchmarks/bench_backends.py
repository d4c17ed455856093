"""Timing comparison of the compiled and pure candidate kernels.

Runs both kernels over identical prepared inputs and reports
candidates per second plus the speedup.  The second workload caps the
range: its full space is out of benchmark scale.

Usage: python benchmarks/bench_backends.py
"""

from __future__ import annotations

import time

from burstcodes import core
from burstcodes import _scan_py

WORKLOADS = [
    # (n, k, b, ell, lo, hi)
    (27, 20, 3, 2, 0, 1 << 6),
    (31, 20, 5, 5, 0, 1 << 10),
    (62, 42, 10, 8, 0, 20000),
]


def _time_kernel(kernel, n, k, b, ell, lo, hi, tables):
    naa, heads, tails, band_mask = tables
    start = time.perf_counter()
    survivor, counters = kernel.run(
        n, k, b, ell, lo, hi, naa, heads, tails, band_mask)
    elapsed = time.perf_counter() - start
    return survivor, counters, elapsed


def main() -> None:
    try:
        from burstcodes import _scan_cy
    except ImportError:
        print("compiled kernel not built; nothing to compare")
        return
    for n, k, b, ell, lo, hi in WORKLOADS:
        tables = core.prepare_tables(n, k, b, ell)
        total = hi - lo
        py_out = _time_kernel(_scan_py, n, k, b, ell, lo, hi, tables)
        cy_out = _time_kernel(_scan_cy, n, k, b, ell, lo, hi, tables)
        if py_out[:2] != cy_out[:2]:
            raise SystemExit(
                f"kernel disagreement on [{n},{k}] b={b} ell={ell}: "
                f"{py_out[:2]} vs {cy_out[:2]}")
        py_rate = total / py_out[2]
        cy_rate = total / cy_out[2]
        print(f"[{n},{k}] b={b} ell={ell}, {total} candidates:")
        print(f"  pure      {py_out[2] * 1e3:9.2f} ms  {py_rate:12.0f}/s")
        print(f"  compiled  {cy_out[2] * 1e3:9.2f} ms  {cy_rate:12.0f}/s"
              f"  ({cy_rate / py_rate:.1f}x)")


if __name__ == "__main__":
    main()
