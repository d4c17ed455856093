"""Search and verification for optimal single-burst-correcting binary
cyclic and shortened cyclic codes."""

from .binmat import BitMatrix, build_generator, parity_check, systematize
from .bursts import (
    BurstPattern,
    CollisionError,
    Syndrome,
    SyndromeSet,
    aa_bursts,
    build_S,
    burst_b_weight,
    column_syndromes,
    naa_bursts,
    naa_syndrome_values,
    quick_skip,
    syndrome_of,
)
from .core import backend_name, compiled_available
from .gf2poly import (
    Gf2Poly,
    bit_reverse,
    divides_x_n_plus_1,
    format_hex,
    parse_hex,
    poly_remainder,
    reverse,
)
from .graycode import GrayTable, change_positions, gray_rows
from .oracle import enumerate_error_set, error_set_size, verify_burst_correcting
from .scanner import ScanHit, burst_vector, scan, scan_syndromes
from .search import (
    CodeSpec,
    EllEntry,
    GuardResult,
    SearchResult,
    best_for_guard,
    check_candidate,
    exists_code,
    max_k,
    search_code,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BurstPattern",
    "CodeSpec",
    "CollisionError",
    "EllEntry",
    "Gf2Poly",
    "GrayTable",
    "GuardResult",
    "ScanHit",
    "SearchResult",
    "Syndrome",
    "SyndromeSet",
    "aa_bursts",
    "backend_name",
    "best_for_guard",
    "bit_reverse",
    "build_S",
    "build_generator",
    "burst_b_weight",
    "burst_vector",
    "change_positions",
    "check_candidate",
    "column_syndromes",
    "compiled_available",
    "divides_x_n_plus_1",
    "enumerate_error_set",
    "error_set_size",
    "exists_code",
    "format_hex",
    "gray_rows",
    "max_k",
    "naa_bursts",
    "naa_syndrome_values",
    "parity_check",
    "parse_hex",
    "poly_remainder",
    "quick_skip",
    "reverse",
    "scan",
    "scan_syndromes",
    "search_code",
    "syndrome_of",
    "systematize",
    "verify_burst_correcting",
    "__version__",
]
