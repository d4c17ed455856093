"""Binary polynomials over GF(2), stored as plain integers.

Bit i of the integer is the coefficient of x^i, so XOR is addition and
``bit_length() - 1`` is the degree.  Hex strings read the integer the
ordinary way: the most significant hex digit holds the highest-degree
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

# Generous for every code this library searches (n - k stays around 30);
# two machine words of coefficients.
MAX_DEGREE = 127


def bit_reverse(x: int, width: int) -> int:
    """Reverse the low `width` bits of x.  Requires 0 <= x < 2**width."""
    if x < 0 or x >> width:
        raise ValueError(f"value does not fit in {width} bits")
    r = 0
    for _ in range(width):
        r = (r << 1) | (x & 1)
        x >>= 1
    return r


def poly_remainder(a: int, m: int) -> int:
    """Remainder of the carry-less division a mod m; m must be nonzero."""
    if m <= 0:
        raise ValueError("modulus must be a nonzero polynomial")
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


@dataclass(frozen=True)
class Gf2Poly:
    """A nonzero binary polynomial; `bits` holds the coefficient vector."""

    bits: int

    def __post_init__(self) -> None:
        if self.bits <= 0:
            raise ValueError("polynomial must be nonzero")
        if self.bits.bit_length() - 1 > MAX_DEGREE:
            raise ValueError(f"degree above the supported cap {MAX_DEGREE}")

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def coefficient(self, i: int) -> int:
        """The coefficient of x^i, as 0 or 1."""
        if i < 0:
            raise ValueError("exponent must be non-negative")
        return self.bits >> i & 1

    def __str__(self) -> str:
        return format_hex(self)


def parse_hex(s: str) -> Gf2Poly:
    """Decode a hex string; an optional 0x prefix is accepted."""
    text = s.strip()
    if text[:2].lower() == "0x":
        text = text[2:]
    if not text:
        raise ValueError("empty polynomial string")
    try:
        bits = int(text, 16)
    except ValueError:
        raise ValueError(f"not a hexadecimal string: {s!r}") from None
    if bits == 0:
        raise ValueError("polynomial must have a leading coefficient")
    return Gf2Poly(bits)


def format_hex(p: Gf2Poly) -> str:
    """Uppercase hex without a prefix; inverse of parse_hex."""
    return format(p.bits, "X")


def reverse(p: Gf2Poly, width: int) -> Gf2Poly:
    """The polynomial with the coefficient vector written backwards.

    `width` is the length of that vector, normally degree + 1 of the
    generator being flipped; the reversal of coefficients (g_0 ... g_w-1)
    is (g_w-1 ... g_0).
    """
    if width < p.degree + 1:
        raise ValueError("width smaller than the coefficient vector")
    return Gf2Poly(bit_reverse(p.bits, width))


def divides_x_n_plus_1(p: Gf2Poly, n: int) -> bool:
    """True iff p divides x^n + 1, i.e. p generates a length-n cyclic code."""
    if not 1 <= p.degree < n:
        raise ValueError("need 1 <= degree < n")
    return poly_remainder(1 << n | 1, p.bits) == 0
