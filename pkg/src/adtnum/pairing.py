"""Injective pairing schemes and sum codes on arbitrary-precision naturals.

Two pairing schemes are provided:

* ``paper``: the classic bijection f(x, y) = 2^x * (2y + 1) - 1.  Exact,
  total, and invertible on every natural, but its first argument sits in
  an exponent, so it is only suitable where that argument stays small.
* ``compact``: a self-delimiting length-prefixed concatenation.  Merely
  injective (decode is partial), but the code length is linear in the
  lengths of both arguments.

Sum codes number the branches of a right-nested sum ``c0 + (c1 + ... + void)``
by a parity chain: ``left v = 2v``, ``right w = 2w + 1``.
"""

from __future__ import annotations

import enum


class PairingScheme(enum.Enum):
    PAPER = "paper"
    COMPACT = "compact"


def pair_paper(x: int, y: int) -> int:
    """Bijection N x N -> N: 2^x * (2y + 1) - 1."""
    if x < 0 or y < 0:
        raise ValueError("pairing is defined on naturals only")
    return ((2 * y + 1) << x) - 1


def unpair_paper(n: int) -> tuple[int, int]:
    """Total inverse of pair_paper: x = trailing zeros of n+1, y from the odd part."""
    if n < 0:
        raise ValueError("pairing is defined on naturals only")
    m = n + 1
    x = (m & -m).bit_length() - 1
    return x, ((m >> x) - 1) // 2


def _gamma_bits(k: int) -> tuple[int, int]:
    # Elias-gamma style header for k >= 1: (bit_length(k) - 1) zero bits,
    # then k itself.  Returns (value, width).
    w = k.bit_length()
    return k, 2 * w - 1


def pair_compact(x: int, y: int) -> int:
    """Injective N x N -> N with linear code growth.

    Bit layout, most significant first: sentinel ``1``, gamma(u + 1) where
    u = bit_length(y), then y in exactly u bits, then x with no leading
    zeros (empty when x = 0).
    """
    if x < 0 or y < 0:
        raise ValueError("pairing is defined on naturals only")
    u = y.bit_length()
    g, gw = _gamma_bits(u + 1)
    n = ((1 << gw) | g) << u | y
    xw = x.bit_length()
    if xw:
        n = (n << xw) | x
    return n


def unpair_compact(n: int) -> tuple[int, int] | None:
    """Exact partial inverse of pair_compact; None for non-canonical codes."""
    if n <= 0:
        return None  # sentinel bit missing
    width = n.bit_length() - 1  # bits after the sentinel
    v = n ^ (1 << width)  # field value, leading zeros significant
    vw = v.bit_length()
    if vw == 0:
        return None  # gamma header has no payload
    zeros = width - vw
    gw = zeros + 1  # gamma payload width, starts at the first set bit
    if vw < gw:
        return None  # gamma header runs past the end
    k = v >> (vw - gw)
    u = k - 1
    rest_w = vw - gw
    if rest_w < u:
        return None  # too few bits for y
    rest = v & ((1 << rest_w) - 1)
    y = rest >> (rest_w - u)
    if u and y.bit_length() < u:
        return None  # leading zero in the y field: not canonical
    xw = rest_w - u
    x = rest & ((1 << xw) - 1)
    if xw and x.bit_length() < xw:
        return None  # leading zero in the x field: not canonical
    return x, y


def compact_bit_bound(x: int, y: int) -> int:
    """Guaranteed bit-length ceiling for pair_compact(x, y)."""
    by = y.bit_length()
    return x.bit_length() + by + 2 * (by + 1).bit_length() + 1


def pair(scheme: PairingScheme, x: int, y: int) -> int:
    if scheme is PairingScheme.PAPER:
        return pair_paper(x, y)
    return pair_compact(x, y)


def unpair(scheme: PairingScheme, n: int) -> tuple[int, int] | None:
    if scheme is PairingScheme.PAPER:
        return unpair_paper(n) if n >= 0 else None
    return unpair_compact(n)


def sum_code(branch_index: int, inner: int, branch_count: int) -> int:
    """Code of branch ``branch_index`` carrying ``inner`` in a sum of
    ``branch_count`` branches: 2^(i+1) * inner + 2^i - 1."""
    if not 0 <= branch_index < branch_count:
        raise ValueError(
            f"branch index {branch_index} out of range for {branch_count} branches"
        )
    i = branch_index
    return (inner << (i + 1)) + (1 << i) - 1


def sum_decode(code: int, branch_count: int) -> tuple[int, int] | None:
    """Inverse of sum_code; None when the code falls past the last branch."""
    if code < 0:
        return None
    i = 0
    while code & 1:  # odd: a "right" step into the next branch
        code >>= 1
        i += 1
        if i >= branch_count:
            return None  # void territory
    if i >= branch_count:
        return None  # empty sum has no inhabitants
    return i, code >> 1
