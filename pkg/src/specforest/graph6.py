"""graph6 text codec.

The format packs the upper adjacency triangle column by column (bits
x(0,1); x(0,2), x(1,2); x(0,3), ...) into 6-bit groups offset by 63, after
a size header: one byte ``63 + n`` for n <= 62, or ``'~'`` followed by
three 6-bit groups for 63 <= n <= 258047.  Encoding and decoding are
bit-exact inverses; decoding rejects malformed headers, bad lengths, and
nonzero padding bits.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["g6_encode", "g6_decode"]

_MAX_SHORT = 62
_MAX_LONG = 258047


def _header(n: int) -> str:
    if n <= _MAX_SHORT:
        return chr(63 + n)
    return "~" + "".join(chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0))


def g6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 string."""
    n = g.n
    if n > _MAX_LONG:
        raise ValueError(f"graph6 supports at most {_MAX_LONG} vertices")
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.adjacent(row, col) else 0)
    chars = [_header(n)]
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        chars.append(chr(63 + value))
    return "".join(chars)


def g6_decode(text: str) -> Graph:
    """Decode a graph6 string; the inverse of :func:`g6_encode`."""
    if not text:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in text]
    if any(v < 0 or v > 63 for v in data):
        raise ValueError("graph6 characters must be in the range 63..126")
    if data[0] == 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size header")
        if data[1] == 63:
            raise ValueError("graph6 orders above 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ValueError(
            f"graph6 body length {len(body)} does not match order {n}"
        )
    bits = []
    for value in body:
        for shift in (5, 4, 3, 2, 1, 0):
            bits.append((value >> shift) & 1)
    if any(bits[nbits:]):
        raise ValueError("graph6 padding bits must be zero")
    rows = [0] * n
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            i += 1
    return Graph._from_rows(n, tuple(rows))
