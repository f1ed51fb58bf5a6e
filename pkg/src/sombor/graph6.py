"""graph6 encoding and decoding (McKay's format, undirected graphs only)."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import IO

from .graph import MAX_VERTICES, Graph, GraphError

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.reason = message
        self.offset = offset


def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def pack_bits(n: int, bits: int) -> bytes:
    """Pack an upper-triangle bitstream (first pair in the high bit) into graph6."""
    nbits = n * (n - 1) // 2
    pad = -nbits % 6
    bits <<= pad
    nchar = (nbits + pad) // 6
    body = bytes((bits >> (6 * (nchar - 1 - i)) & 63) + 63 for i in range(nchar))
    return _size_prefix(n) + body


def encode(g: Graph) -> bytes:
    """Encode ``g`` without header or trailing newline."""
    bits = 0
    masks = g.masks
    for j in range(1, g.n):
        col = masks[j]
        for i in range(j):
            bits = bits << 1 | (col >> i & 1)
    return pack_bits(g.n, bits)


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    pos = 0
    if data.startswith(HEADER):
        pos = len(HEADER)
    if pos >= len(data):
        raise Graph6Error("empty graph6 string", pos)
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"character {data[i]!r} outside graph6 range 63..126", i)

    if data[pos] == 126:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise Graph6Error(f"graphs with more than {MAX_VERTICES} vertices unsupported", pos)
        if pos + 4 > len(data):
            raise Graph6Error("truncated size field", len(data))
        n = 0
        for i in range(pos + 1, pos + 4):
            n = n << 6 | (data[i] - 63)
        pos += 4
    else:
        n = data[pos] - 63
        pos += 1
    if n == 0:
        raise Graph6Error("graph with zero vertices unsupported", pos - 1)
    if n > MAX_VERTICES:
        raise Graph6Error(f"graphs with more than {MAX_VERTICES} vertices unsupported", pos - 1)

    nbits = n * (n - 1) // 2
    nchar = -(-nbits // 6)
    body = data[pos:]
    if len(body) < nchar:
        raise Graph6Error(f"truncated edge data: expected {nchar} bytes, got {len(body)}", len(data))
    if len(body) > nchar:
        raise Graph6Error("trailing bytes after edge data", pos + nchar)
    bits = 0
    for ch in body:
        bits = bits << 6 | (ch - 63)
    pad = nchar * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + nchar - 1)
    bits >>= pad

    masks = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k -= 1
    try:
        return Graph.from_masks(masks)
    except GraphError as exc:  # pragma: no cover - masks are symmetric by construction
        raise Graph6Error(str(exc), pos) from None


def read_lines(stream: IO[bytes] | Iterable[bytes]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each nonblank line; numbering starts at 1."""
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip(b"\r\n")
        if not line.strip():
            continue
        try:
            yield lineno, decode(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.reason}", exc.offset) from None


def write_lines(stream: IO[bytes], graphs: Iterable[Graph]) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g) + b"\n")
        count += 1
    return count
