"""graph6 and plain edge-list codecs.

graph6 (the nauty interchange format) covers n <= 62 here: a single
header byte n+63 followed by the upper-triangle adjacency bits in
column order, packed 6 bits per byte, each byte offset by 63. Encoding
then decoding is byte-exact, and decoding rejects malformed input with
the offending byte offset.
"""

from __future__ import annotations

from .graph import Graph

GRAPH6_MAX_N = 62


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _column_bits(g: Graph) -> list[int]:
    adj = g.adjacency_masks
    return [adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]


def _pack_body(bits: list[int]) -> bytes:
    out = bytearray()
    for start in range(0, len(bits), 6):
        chunk = bits[start : start + 6]
        chunk += [0] * (6 - len(chunk))
        value = 0
        for b in chunk:
            value = value << 1 | b
        out.append(value + 63)
    return bytes(out)


def encode_graph6(g: Graph) -> bytes:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 single-byte header supports n <= {GRAPH6_MAX_N}")
    return bytes((g.n + 63,)) + _pack_body(_column_bits(g))


def graph6_bytes_from_rows(n: int, rows: list[int]) -> bytes:
    """Assemble graph6 bytes from per-vertex prefix-adjacency rows.

    ``rows[j]`` holds the j bits of adjacency between vertex j+1 and
    vertices 0..j, most significant bit first; this is exactly the
    graph6 column order.
    """
    bits: list[int] = []
    for j, row in enumerate(rows, start=1):
        bits.extend(row >> (j - k) & 1 for k in range(1, j + 1))
    return bytes((n + 63,)) + _pack_body(bits)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        try:
            raw = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6ParseError("non-ASCII character", exc.start) from None
    else:
        raw = bytes(data)
    if not raw:
        raise Graph6ParseError("empty input", 0)
    n = raw[0] - 63
    if not 0 <= n <= GRAPH6_MAX_N:
        raise Graph6ParseError(f"header byte {raw[0]} outside n=0..{GRAPH6_MAX_N} range", 0)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = raw[1:]
    if len(body) < expected:
        raise Graph6ParseError(f"body too short: expected {expected} bytes", len(raw))
    if len(body) > expected:
        raise Graph6ParseError(f"body too long: expected {expected} bytes", 1 + expected)
    masks = [0] * n
    bit_index = 0
    for offset, byte in enumerate(body, start=1):
        value = byte - 63
        if not 0 <= value < 64:
            raise Graph6ParseError(f"body byte {byte} outside graph6 range", offset)
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6ParseError("nonzero padding bits", offset)
                continue
            if bit:
                i, j = _bit_position(bit_index)
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            bit_index += 1
    return Graph.from_masks(n, masks)


def _bit_position(index: int) -> tuple[int, int]:
    # Invert the column-order enumeration: column j holds bits for i < j.
    j = 1
    while index >= j:
        index -= j
        j += 1
    return index, j


def encode_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_edgelist(text: str) -> Graph:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("edge-list input is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"edge-list header {lines[0]!r} is not a vertex count") from None
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        edges.append((u, v))
    return Graph(n, edges)
