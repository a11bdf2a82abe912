"""
graph6 encoding and decoding.

Format: N(n) header, then the upper triangle of the adjacency matrix in
column order (bit (i, j) for j = 1..n-1, i = 0..j-1), packed six bits per
byte, big-endian within each byte, offset by 63.
"""

from typing import List, Sequence, Union

from app.errors import Graph6ParseError
from app.models.graph import MAX_VERTICES, Graph

HEADER = b'>>graph6<<'


def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def pack_bits(n: int, bits: Sequence[int]) -> bytes:
    """Header plus six-bit packing of an upper-triangle bit sequence"""
    body = bytearray()
    for start in range(0, len(bits), 6):
        chunk = list(bits[start:start + 6])
        chunk += [0] * (6 - len(chunk))
        value = 0
        for bit in chunk:
            value = value << 1 | bit
        body.append(value + 63)
    return _size_header(n) + bytes(body)


def upper_triangle_bits(graph: Graph) -> List[int]:
    rows = graph.rows
    return [rows[i] >> j & 1 for j in range(1, graph.n) for i in range(j)]


def graph6_encode(graph: Graph) -> str:
    return pack_bits(graph.n, upper_triangle_bits(graph)).decode('ascii')


def graph6_decode(text: Union[str, bytes]) -> Graph:
    if isinstance(text, str):
        for offset, char in enumerate(text):
            if ord(char) > 126:
                raise Graph6ParseError(f"Character {char!r} outside the printable graph6 range", offset)
        data = text.encode('ascii')
    else:
        data = bytes(text)
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
        data = data[base:]
    data = data.rstrip(b'\r\n')

    if not data:
        raise Graph6ParseError("Empty graph6 string", base)

    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"Byte {byte!r} outside the printable graph6 range", base + offset)

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6ParseError(f"Graphs with more than {MAX_VERTICES} vertices are not supported", base)
        if len(data) < 4:
            raise Graph6ParseError("Truncated size header", base + len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        cursor = 4
    else:
        n = data[0] - 63
        cursor = 1

    if n < 1:
        raise Graph6ParseError("Graph must have at least one vertex", base)
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"Graphs with more than {MAX_VERTICES} vertices are not supported", base)

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = data[cursor:]
    if len(body) < expected:
        raise Graph6ParseError(f"Truncated body: expected {expected} bytes, got {len(body)}",
                               base + len(data))
    if len(body) > expected:
        raise Graph6ParseError("Unexpected trailing bytes", base + cursor + expected)

    rows = [0] * n
    position = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[position // 6] - 63
            if byte >> (5 - position % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position += 1

    if bit_count % 6:
        padding = (body[-1] - 63) & ((1 << (6 - bit_count % 6)) - 1)
        if padding:
            raise Graph6ParseError("Nonzero padding bits", base + cursor + expected - 1)

    return Graph(n, tuple(rows))


def read_graphs(text: str) -> List[Graph]:
    """Decode one graph per non-blank line"""
    graphs = []
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped:
            try:
                graphs.append(graph6_decode(stripped))
            except Graph6ParseError as e:
                lead = len(line) - len(line.lstrip())
                raise Graph6ParseError(e.reason, offset + lead + e.offset) from e
        offset += len(line)
    return graphs
