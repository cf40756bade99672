"""
graph6 codec and line readers.
Infrastructure layer for the text format emitted by external graph generators.

Only the header-free short form (n < 63) is supported. Each graph is one line:
a size byte n+63 followed by the upper triangle of the adjacency matrix read
column by column, (0,1),(0,2),(1,2),(0,3),..., packed six bits per byte,
most significant bit first, each byte offset by 63.
"""
import logging
import sys
from pathlib import Path
from typing import IO, Iterable, Iterator, List, Optional, Union

from annihilator.domain.errors import Graph6Error, UnsupportedError
from annihilator.domain.models import Graph

logger = logging.getLogger(__name__)

MAX_ORDER = 62
_OFFSET = 63
_HEADER = ">>graph6<<"


def _triangle_bytes(n: int) -> int:
    bits = n * (n - 1) // 2
    return (bits + 5) // 6


def decode_graph6(text: Union[str, bytes]) -> Graph:
    """
    Decode one graph6 line.

    Args:
        text: graph6 string; a single trailing newline is tolerated

    Returns:
        Graph whose adjacency matches the encoded bit stream

    Raises:
        Graph6Error: if the text is not valid header-free graph6 with n < 63
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise Graph6Error(f"graph6 must be ASCII: {e}") from e
    line = text[:-1] if text.endswith("\n") else text
    if line.endswith("\r"):
        line = line[:-1]

    if not line:
        raise Graph6Error("Empty graph6 string")
    if line.startswith(_HEADER) or line.startswith(">>"):
        raise Graph6Error(f"graph6 header is not accepted: {line!r}")
    if line.startswith("&"):
        raise Graph6Error(f"digraph6 is not accepted: {line!r}")
    if line.startswith(":"):
        raise Graph6Error(f"sparse6 is not accepted: {line!r}")

    codes = [ord(c) - _OFFSET for c in line]
    for c, code in zip(line, codes):
        if not 0 <= code <= 63:
            raise Graph6Error(f"Character {c!r} outside the graph6 range")

    n = codes[0]
    if n == 63:
        raise Graph6Error(f"graph6 orders above {MAX_ORDER} are not supported: {line!r}")
    body = codes[1:]
    if len(body) != _triangle_bytes(n):
        raise Graph6Error(f"Expected {_triangle_bytes(n)} data bytes for n={n}, got {len(body)}")

    bits = 0
    for code in body:
        bits = (bits << 6) | code
    total = 6 * len(body)
    used = n * (n - 1) // 2
    if bits & ((1 << (total - used)) - 1):
        raise Graph6Error(f"Padding bits set beyond the triangle: {line!r}")

    adjacency = [0] * n
    position = total - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> position & 1:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
            position -= 1
    return Graph(n=n, adjacency=tuple(adjacency))


def encode_graph6(g: Graph) -> str:
    """
    Encode a graph as a graph6 string (no newline).

    Raises:
        UnsupportedError: if n exceeds the short-form range
    """
    if g.n > MAX_ORDER:
        raise UnsupportedError(f"graph6 encoding supports n <= {MAX_ORDER}, got {g.n}")
    chars = [chr(g.n + _OFFSET)]
    value = 0
    count = 0
    for j in range(1, g.n):
        column = g.adjacency[j]
        for i in range(j):
            value = (value << 1) | (column >> i & 1)
            count += 1
            if count == 6:
                chars.append(chr(value + _OFFSET))
                value = 0
                count = 0
    if count:
        chars.append(chr((value << (6 - count)) + _OFFSET))
    return "".join(chars)


def iter_graph6_lines(stream: Iterable[str]) -> Iterator[str]:
    """Yield non-blank graph6 lines from a text stream, stripped of line endings."""
    for number, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        if line.startswith(">>"):
            raise Graph6Error(f"Line {number}: graph6 header is not accepted")
        yield line


def read_graph6_file(path: Union[str, Path]) -> List[str]:
    """Read every graph6 line from a file."""
    logger.info(f"Reading graph6 lines from {path}")
    with open(path, "r", encoding="ascii") as handle:
        return list(iter_graph6_lines(handle))


def read_graph6_stream(stream: Optional[IO[str]] = None) -> List[str]:
    """Read every graph6 line from a stream (standard input by default)."""
    return list(iter_graph6_lines(stream if stream is not None else sys.stdin))
