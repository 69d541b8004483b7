"""graph6 encoding for graphs with at most 62 vertices.

Only the single-byte size header is supported.  The upper triangle is read
column by column, (0,1), (0,2), (1,2), (0,3), ..., packed six bits per byte,
most significant bit first, each byte offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph

MAX_ORDER = 62
HEADER = ">>graph6<<"


def encode(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} needs a multi-byte header, unsupported", 0)
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(line: str) -> Graph:
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 line", base)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", base + pos)
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise Graph6Error("multi-byte size header is unsupported", base)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(s) - 1 != nbytes:
        off = base + min(len(s), 1 + nbytes)
        raise Graph6Error(f"expected {nbytes} body bytes for n={n}, got {len(s) - 1}", off)
    rows = [0] * n
    i, j = 0, 1
    for k in range(nbytes):
        val = ord(s[1 + k]) - 63
        for shift in range(5, -1, -1):
            idx = 6 * k + (5 - shift)
            bit = val >> shift & 1
            if idx >= npairs:
                if bit:
                    raise Graph6Error("nonzero padding bit", base + 1 + k)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode every nonblank line."""
    for line in lines:
        if line.strip():
            yield decode(line.strip())


def write_lines(graphs: Iterable[Graph]) -> str:
    return "".join(encode(g) + "\n" for g in graphs)
