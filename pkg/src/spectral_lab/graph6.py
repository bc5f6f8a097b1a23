"""graph6 encoding and decoding (bit-exact with nauty's format)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 68719476735


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= MAX_N:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` without header or trailing newline."""
    out = [_encode_n(g.n)]
    acc = nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a single graph6 record; a leading header and surrounding whitespace are ignored."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 record", base)
    if s[0] == ":":
        raise Graph6Error("sparse6 input is not supported", base)
    if s[0] == "&":
        raise Graph6Error("digraph6 input is not supported", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + i)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        raise Graph6Error("truncated vertex-count field", base + len(s))
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        where = base + pos + min(len(body), need)
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, found {len(body)}", where)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    padding = len(body) * 6 - idx
    if padding and body[-1] & ((1 << padding) - 1):
        raise Graph6Error("non-zero padding bits", base + pos + len(body) - 1)
    return Graph._trusted(rows)


def read_graph6_lines(stream: TextIO | Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for non-blank lines, skipping a header line."""
    for lineno, line in enumerate(stream, start=1):
        rec = line.strip()
        if not rec:
            continue
        if rec == HEADER:
            continue
        yield lineno, rec


def write_graph6_lines(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(to_graph6(g) + "\n")
