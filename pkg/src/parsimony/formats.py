"""Edge-list and graph6 readers/writers.

Edge-list text: a header line ``"n m"`` followed by ``m`` lines ``"u v"``
with 0-based vertex indices.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed input text (as opposed to a well-formed but invalid graph)."""


def parse_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge-list input")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise ParseError(f"bad header line {lines[0]!r}, expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    pairs = []
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    return build_graph(n, pairs)


def format_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        digits, start = data[2:8], 8
    else:
        digits, start = data[1:4], 4
    n = 0
    for c in digits:
        n = (n << 6) | (c - 63)
    return n, start


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 string.

    The upper triangle of the adjacency matrix is read column by column
    (``x(0,1), x(0,2), x(1,2), x(0,3), ...``), six bits per printable byte.
    Edge ids follow that bit order.
    """
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("graph6 data contains bytes outside 63..126")
    n, start = _decode_n(data)
    nbits = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return build_graph(n, pairs)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def iter_graph6(text: str) -> Iterator[Graph]:
    for ln in text.splitlines():
        if ln.strip():
            yield parse_graph6(ln)


def read_graph(path: str | Path, fmt: str = "edgelist") -> Graph:
    """Read a single graph from ``path`` (``fmt`` is ``edgelist`` or ``graph6``)."""
    text = Path(path).read_text(encoding="ascii")
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        graphs = list(iter_graph6(text))
        if len(graphs) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise ValueError(f"unknown format {fmt!r}")


__all__ = [
    "GraphError",
    "ParseError",
    "format_edgelist",
    "format_graph6",
    "iter_graph6",
    "parse_edgelist",
    "parse_graph6",
    "read_graph",
]
