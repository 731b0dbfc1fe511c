"""graph6 and edge-list codecs."""
from __future__ import annotations

from pathlib import Path

import networkx as nx

from .errors import GraphFormatError, QToughError
from .graph_core import Graph, from_networkx, to_networkx

GRAPH6_HEADER = b">>graph6<<"


def _graph6_size(body: bytes) -> tuple[int, int]:
    """Return (n, length of the size prefix)."""
    if body[0] != 126:
        return body[0] - 63, 1
    if len(body) >= 2 and body[1] == 126:
        if len(body) < 8:
            raise GraphFormatError("truncated 8-byte graph6 size", offset=len(body))
        n = 0
        for c in body[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(body) < 4:
        raise GraphFormatError("truncated 4-byte graph6 size", offset=len(body))
    n = 0
    for c in body[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(data: bytes) -> Graph:
    text = data.strip()
    base = 0
    if text.startswith(b">"):
        if not text.startswith(GRAPH6_HEADER):
            raise GraphFormatError("unsupported header, only >>graph6<< is accepted", offset=0)
        base = len(GRAPH6_HEADER)
    body = text[base:]
    if not body:
        raise GraphFormatError("empty graph6 record", offset=base)
    for i, c in enumerate(body):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"byte {c!r} outside graph6 range 63..126", offset=base + i)
    n, prefix = _graph6_size(body)
    expected = prefix + (n * (n - 1) // 2 + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 record for n={n} needs {expected} bytes, got {len(body)}",
            offset=base + min(len(body), expected),
        )
    try:
        return from_networkx(nx.from_graph6_bytes(body))
    except (nx.NetworkXError, ValueError) as e:
        raise GraphFormatError(str(e), offset=base) from e


def format_graph6(g: Graph, header: bool = False) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=header).decode("ascii").strip()


def parse_edge_list(text: str) -> Graph:
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    lines = [(no, line) for no, line in lines if line and not line.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge list", line=1)
    no, head = lines[0]
    try:
        n, m = (int(tok) for tok in head.split())
    except ValueError as e:
        raise GraphFormatError(f"expected header 'n m', got {head!r}", line=no) from e
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}", line=no)
    edges = []
    for no, line in body:
        try:
            u, v = (int(tok) for tok in line.split())
        except ValueError as e:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line=no) from e
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge ({u}, {v}) for n={n}", line=no)
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except QToughError as e:
        raise GraphFormatError(str(e), line=1) from e


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges])


def detect_format(data: bytes) -> str:
    head = data.lstrip()[:1]
    if not head:
        raise GraphFormatError("empty input", offset=0)
    if head.isdigit():
        return "edges"
    if head == b">" or 63 <= head[0] <= 126:
        return "g6"
    raise GraphFormatError(f"cannot detect graph format from leading byte {head!r}", offset=0)


def parse_graph(data: bytes, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(data)
    if fmt == "g6":
        return parse_graph6(data)
    if fmt == "edges":
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError("invalid UTF-8 in edge list", offset=e.start) from e
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def read_graph(path: Path, fmt: str | None = None) -> Graph:
    try:
        data = path.read_bytes()
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e.strerror}") from e
    return parse_graph(data, fmt)


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return format_graph6(g)
    if fmt == "edges":
        return format_edge_list(g)
    raise GraphFormatError(f"unknown graph format {fmt!r}")
