"""Readers and writers for graph6, DIMACS edge format and a plain edge list.

graph6 follows the format description shipped with nauty: a size header
(one byte for n < 63, ``~`` plus three bytes for n < 258048), then the upper
triangle of the adjacency matrix in column order, six bits per byte, each
byte offset by 63, zero padded.  DIMACS input is 1-based; everything
returned from here is 0-based.

The edge-list format is ``n <count>`` on the first line followed by one
``u v`` pair per line, 0-based.  ``#`` starts a comment.
"""

from __future__ import annotations

import os
import warnings
from typing import Iterator

import numpy as np

from .graph import Graph

__all__ = [
    "FORMATS",
    "GraphFormatError",
    "InvalidCharacter",
    "MalformedLine",
    "MissingProblemLine",
    "TrailingGarbage",
    "TruncatedPayload",
    "UnsupportedSize",
    "VertexOutOfRange",
    "canonical_format",
    "decode",
    "decode_dimacs",
    "decode_edgelist",
    "decode_graph6",
    "encode",
    "encode_dimacs",
    "encode_edgelist",
    "encode_graph6",
    "format_for_path",
    "iter_graph6_lines",
    "sniff_format",
]

FORMATS = ("graph6", "dimacs", "edgelist")
GRAPH6_MAX_N = 258047
_G6_HEADER = b">>graph6<<"
_BIT_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)


class GraphFormatError(ValueError):
    """Parse failure.  ``position`` is a byte offset, ``line`` a 1-based line."""

    def __init__(self, message: str, *, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"byte {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class InvalidCharacter(GraphFormatError):
    pass


class TruncatedPayload(GraphFormatError):
    pass


class TrailingGarbage(GraphFormatError):
    pass


class UnsupportedSize(GraphFormatError):
    pass


class MissingProblemLine(GraphFormatError):
    pass


class VertexOutOfRange(GraphFormatError):
    pass


class MalformedLine(GraphFormatError):
    pass


def _as_bytes(payload: bytes | str) -> bytes:
    return payload.encode("ascii", errors="replace") if isinstance(payload, str) else bytes(payload)


def _as_text(payload: bytes | str) -> str:
    return payload.decode("ascii", errors="replace") if isinstance(payload, bytes) else payload


# graph6 ---------------------------------------------------------------------

def _column_order(n: int) -> tuple[np.ndarray, np.ndarray]:
    # tril rows are sorted by row then column: (j, i) with i < j, i.e. the
    # upper triangle read column by column.
    j, i = np.tril_indices(n, -1)
    return i, j


def decode_graph6(payload: bytes | str) -> Graph:
    data = _as_bytes(payload)
    if data.endswith(b"\n"):
        data = data[:-1]
        if data.endswith(b"\r"):
            data = data[:-1]
    offset = 0
    if data.startswith(_G6_HEADER):
        offset = len(_G6_HEADER)
    for pos in range(offset, len(data)):
        if not 63 <= data[pos] <= 126:
            raise InvalidCharacter(f"byte {data[pos]!r} outside graph6 range [63, 126]", position=pos)
    if len(data) <= offset:
        raise TruncatedPayload("missing size header", position=offset)
    if data[offset] != 126:
        n = data[offset] - 63
        body = offset + 1
    else:
        if len(data) > offset + 1 and data[offset + 1] == 126:
            raise UnsupportedSize("8-byte graph6 size headers are not supported", position=offset)
        if len(data) < offset + 4:
            raise TruncatedPayload("size header cut short", position=len(data))
        n = 0
        for b in data[offset + 1 : offset + 4]:
            n = (n << 6) | (b - 63)
        body = offset + 4

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    have = len(data) - body
    if have < nbytes:
        raise TruncatedPayload(f"need {nbytes} adjacency bytes for n={n}, found {have}", position=len(data))
    if have > nbytes:
        raise TrailingGarbage("bytes after the adjacency triangle", position=body + nbytes)

    chunk = np.frombuffer(data, dtype=np.uint8, count=nbytes, offset=body) - 63
    bits = np.unpackbits(chunk[:, None], axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        raise TrailingGarbage("non-zero padding bits", position=len(data) - 1)
    adj = np.zeros((n, n), dtype=bool)
    i, j = _column_order(n)
    present = bits[:nbits].astype(bool)
    adj[i[present], j[present]] = True
    adj |= adj.T
    return Graph.from_adjacency(adj, check=False)


def encode_graph6(G: Graph) -> bytes:
    n = G.n
    if n > GRAPH6_MAX_N:
        raise UnsupportedSize(f"n={n} needs an 8-byte graph6 header, which is not supported")
    if n < 63:
        header = bytes([n + 63])
    else:
        header = bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    i, j = _column_order(n)
    bits = G.adjacency[i, j].astype(np.uint8)
    pad = -len(bits) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    body = bits.reshape(-1, 6) @ _BIT_WEIGHTS + 63 if len(bits) else np.zeros(0, dtype=np.uint8)
    return header + body.astype(np.uint8).tobytes()


def iter_graph6_lines(payload: bytes | str) -> Iterator[tuple[int, bytes]]:
    """Yield ``(line_number, line)`` for each non-blank line of a graph6 file."""
    for number, line in enumerate(_as_bytes(payload).splitlines(), start=1):
        line = line.strip()
        if line:
            yield number, line


# DIMACS ---------------------------------------------------------------------

def _int_fields(fields: list[str], line: int, text: str) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise MalformedLine(f"expected integers in {text!r}", line=line) from None


def decode_dimacs(payload: bytes | str) -> Graph:
    n = declared = None
    edges = set()
    for number, raw in enumerate(_as_text(payload).splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise MalformedLine("second problem line", line=number)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise MalformedLine(f"expected 'p edge <n> <m>', got {raw.strip()!r}", line=number)
            n, declared = _int_fields(fields[2:], number, raw.strip())
            if n < 0 or declared < 0:
                raise MalformedLine("negative count in problem line", line=number)
        elif tag == "e":
            if n is None:
                raise MissingProblemLine("edge line before 'p edge' line", line=number)
            if len(fields) != 3:
                raise MalformedLine(f"expected 'e <u> <v>', got {raw.strip()!r}", line=number)
            u, v = _int_fields(fields[1:], number, raw.strip())
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside [1, {n}]", line=number)
            if u == v:
                raise MalformedLine(f"self-loop at vertex {u}", line=number)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise MalformedLine(f"unknown line type {tag!r}", line=number)
    if n is None:
        raise MissingProblemLine("no 'p edge' line")
    if declared != len(edges):
        warnings.warn(f"problem line declares {declared} edges, found {len(edges)} distinct", stacklevel=2)
    return Graph(n, sorted(edges))


def encode_dimacs(G: Graph) -> bytes:
    edges = G.edges()
    lines = [f"p edge {G.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return ("\n".join(lines) + "\n").encode("ascii")


# edge list ------------------------------------------------------------------

def decode_edgelist(payload: bytes | str) -> Graph:
    n = None
    edges = []
    for number, raw in enumerate(_as_text(payload).splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise MissingProblemLine(f"expected 'n <count>' header, got {text!r}", line=number)
            (n,) = _int_fields(fields[1:], number, text)
            if n < 0:
                raise MalformedLine("negative vertex count", line=number)
            continue
        if len(fields) != 2:
            raise MalformedLine(f"expected 'u v', got {text!r}", line=number)
        u, v = _int_fields(fields, number, text)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside [0, {n})", line=number)
        if u == v:
            raise MalformedLine(f"self-loop at vertex {u}", line=number)
        edges.append((u, v))
    if n is None:
        raise MissingProblemLine("no 'n <count>' header")
    return Graph(n, edges)


def encode_edgelist(G: Graph) -> bytes:
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return ("\n".join(lines) + "\n").encode("ascii")


# dispatch -------------------------------------------------------------------

_DECODERS = {"graph6": decode_graph6, "dimacs": decode_dimacs, "edgelist": decode_edgelist}
_ENCODERS = {"graph6": encode_graph6, "dimacs": encode_dimacs, "edgelist": encode_edgelist}
_EXTENSIONS = {".g6": "graph6", ".col": "dimacs", ".dimacs": "dimacs", ".el": "edgelist"}
_ALIASES = {"g6": "graph6", "graph6": "graph6", "dimacs": "dimacs", "col": "dimacs",
            "edgelist": "edgelist", "el": "edgelist"}


def canonical_format(name: str) -> str:
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown graph format {name!r}") from None


def format_for_path(path: str | os.PathLike) -> str | None:
    return _EXTENSIONS.get(os.path.splitext(os.fspath(path))[1].lower())


def sniff_format(payload: bytes | str) -> str:
    """Guess the format of unlabelled input from its first meaningful line."""
    for raw in _as_text(payload).splitlines():
        fields = raw.split()
        if not fields or raw.lstrip().startswith("#"):
            continue
        if fields[0] in ("c", "p", "e"):
            return "dimacs"
        if fields[0] == "n":
            return "edgelist"
        return "graph6"
    return "graph6"


def decode(payload: bytes | str, fmt: str) -> Graph:
    return _DECODERS[canonical_format(fmt)](payload)


def encode(G: Graph, fmt: str) -> bytes:
    data = _ENCODERS[canonical_format(fmt)](G)
    return data + b"\n" if canonical_format(fmt) == "graph6" else data
