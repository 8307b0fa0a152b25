"""Text formats: graph6 / sparse6 and the plain ``n m`` edge-list family."""

from __future__ import annotations

from typing import Iterator

from .graph import Graph


class ParseError(ValueError):
    """Malformed input.  ``offset`` is a byte offset, ``line`` a 1-based line number."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


# ---------------------------------------------------------------------------
# graph6 / sparse6


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("vertex count too large for graph6")


def _decode_n(data: bytes, start: int) -> tuple[int, int]:
    """Return ``(n, next_offset)``."""
    def val(i: int) -> int:
        if i >= len(data):
            raise ParseError("truncated vertex count", offset=i)
        c = data[i]
        if not 63 <= c <= 126:
            raise ParseError(f"invalid character {chr(c)!r}", offset=i)
        return c - 63

    if start >= len(data):
        raise ParseError("missing vertex count", offset=start)
    if data[start] != 126:
        return val(start), start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        n = 0
        for i in range(start + 2, start + 8):
            n = n << 6 | val(i)
        return n, start + 8
    n = 0
    for i in range(start + 1, start + 4):
        n = n << 6 | val(i)
    return n, start + 4


def _strip(text: str | bytes, header: bytes) -> tuple[bytes, int]:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    base = 0
    if data.startswith(header):
        base = len(header)
    return data, base


def emit_graph6(G: Graph) -> str:
    out = [_encode_n(G.n)]
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    data, pos = _strip(text, b">>graph6<<")
    n, pos = _decode_n(data, pos)
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    if len(data) - pos != need:
        raise ParseError(
            f"graph6 body has {len(data) - pos} bytes, expected {need} for n={n}",
            offset=min(len(data), pos + need),
        )
    adj = [0] * n
    k = 0
    j, i = 1, 0
    for off in range(pos, pos + need):
        c = data[off]
        if not 63 <= c <= 126:
            raise ParseError(f"invalid character {chr(c)!r}", offset=off)
        c -= 63
        for b in range(5, -1, -1):
            bit = c >> b & 1
            if k >= total:
                if bit:
                    raise ParseError("non-zero padding bits", offset=off)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, tuple(adj))


def parse_sparse6(text: str | bytes) -> Graph:
    data, pos = _strip(text, b">>sparse6<<")
    if pos >= len(data) or data[pos] != ord(":"):
        raise ParseError("sparse6 must start with ':'", offset=pos)
    n, pos = _decode_n(data, pos + 1)
    k = 1
    while 1 << k < n:
        k += 1
    chunks = []
    for off in range(pos, len(data)):
        c = data[off]
        if not 63 <= c <= 126:
            raise ParseError(f"invalid character {chr(c)!r}", offset=off)
        chunks.append(c - 63)

    def pairs() -> Iterator[tuple[int, int]]:
        it = iter(chunks)
        d = 0
        dlen = 0
        while True:
            if dlen < 1:
                try:
                    d = next(it)
                except StopIteration:
                    return
                dlen = 6
            dlen -= 1
            b = d >> dlen & 1
            x = d & ((1 << dlen) - 1)
            xlen = dlen
            while xlen < k:
                try:
                    d = next(it)
                except StopIteration:
                    return
                dlen = 6
                x = (x << 6) + d
                xlen += 6
            x >>= xlen - k
            dlen = xlen - k
            yield b, x

    adj = [0] * n
    v = 0
    for b, x in pairs():
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise ParseError(f"loop at vertex {x} (simple graphs only)")
            adj[x] |= 1 << v
            adj[v] |= 1 << x
    return Graph(n, tuple(adj))


def parse_graph_line(line: str | bytes) -> Graph:
    """Parse one graph6 or sparse6 record."""
    s = line.decode("ascii") if isinstance(line, bytes) else line
    s = s.strip()
    if s.startswith(":") or s.startswith(">>sparse6<<"):
        return parse_sparse6(s)
    return parse_graph6(s)


def normalize_graph6(text: str | bytes) -> str:
    data, pos = _strip(text, b">>graph6<<")
    return data[pos:].decode("ascii")


# ---------------------------------------------------------------------------
# edge lists


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _read_pairs(text: str, kind: str) -> tuple[int, list[tuple[int, int, int]]]:
    records = list(_records(text))
    if not records:
        raise ParseError(f"empty {kind} input", line=1)
    lineno, head = records[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", line=lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must contain two integers", line=lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative count in header", line=lineno)
    body = records[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} pairs, found {len(body)}", line=lineno)
    pairs = []
    for lineno, rec in body:
        if len(rec) != 2:
            raise ParseError("expected 'u v'", line=lineno)
        try:
            u, v = int(rec[0]), int(rec[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=lineno)
        pairs.append((lineno, u, v))
    return n, pairs


def parse_edgelist(text: str) -> Graph:
    n, pairs = _read_pairs(text, "edge-list")
    seen = set()
    for lineno, u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
    return Graph.from_edges(n, seen)


def emit_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str):
    from .constructions import Digraph

    n, pairs = _read_pairs(text, "digraph")
    seen = set()
    for lineno, u, v in pairs:
        if (u, v) in seen:
            raise ParseError(f"duplicate arc ({u}, {v})", line=lineno)
        seen.add((u, v))
    return Digraph(n, tuple(sorted(seen)))


def parse_poset(text: str):
    """Poset from cover relations ``u v`` meaning ``u < v``; the order is
    the transitive closure.  Directed cycles are rejected."""
    from .constructions import Poset

    n, pairs = _read_pairs(text, "poset")
    covers = []
    seen = set()
    for lineno, u, v in pairs:
        if (u, v) in seen:
            raise ParseError(f"duplicate cover relation ({u}, {v})", line=lineno)
        seen.add((u, v))
        covers.append((u, v))
    try:
        return Poset.from_relations(n, covers)
    except ValueError as exc:
        raise ParseError(str(exc), line=pairs[-1][0] if pairs else 1) from None


def read_graphs(text: str) -> Iterator[tuple[int, Graph | ParseError]]:
    """Graphs from a text stream: an edge-list document (``n m`` header) or
    one graph6/sparse6 record per line.  Yields ``(line, graph_or_error)``."""
    records = list(_records(text))
    if records and len(records[0][1]) == 2 and all(t.lstrip("-").isdigit() for t in records[0][1]):
        try:
            yield records[0][0], parse_edgelist(text)
        except ParseError as exc:
            yield records[0][0], exc
        return
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield lineno, parse_graph_line(s)
        except ParseError as exc:
            yield lineno, ParseError(str(exc), line=lineno)
