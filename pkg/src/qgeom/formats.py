"""Serialization: graph6, DIMACS edge lists, JSON, and incidence CSV.

graph6 follows the standard ASCII encoding: a size header, then the
upper triangle of the adjacency matrix read column by column, six bits
per printable character.  Vertex order is construction order, so
identical objects serialize byte-identically.
"""

from __future__ import annotations

from .geometry import Design, Graph

_G6_MAX = 258047


def _g6_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative size")
    if n <= 62:
        return chr(n + 63)
    if n <= _G6_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graphs beyond {_G6_MAX} vertices are not supported")


def encode_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    out = [_g6_size(n)]
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(s: str) -> Graph:
    s = s.strip()
    if not s:
        raise ValueError("empty graph6 string")
    if s[0] == "~":
        if len(s) < 4:
            raise ValueError("truncated graph6 size")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 0:
        raise ValueError("bad graph6 size byte")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError(f"graph6 body length {len(body)} does not fit {n} vertices")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"byte {ch!r} outside graph6 range")
        bits.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(range(n), adj)


def encode_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges()}"]
    for i, j in g.edges():
        lines.append(f"e {i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}


def graph_from_json(obj: dict) -> Graph:
    return Graph.from_edges(obj["n"], obj["edges"])


def design_to_json(d: Design) -> dict:
    return {"v": d.v, "blocks": [list(b) for b in d.blocks]}


def design_from_json(obj: dict) -> Design:
    return Design(range(obj["v"]), obj["blocks"])


def incidence_csv(d: Design) -> str:
    lines = []
    for row in d.incidence_rows():
        lines.append(",".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
