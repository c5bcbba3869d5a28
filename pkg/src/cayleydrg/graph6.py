"""graph6 text encoding of simple graphs.

Format: the vertex count, then the upper triangle of the adjacency matrix
in the order x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte,
each byte offset by 63. n <= 62 is a single byte n+63; larger n (up to
258047) is byte 126 followed by three bytes carrying an 18-bit n in 6-bit
groups, high group first.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph

__all__ = ["graph6_encode", "graph6_decode"]

_HEADER = ">>graph6<<"


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph6 output limited to n <= 258047")
    bits = []
    for j in range(1, n):
        col = g.adj[:j, j]
        bits.extend(int(b) for b in col)
    out = bytearray(head)
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def graph6_decode(text: str, strict: bool = True) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise ValueError("empty graph6 input")
    for b in data:
        if not 63 <= b <= 126:
            raise ValueError(f"byte {b} outside graph6 range 63..126")
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 inputs above 258047 vertices not supported")
        if len(data) < 4:
            raise ValueError("truncated vertex count")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ValueError(f"truncated: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise ValueError(f"trailing garbage: {len(body) - nbytes} extra byte(s)")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    if strict and any(bits[nbits:]):
        raise ValueError("nonzero padding bits")
    adj = np.zeros((n, n), dtype=bool)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i, j] = adj[j, i] = True
            k += 1
    return Graph(adj)
