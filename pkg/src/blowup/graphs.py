"""Simple undirected graphs with dense boolean adjacency, plus the graph6 codec.

Vertices are 0..n-1. Loops and multi-edges cannot be represented; the
constructor rejects asymmetric or loopy adjacency. All combinators return
new graphs and never mutate.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import GraphParseError

G6_MAX_VERTICES = 258047  # largest order the 4-byte graph6 header can carry


class Graph:
    """Undirected simple graph backed by a read-only boolean matrix."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency):
        a = np.array(adjacency, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        n = a.shape[0]
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        if a.diagonal().any():
            raise ValueError("loops are not allowed")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        a.setflags(write=False)
        self._adj = a

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build from an edge list; duplicate edges collapse, loops are rejected."""
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        a = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            a[i, j] = a[j, i] = True
        return cls(a)

    @property
    def adj(self) -> np.ndarray:
        return self._adj

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1).astype(np.int64)

    def is_regular(self) -> bool:
        d = self.degrees()
        return bool((d == d[0]).all())

    def matrix(self, dtype=np.float64) -> np.ndarray:
        return self._adj.astype(dtype)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._adj[i, j])

    def triangle_count(self) -> int:
        a = self._adj.astype(np.int64)
        return int(np.trace(a @ a @ a)) // 6

    def relabeled(self, perm) -> "Graph":
        """Apply a vertex permutation: new vertex perm[i] is old vertex i."""
        p = np.asarray(perm)
        inv = np.empty_like(p)
        inv[p] = np.arange(self.n)
        return Graph(self._adj[np.ix_(inv, inv)])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


# -- constructors ---------------------------------------------------------


def complete(n: int) -> Graph:
    """Complete graph K_n, n >= 1."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    a = np.ones((n, n), dtype=bool)
    np.fill_diagonal(a, False)
    return Graph(a)


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    return Graph(np.zeros((n, n), dtype=bool))


# -- combinators ------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    a = np.zeros((g.n + h.n, g.n + h.n), dtype=bool)
    a[: g.n, : g.n] = g.adj
    a[g.n :, g.n :] = h.adj
    return Graph(a)


def complement(g: Graph) -> Graph:
    a = ~g.adj
    a = a.copy()
    np.fill_diagonal(a, False)
    return Graph(a)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian (box) product; vertex (u, v) maps to index u*h.n + v."""
    eg = np.eye(g.n, dtype=bool)
    eh = np.eye(h.n, dtype=bool)
    a = np.kron(g.adj, eh) | np.kron(eg, h.adj)
    return Graph(a)


def closed_blowup_graph(g: Graph, t: int) -> Graph:
    """Replace each vertex by a t-clique and each edge by complete bipartite joins.

    Vertex (v, a) maps to index v*t + a. The result is (t*d + t - 1)-regular
    whenever g is d-regular. t == 1 returns a copy of g.
    """
    if t < 1:
        raise ValueError("blowup factor t must be >= 1")
    block = np.ones((t, t), dtype=bool)
    inner = block.copy()
    np.fill_diagonal(inner, False)
    a = np.kron(g.adj, block) | np.kron(np.eye(g.n, dtype=bool), inner)
    return Graph(a)


# -- graph6 codec -----------------------------------------------------------
#
# Bytes are printable ASCII 63..126 storing 6-bit groups (value + 63).
# The order goes first, then the upper triangle in column-major order
# x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per byte, most significant
# bit first, zero-padded to a byte boundary.


@lru_cache(maxsize=256)
def triu_pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column index arrays for the graph6 bit order on n vertices."""
    ii = np.array([i for j in range(1, n) for i in range(j)], dtype=np.intp)
    jj = np.array([j for j in range(1, n) for i in range(j)], dtype=np.intp)
    return ii, jj


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= G6_MAX_VERTICES:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 order {n} exceeds the supported maximum {G6_MAX_VERTICES}")


def g6_encode_bits(n: int, bits: np.ndarray) -> str:
    """Encode edge bits already in graph6 order (length n*(n-1)//2)."""
    nbits = n * (n - 1) // 2
    if len(bits) != nbits:
        raise ValueError(f"expected {nbits} edge bits, got {len(bits)}")
    pad = (-nbits) % 6
    padded = np.concatenate([bits.astype(np.uint8), np.zeros(pad, dtype=np.uint8)])
    groups = padded.reshape(-1, 6)
    weights = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    vals = groups @ weights + 63
    return (_encode_order(n) + vals.astype(np.uint8).tobytes()).decode("ascii")


def g6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 string (short or 4-byte long form)."""
    ii, jj = triu_pair_arrays(g.n)
    return g6_encode_bits(g.n, g.adj[ii, jj])


def g6_decode(text) -> Graph:
    """Decode one graph6 string; accepts an optional '>>graph6<<' header.

    Raises GraphParseError with a byte offset on malformed input. Padding
    bits must be zero and the byte count must be exact.
    """
    if isinstance(text, str):
        try:
            raw = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise GraphParseError("non-ASCII byte in graph6 input", e.start) from None
    else:
        raw = bytes(text)
    if raw.startswith(b">>graph6<<"):
        raw = raw[len(b">>graph6<<") :]
    raw = raw.strip()
    if not raw:
        raise GraphParseError("empty graph6 string", 0)
    for off, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"byte {byte} outside the graph6 range 63..126", off)

    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise GraphParseError("8-byte graph6 order form (n > 258047) is not supported", 0)
        if len(raw) < 4:
            raise GraphParseError("truncated graph6 order field", len(raw))
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        pos = 4
    else:
        n = raw[0] - 63
        pos = 1
    if n == 0:
        raise GraphParseError("order-0 graph6 string; graphs need at least one vertex", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = raw[pos:]
    if len(payload) < nbytes:
        raise GraphParseError(
            f"truncated graph6 payload: need {nbytes} bytes for n={n}, got {len(payload)}",
            len(raw),
        )
    if len(payload) > nbytes:
        raise GraphParseError("trailing bytes after graph6 payload", pos + nbytes)

    vals = np.frombuffer(payload, dtype=np.uint8).astype(np.uint8) - 63
    bits = (vals[:, None] >> np.arange(5, -1, -1, dtype=np.uint8)) & 1
    bits = bits.ravel()
    if bits[nbits:].any():
        raise GraphParseError("nonzero padding bits in graph6 payload", len(raw) - 1)

    a = np.zeros((n, n), dtype=bool)
    if n > 1:
        ii, jj = triu_pair_arrays(n)
        edge_bits = bits[:nbits].astype(bool)
        a[ii, jj] = edge_bits
        a[jj, ii] = edge_bits
    return Graph(a)
