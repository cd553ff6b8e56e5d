"""Undirected simple graphs over vertices 0..n-1 with bitset adjacency rows.

Each adjacency row is a Python int used as an n-bit set (bit v of row u is
set iff {u,v} is an edge).  Dense bitset rows are the right trade-off here:
the bootstrap step is dominated by row-AND operations.

Vertices are 0-based everywhere.  Inputs that use 1-based labels (as hand
drawn figures often do) must be shifted down by one before they get here.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "edge",
    "bits",
    "vertex_mask",
    "INFINITE",
]

# Returned by Graph.diameter for disconnected graphs.
INFINITE = math.inf


def edge(u: int, v: int) -> tuple[int, int]:
    """Canonical edge (u < v).  Rejects self-loops."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex bits set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph; treat instances as immutable once built."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.adj = [0] * n if adj is None else list(adj)

    # -- constructors -------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        g = cls(n)
        full = (1 << n) - 1
        for v in range(n):
            g.adj[v] = full & ~(1 << v)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def copy(self) -> "Graph":
        return Graph(self.n, self.adj)

    # -- mutation (single-owner, during construction only) ------------

    def add_edge(self, u: int, v: int) -> None:
        """Set both adjacency bits; idempotent; normalises order."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    # -- queries -------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges, canonical and sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        """All vertex pairs that are not edges, canonical and sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u]
            for v in range(u + 1, self.n):
                if not (row >> v & 1):
                    out.append((u, v))
        return out

    def common_neighbors(self, u: int, v: int) -> int:
        """Bitmask of vertices adjacent to both u and v (u, v excluded)."""
        if u == v:
            raise ValueError("common_neighbors needs two distinct vertices")
        return self.adj[u] & self.adj[v] & ~(1 << u) & ~(1 << v)

    def contains_clique(self, subset: int, k: int) -> bool:
        """True iff some k vertices inside `subset` induce a complete graph.

        Greedy min-degree ordering is applied at the top level when the
        candidate set is large; it only affects pruning, never the answer.
        """
        if k <= 0:
            return True
        if k == 1:
            return subset != 0
        if subset.bit_count() < k:
            return False
        if subset.bit_count() > 24 and k >= 3:
            return self._clique_ordered(subset, k)
        return _clique_search(self.adj, subset, k)

    def _clique_ordered(self, subset: int, k: int) -> bool:
        adj = self.adj
        order = []
        rem = subset
        while rem:
            best, best_deg = -1, 1 << 62
            m = rem
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                d = (adj[v] & rem).bit_count()
                if d < best_deg:
                    best, best_deg = v, d
            order.append(best)
            rem &= ~(1 << best)
        # vertex order[i] may only be combined with vertices later in the order
        later = 0
        suffix = [0] * len(order)
        for i in range(len(order) - 1, -1, -1):
            suffix[i] = later
            later |= 1 << order[i]
        for i, v in enumerate(order):
            if _clique_search(adj, adj[v] & suffix[i], k - 1):
                return True
        return False

    def incident_edge_count(self, subset: int) -> int:
        """Number of edges with at least one endpoint in `subset`."""
        total = 0
        inner = 0
        m = subset
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            row = self.adj[v]
            total += row.bit_count()
            inner += (row & subset).bit_count()
        return total - inner // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            raise ValueError("connectivity undefined for the empty vertex set")
        return self._eccentricity(0) is not None

    def diameter(self) -> int | float:
        """Max eccentricity over all vertices, or INFINITE if disconnected."""
        if self.n == 0:
            raise ValueError("diameter undefined for the empty vertex set")
        worst = 0
        for v in range(self.n):
            ecc = self._eccentricity(v)
            if ecc is None:
                return INFINITE
            worst = max(worst, ecc)
        return worst

    def _eccentricity(self, src: int) -> int | None:
        full = (1 << self.n) - 1
        seen = 1 << src
        frontier = seen
        dist = 0
        while seen != full:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= self.adj[v]
            nxt &= ~seen
            if not nxt:
                return None
            seen |= nxt
            frontier = nxt
            dist += 1
        return dist

    # -- comparison / debug --------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def check_invariants(self) -> None:
        """Assert symmetry and absence of self-loops (debug aid)."""
        for u in range(self.n):
            assert not (self.adj[u] >> u & 1), f"self-loop at {u}"
            assert self.adj[u] >> self.n == 0, f"row {u} has out-of-range bits"
            m = self.adj[u]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                assert self.adj[v] >> u & 1, f"asymmetric edge ({u},{v})"

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        n = data["n"]
        if not isinstance(n, int) or n < 0:
            raise ValueError("field 'n' must be a nonnegative integer")
        return cls.from_edges(n, ((int(u), int(v)) for u, v in data["edges"]))

    def to_json(self) -> str:
        return dumps_canonical(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_json_dict(json.loads(text))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f"  {v};")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _clique_search(adj: list[int], cand: int, k: int) -> bool:
    """Recursive pivotless clique search; candidates restricted by bitmask."""
    if k == 1:
        return cand != 0
    if k == 2:
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if adj[v] & cand:
                return True
        return False
    while cand:
        if cand.bit_count() < k:
            return False
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if _clique_search(adj, adj[v] & cand, k - 1):
            return True
    return False


def dumps_canonical(data) -> str:
    """Stable JSON rendering used for every file this package writes.

    Top-level keys sorted one per line, values compact; re-serialising a
    parsed document reproduces it byte for byte.
    """
    if not isinstance(data, dict):
        return json.dumps(data, sort_keys=True) + "\n"
    lines = [
        f"  {json.dumps(key)}: {json.dumps(data[key], sort_keys=True)}"
        for key in sorted(data)
    ]
    return "{\n" + ",\n".join(lines) + "\n}\n"
