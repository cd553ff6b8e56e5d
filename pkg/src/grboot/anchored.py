"""Recursive anchored gadgets that delay one edge by exactly t rounds.

The level-1 gadget is K_r minus its anchor pair.  To go one level deeper,
every edge {x,y} is replaced by a fresh copy of K_r-minus-{x,y} built on
r-2 brand-new vertices: the replaced edge disappears and reappears only
after the block underneath it fills in.  Started from the level-t gadget,
the bootstrap process completes the anchor pair at round t and no sooner.

All derived quantities (edge/vertex totals, density slope, threshold
exponent) are exact rationals; floating point enters only when a caller
evaluates the threshold at a concrete n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .graph import Graph, dumps_canonical, edge, vertex_mask

__all__ = [
    "AnchoredGraph",
    "SizeCapError",
    "gadget_edges",
    "density_slope",
    "ratio_correction",
    "anchored_edges",
    "anchored_vertices",
    "build_anchored",
    "threshold_exponent",
    "threshold",
    "DEFAULT_VERTEX_CAP",
]

DEFAULT_VERTEX_CAP = 1 << 22


class SizeCapError(ValueError):
    """Requested construction or enumeration exceeds the configured cap."""


def _check_params(r: int, t: int) -> None:
    if r < 4:
        raise ValueError(
            f"anchored gadgets need r >= 4, got {r} (K_3 has its own fast path)"
        )
    if t < 1:
        raise ValueError(f"level t must be >= 1, got {t}")


def gadget_edges(r: int) -> int:
    """Edges of one K_r-minus-an-edge block: C(r,2) - 1.

    Also the factor by which the total edge count multiplies per level.
    """
    if r < 4:
        raise ValueError(f"need r >= 4, got {r}")
    return comb(r, 2) - 1


def density_slope(r: int) -> Fraction:
    """Slope of the minimal edge bound: edges >= slope * (vertices-2) + 1."""
    if r < 4:
        raise ValueError(f"need r >= 4, got {r}")
    return Fraction(comb(r, 2) - 2, r - 2)


def ratio_correction(r: int, t: int) -> Fraction:
    """Correction c with edges/(vertices-2) = slope * (1 + c) at level t."""
    _check_params(r, t)
    return Fraction(1, gadget_edges(r) ** t - 1)


def anchored_edges(r: int, t: int) -> int:
    """Edge count of the level-t gadget: gadget_edges(r) ** t."""
    _check_params(r, t)
    return gadget_edges(r) ** t


def anchored_vertices(r: int, t: int) -> int:
    """Vertex count of the level-t gadget: 2 + (r-2)(tau^t - 1)/(tau - 1)."""
    _check_params(r, t)
    tau = gadget_edges(r)
    return 2 + (r - 2) * (tau**t - 1) // (tau - 1)


def threshold_exponent(r: int, t: int) -> Fraction:
    """Exact exponent a with critical p scaling like n^-a for level t."""
    _check_params(r, t)
    return Fraction(anchored_vertices(r, t) - 2, anchored_edges(r, t))


def threshold(r: int, t: int) -> Callable[[float], float]:
    """n -> n ** -exponent; the polynomial part of the critical probability."""
    a = float(threshold_exponent(r, t))
    return lambda n: float(n) ** -a


@dataclass
class AnchoredGraph:
    """A gadget graph plus its anchor pair and construction bookkeeping.

    generation[v] is 0 for the anchor endpoints and the level-1 core, and g
    for vertices first created at level g >= 2.  blocks maps each edge of
    the previous level to the bitmask of the r-2 fresh vertices planted on
    it (empty at level 1); only the final level's blocks survive in the
    edge set, so only those are recorded.
    """

    graph: Graph
    anchor: tuple[int, int]
    generation: list[int]
    blocks: dict[tuple[int, int], int] = field(repr=False)
    r: int = 0
    t: int = 0

    def to_json_dict(self) -> dict:
        d = self.graph.to_json_dict()
        d["anchor"] = list(self.anchor)
        d["generation"] = list(self.generation)
        return d

    def to_json(self) -> str:
        return dumps_canonical(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "AnchoredGraph":
        g = Graph.from_json_dict(data)
        anchor = edge(int(data["anchor"][0]), int(data["anchor"][1]))
        generation = [int(x) for x in data["generation"]]
        t = max(generation) if max(generation, default=0) >= 2 else 1
        # final-level blocks are recoverable: each newest vertex is adjacent
        # to exactly its block mates plus the two parent endpoints
        blocks: dict[tuple[int, int], int] = {}
        r = g.n
        if t >= 2:
            newest = [v for v in range(g.n) if generation[v] == t]
            for v in newest:
                parents = [
                    w for w in range(g.n) if generation[w] < t and g.has_edge(v, w)
                ]
                key = edge(parents[0], parents[1])
                blocks[key] = blocks.get(key, 0) | (1 << v)
            any_block = next(iter(blocks.values()))
            r = any_block.bit_count() + 2
        return cls(
            graph=g, anchor=anchor, generation=generation, blocks=blocks, r=r, t=t
        )

    @classmethod
    def from_json(cls, text: str) -> "AnchoredGraph":
        return cls.from_json_dict(json.loads(text))


def build_anchored(
    r: int, t: int, max_vertices: int = DEFAULT_VERTEX_CAP
) -> AnchoredGraph:
    """Build the level-t gadget with anchor (0, 1).

    Vertex numbering is deterministic: anchor endpoints, then the level-1
    core, then blocks appended in lexicographic order of their parent edge,
    level by level.  Refuses to build past `max_vertices` (the size grows
    geometrically; fail loudly rather than truncate).
    """
    _check_params(r, t)
    v_final = anchored_vertices(r, t)
    if v_final > max_vertices:
        raise SizeCapError(
            f"level-{t} gadget for r={r} has {v_final} vertices, "
            f"over the cap of {max_vertices}"
        )

    g = Graph.complete(r)
    g.adj[0] &= ~2  # drop the anchor edge (0,1)
    g.adj[1] &= ~1
    generation = [0] * r
    blocks: dict[tuple[int, int], int] = {}

    for level in range(2, t + 1):
        parents = g.edges()
        n_next = g.n + (r - 2) * len(parents)
        nxt = Graph.empty(n_next)
        generation.extend([level] * (n_next - g.n))
        blocks = {}
        fresh = g.n
        for x, y in parents:
            block = list(range(fresh, fresh + r - 2))
            fresh += r - 2
            for i, a in enumerate(block):
                nxt.add_edge(a, x)
                nxt.add_edge(a, y)
                for b in block[i + 1 :]:
                    nxt.add_edge(a, b)
            blocks[(x, y)] = vertex_mask(block)
        g = nxt

    return AnchoredGraph(
        graph=g, anchor=(0, 1), generation=generation, blocks=blocks, r=r, t=t
    )
