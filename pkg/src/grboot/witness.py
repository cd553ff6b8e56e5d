"""Witness sets: a certifying subgraph of the start graph for each edge.

Edges of the closure are replayed one at a time.  An initial edge is its
own witness.  An inferred edge picks one clique that completes it at that
moment and inherits the union of the witnesses of the clique's other
edges.  Every witness therefore consists of initial edges only, and the
subgraph they span re-adds the witnessed edge on its own.

Witnesses obey the density bound  |E| >= slope*(|V|-2) + 1  with slope
from anchored.density_slope; the randomized sweep in the test suite treats
any violation as a bug.

The replay is sequential by definition even though the engine is
synchronous; rounds only seed the processing order.  Two order policies
are surfaced: LEX (canonical within each round, lexicographically smallest
completing clique) gives reproducible witnesses, SEEDED_RANDOM explores
the choice freedom.  The closure itself never depends on the policy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .anchored import density_slope
from .engine import edge_addition_time, run
from .graph import Graph, bits, edge
from .rng import SplitMix64, stream_for

__all__ = [
    "OrderPolicy",
    "WitnessSet",
    "run_with_witnesses",
    "check_witness_bound",
    "witness_sufficient",
    "shrink_witness",
]


class OrderPolicy(Enum):
    LEX = "lex"
    SEEDED_RANDOM = "seeded-random"


@dataclass(frozen=True)
class WitnessSet:
    edge: tuple[int, int]
    edges: frozenset[tuple[int, int]]  # all from the start graph
    vertices: int  # bitmask: member-edge endpoints plus the edge's own

    def to_json_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "edges": [list(e) for e in sorted(self.edges)],
            "vertices": sorted(bits(self.vertices)),
        }


def run_with_witnesses(
    g: Graph,
    r: int,
    policy: OrderPolicy = OrderPolicy.LEX,
    seed: int = 0,
) -> dict[tuple[int, int], WitnessSet]:
    """Assign a witness to every edge of the closure of g."""
    trace = run(g, r)
    rng = stream_for(seed, 0) if policy is OrderPolicy.SEEDED_RANDOM else None

    witnesses: dict[tuple[int, int], WitnessSet] = {}
    for u, v in g.edges():
        e = (u, v)
        witnesses[e] = WitnessSet(e, frozenset([e]), (1 << u) | (1 << v))

    h = g.copy()
    for rnd in trace.rounds:
        order = sorted(rnd)
        if rng is not None:
            _shuffle(order, rng)
        for u, v in order:
            clique = _completing_clique(h, u, v, r, rng)
            assert clique is not None, f"no completing clique for ({u},{v})"
            member_edges = set()
            verts = (1 << u) | (1 << v)
            group = (u, v) + clique
            for i, a in enumerate(group):
                for b in group[i + 1 :]:
                    if (a, b) != (u, v) and (b, a) != (u, v):
                        w = witnesses[edge(a, b)]
                        member_edges.update(w.edges)
                        verts |= w.vertices
            witnesses[(u, v)] = WitnessSet((u, v), frozenset(member_edges), verts)
            h.add_edge(u, v)
    return witnesses


def _shuffle(items: list, rng: SplitMix64) -> None:
    for i in range(len(items) - 1, 0, -1):
        j = rng.below(i + 1)
        items[i], items[j] = items[j], items[i]


def _completing_clique(
    h: Graph, u: int, v: int, r: int, rng: SplitMix64 | None
) -> tuple[int, ...] | None:
    """r-2 common neighbours of u,v inducing a clique in h, or None.

    With rng None, the lexicographically smallest such tuple (which also
    makes {u,v} plus the tuple the lexicographically smallest completing
    r-set); otherwise a uniform choice among all of them.
    """
    cand = h.common_neighbors(u, v)
    if rng is None:
        return _lex_clique(h.adj, cand, r - 2)
    found: list[tuple[int, ...]] = []
    _all_cliques(h.adj, cand, r - 2, (), found)
    if not found:
        return None
    return found[rng.below(len(found))]


def _lex_clique(adj: list[int], cand: int, k: int) -> tuple[int, ...] | None:
    if k == 0:
        return ()
    m = cand
    while m:
        x = (m & -m).bit_length() - 1
        m &= m - 1
        rest = _lex_clique(adj, adj[x] & cand & ~((1 << (x + 1)) - 1), k - 1)
        if rest is not None:
            return (x,) + rest
    return None


def _all_cliques(adj, cand: int, k: int, prefix: tuple, out: list) -> None:
    if k == 0:
        out.append(prefix)
        return
    m = cand
    while m:
        x = (m & -m).bit_length() - 1
        m &= m - 1
        _all_cliques(
            adj, adj[x] & cand & ~((1 << (x + 1)) - 1), k - 1, prefix + (x,), out
        )


def check_witness_bound(w: WitnessSet, r: int) -> bool:
    """Exact check of |E| >= slope*(|V|-2) + 1."""
    nv = w.vertices.bit_count()
    return Fraction(len(w.edges)) >= density_slope(r) * (nv - 2) + 1


def witness_sufficient(w: WitnessSet, r: int) -> bool:
    """Does the witness subgraph alone add its edge under the process?"""
    if w.edge in w.edges:
        return True
    verts = sorted(bits(w.vertices))
    index = {v: i for i, v in enumerate(verts)}
    if len(verts) < r:
        return False  # no clique of size r fits, so the edge can never appear
    sub = Graph.from_edges(
        len(verts), ((index[a], index[b]) for a, b in w.edges)
    )
    target = edge(index[w.edge[0]], index[w.edge[1]])
    return edge_addition_time(sub, r, target) is not None


def shrink_witness(w: WitnessSet, r: int) -> WitnessSet:
    """Greedy delete-one-edge minimisation preserving sufficiency.

    Witness minimality is not required by the density bound; this pass is
    an opt-in for small instances (closure re-runs per candidate edge).
    """
    edges = set(w.edges)
    changed = True
    while changed:
        changed = False
        for e in sorted(edges):
            if e == w.edge:
                continue
            trial = _as_witness(w.edge, edges - {e})
            if witness_sufficient(trial, r):
                edges.discard(e)
                changed = True
                break
    return _as_witness(w.edge, edges)


def _as_witness(target: tuple[int, int], edges: set) -> WitnessSet:
    verts = (1 << target[0]) | (1 << target[1])
    for a, b in edges:
        verts |= (1 << a) | (1 << b)
    return WitnessSet(target, frozenset(edges), verts)
