"""Synchronous clique bootstrap percolation.

A non-edge {u,v} is added whenever the current graph contains r-2 common
neighbours of u and v that induce a complete subgraph, i.e. adding {u,v}
would complete a copy of K_r.  All additions within a round are computed
against the unmodified graph (synchronous semantics); the percolation time
depends on this even though the final closure does not.

For K_3 (r = 3) the process has a closed form: a connected graph of
diameter d fills in after exactly ceil(log2 d) rounds, because one round
halves the diameter (rounding up).  ``percolation_time_k3`` implements
that fast path; the generic engine accepts r = 3 too and serves as its
oracle in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, edge

__all__ = [
    "BootstrapTrace",
    "step",
    "run",
    "edge_addition_time",
    "percolation_time_k3",
    "validate_trace",
]


@dataclass
class BootstrapTrace:
    """Full record of one synchronous run.

    rounds[i] holds the edges added at time i+1 (canonical, sorted);
    addition_time maps every edge of the final graph to the round it
    appeared (0 for initial edges); T is the first time the graph is
    complete, or None if the fixed point falls short of K_n.
    """

    n: int
    r: int
    rounds: list[list[tuple[int, int]]]
    addition_time: dict[tuple[int, int], int]
    T: int | None
    cap_reached: bool
    final: Graph = field(repr=False)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "T": self.T,
            "rounds": [[list(e) for e in rnd] for rnd in self.rounds],
            "addition_times": {
                f"{u},{v}": t for (u, v), t in self.addition_time.items()
            },
            "cap_reached": self.cap_reached,
        }


def _validate(g: Graph, r: int) -> None:
    if r < 3:
        raise ValueError(f"clique parameter r must be >= 3, got {r}")
    if g.n < r:
        raise ValueError(f"graph has {g.n} < r = {r} vertices; no K_{r} fits")


def step(g: Graph, r: int) -> list[tuple[int, int]]:
    """Edges added by one synchronous round, canonical and sorted."""
    _validate(g, r)
    return _scan(g, r, g.non_edges())


def _scan(g: Graph, r: int, candidates) -> list[tuple[int, int]]:
    adj = g.adj
    need = r - 2
    added = []
    for u, v in candidates:
        cm = adj[u] & adj[v]
        if g.contains_clique(cm, need):
            added.append((u, v))
    added.sort()
    return added


def _dirty_pairs(g: Graph, r: int, new_edges, limit: int) -> set | None:
    """Pairs whose addability may have changed after `new_edges` went in.

    A pair needs rechecking iff a new copy of K_r through it could use a
    just-added edge: either the pair's common neighbourhood grew, or an
    edge appeared inside it.  Returns None when the set would exceed
    `limit` (the full rescan is cheaper then).
    """
    adj = g.adj
    dirty: set[tuple[int, int]] = set()
    for x, y in new_edges:
        row_y = adj[y] & ~(1 << x)
        m = row_y
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            dirty.add((x, w) if x < w else (w, x))
        row_x = adj[x] & ~(1 << y)
        m = row_x
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            dirty.add((y, w) if y < w else (w, y))
        if r > 3:
            # the new edge sits inside the common neighbourhood of these pairs
            cm = adj[x] & adj[y] & ~(1 << x) & ~(1 << y)
            members = []
            mm = cm
            while mm:
                w = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                members.append(w)
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    dirty.add((a, b))
        if len(dirty) > limit:
            return None
    return dirty


def run(start: Graph, r: int, max_rounds: int | None = None) -> BootstrapTrace:
    """Iterate rounds until a fixed point, completion, or the round cap.

    The trace records one trailing empty round when the process stops at a
    fixed point (including a complete starting graph); a run that completes
    by adding edges stops right after the completing round.  Hitting the
    cap is reported via ``cap_reached``, never as an error.
    """
    return _run(start, r, max_rounds, stop_edge=None)


def edge_addition_time(
    g: Graph, r: int, e: tuple[int, int], max_rounds: int | None = None
) -> int | None:
    """Round at which edge e appears, 0 if initial, None if never."""
    u, v = edge(e[0], e[1])
    if g.has_edge(u, v):
        return 0
    trace = _run(g, r, max_rounds, stop_edge=(u, v))
    return trace.addition_time.get((u, v))


def _run(
    start: Graph,
    r: int,
    max_rounds: int | None,
    stop_edge: tuple[int, int] | None,
) -> BootstrapTrace:
    _validate(start, r)
    g = start.copy()
    rounds: list[list[tuple[int, int]]] = []
    addition = {e: 0 for e in g.edges()}
    nonedges = set(g.non_edges())
    candidates: set | None = None  # None means scan everything
    T: int | None = None
    cap_reached = False
    t = 0

    while True:
        if not nonedges:
            T = t
            if t == 0 and not rounds:
                rounds.append([])  # probe round: complete input, fixed point
            break
        if max_rounds is not None and t >= max_rounds:
            cap_reached = True
            break
        if candidates is None:
            scan = sorted(nonedges)
        else:
            scan = sorted(candidates & nonedges)
        added = _scan(g, r, scan)
        rounds.append(added)
        if not added:
            break  # fixed point, incomplete
        for u, v in added:
            g.add_edge(u, v)
            addition[(u, v)] = t + 1
            nonedges.discard((u, v))
        t += 1
        if stop_edge is not None and stop_edge in addition:
            break
        candidates = _dirty_pairs(g, r, added, limit=len(nonedges))

    return BootstrapTrace(
        n=start.n,
        r=r,
        rounds=rounds,
        addition_time=addition,
        T=T,
        cap_reached=cap_reached,
        final=g,
    )


def percolation_time_k3(g: Graph) -> int | None:
    """Closed-form K_3 percolation time: ceil(log2 diameter).

    None for disconnected graphs (they never fill in), 0 for complete
    graphs (diameter <= 1).
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    d = g.diameter()
    if d == float("inf"):
        return None
    d = int(d)
    if d <= 1:
        return 0
    return (d - 1).bit_length()


def validate_trace(start: Graph, trace: BootstrapTrace) -> None:
    """Replay a trace and check the synchronous-update contract.

    For every round, each recorded edge must be certified by a clique that
    exists entirely in the graph _before_ the round, and no addable edge
    may be missing from the round.  Raises AssertionError on violation.
    """
    g = start.copy()
    r = trace.r
    for i, recorded in enumerate(trace.rounds):
        expected = _scan(g, r, g.non_edges())
        assert recorded == expected, (
            f"round {i + 1}: recorded {recorded} != synchronous scan {expected}"
        )
        for u, v in recorded:
            g.add_edge(u, v)
    for e, t in trace.addition_time.items():
        if t > 0:
            assert e in trace.rounds[t - 1], f"edge {e} mistimed"
    if trace.T is not None and not trace.cap_reached:
        assert g.is_complete(), "T set but replayed graph is incomplete"
