"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's optimised code paths:
clique checks go through itertools.combinations, closures through a plain
re-scan fixed point, distances through Floyd-Warshall.
"""

from itertools import combinations
from pathlib import Path

from grboot import Graph, stream_for

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# the 6-vertex walkthrough graph (hand-labelled 1..6 in the source figure,
# shifted down by one here as everywhere in this package)
FIG1_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 5), (2, 4), (3, 4), (4, 5)]
FIG1_ROUNDS = [
    [(2, 3)],
    [(0, 4), (1, 4)],
    [(0, 5), (2, 5), (3, 5)],
]


def fig1() -> Graph:
    return Graph.from_edges(6, FIG1_EDGES)


def naive_has_clique(g: Graph, members: list[int], k: int) -> bool:
    if k <= 0:
        return True
    for combo in combinations(members, k):
        if all(g.has_edge(a, b) for a, b in combinations(combo, 2)):
            return True
    return False


def naive_step(g: Graph, r: int) -> list[tuple[int, int]]:
    added = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = [
                w
                for w in range(g.n)
                if w != u and w != v and g.has_edge(u, w) and g.has_edge(v, w)
            ]
            if naive_has_clique(g, common, r - 2):
                added.append((u, v))
    return added


def naive_closure(g: Graph, r: int):
    """(final graph, list of rounds) by repeated full re-scan."""
    cur = g.copy()
    rounds = []
    while True:
        added = naive_step(cur, r)
        if not added:
            return cur, rounds
        rounds.append(added)
        for u, v in added:
            cur.add_edge(u, v)


def floyd_warshall_diameter(g: Graph):
    inf = float("inf")
    n = g.n
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return max(dist[i][j] for i in range(n) for j in range(n))


def random_graph(n: int, p: float, seed: int, index: int = 0) -> Graph:
    stream = stream_for(seed, index)
    g = Graph.empty(n)
    for u in range(n):
        for v in range(u + 1, n):
            if stream.next_float() < p:
                g.add_edge(u, v)
    return g


def random_connected_graph(seed: int, index: int, max_n: int = 40) -> Graph:
    """Connected graph with a spread of diameters: random tree plus extras.

    Even indices attach each new vertex near the previous one (long, path
    like trees, large diameter); odd indices attach uniformly (shallow
    trees); a few extra random edges vary the structure further.
    """
    stream = stream_for(seed, index)
    n = 3 + stream.below(max_n - 2)
    g = Graph.empty(n)
    for v in range(1, n):
        if index % 2 == 0 and v > 1:
            lo = max(0, v - 1 - stream.below(2))
            g.add_edge(v, lo)
        else:
            g.add_edge(v, stream.below(v))
    extras = stream.below(3)
    for _ in range(extras):
        u = stream.below(n)
        v = stream.below(n)
        if u != v:
            g.add_edge(u, v)
    return g
