"""Exhaustive minimum incident-edge density over subsets of a gadget.

For a level-t gadget F with anchor pair removed from consideration, we
minimise  incident_edges(L) / |L|  over all nonempty proper subsets L of
the non-anchor vertices.  The relative excess of that minimum over the
whole-graph ratio edges/(vertices-2) is the quantity sandwiched by the
closed-form bounds below; it controls how unlikely two overlapping gadget
copies are in a sparse random graph.

Enumeration walks subsets in Gray-code order so each step toggles one
vertex and updates the incident count in O(degree).  A branch-and-bound
search over the same space is provided as an independent path; both must
agree exactly (tests enforce it).  All ratios are exact rationals compared
by cross-multiplication.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .anchored import (
    AnchoredGraph,
    SizeCapError,
    build_anchored,
    gadget_edges,
)
from .graph import Graph, bits

__all__ = [
    "DensityReport",
    "min_density",
    "min_density_branch_bound",
    "min_ratio_over",
    "epsilon_lower",
    "epsilon_upper",
    "witness_set_minratio",
    "cascade_overlap_report",
    "DEFAULT_CAP_BITS",
]

DEFAULT_CAP_BITS = 30


@dataclass
class DensityReport:
    r: int
    t: int
    min_ratio: Fraction
    argmin: int  # vertex bitmask; lexicographically smallest minimiser
    epsilon: Fraction
    subsets_examined: int
    lower_bound: Fraction
    upper_bound: Fraction

    def to_json_dict(self) -> dict:
        def frac(x: Fraction) -> str:
            return f"{x.numerator}/{x.denominator}"

        return {
            "r": self.r,
            "t": self.t,
            "min_ratio": frac(self.min_ratio),
            "min_ratio_float": float(self.min_ratio),
            "argmin": sorted(bits(self.argmin)),
            "epsilon": frac(self.epsilon),
            "epsilon_float": float(self.epsilon),
            "subsets_examined": self.subsets_examined,
            "lower_bound": frac(self.lower_bound),
            "upper_bound": frac(self.upper_bound),
        }


def epsilon_lower(r: int, t: int) -> Fraction:
    """Closed-form lower bound: (1/(r+1)) * (2/(r^2-2))^(t-1)."""
    return Fraction(1, r + 1) * Fraction(2, r * r - 2) ** (t - 1)


def epsilon_upper(r: int, t: int) -> Fraction:
    """Closed-form upper bound 1/(r+1); attained exactly at t = 1."""
    return Fraction(1, r + 1)


def min_density(
    f: AnchoredGraph,
    cap_bits: int = DEFAULT_CAP_BITS,
    threads: int = 1,
) -> DensityReport:
    """Exact minimum over all nonempty proper non-anchor subsets.

    Plain Gray-code enumeration; the subset space can be statically split
    on high-order bits across worker processes, each returning a local
    minimum merged deterministically.
    """
    verts = _non_anchor_vertices(f)
    if len(verts) > cap_bits:
        raise SizeCapError(
            f"{len(verts)} free vertices exceed the {cap_bits}-bit "
            "enumeration cap"
        )
    if threads > 1 and len(verts) >= 16:
        best_num, best_den, best_mask, examined = _min_ratio_parallel(
            f.graph, verts, threads
        )
    else:
        best_num, best_den, best_mask, examined = _min_ratio_gray(
            f.graph.adj, verts, include_full=False
        )
    return _report(f, Fraction(best_num, best_den), best_mask, examined)


def min_density_branch_bound(f: AnchoredGraph) -> DensityReport:
    """Same minimum via depth-first search with admissible pruning."""
    verts = _non_anchor_vertices(f)
    num, den, mask, examined = _min_ratio_bnb(f.graph, verts)
    return _report(f, Fraction(num, den), mask, examined)


def min_ratio_over(
    g: Graph, vertices: list[int], include_full: bool = True
) -> tuple[Fraction, int]:
    """Minimum incident-density ratio over subsets of an arbitrary set.

    Used for restricted enumerations, e.g. subsets drawn only from the
    newest generation.  include_full controls whether the whole given set
    counts as a candidate.
    """
    num, den, mask, _ = _min_ratio_gray(g.adj, vertices, include_full)
    return Fraction(num, den), mask


def _non_anchor_vertices(f: AnchoredGraph) -> list[int]:
    a, b = f.anchor
    return [v for v in range(f.graph.n) if v != a and v != b]


def _report(
    f: AnchoredGraph, ratio: Fraction, mask: int, examined: int
) -> DensityReport:
    n, m = f.graph.n, f.graph.edge_count
    eps = ratio * Fraction(n - 2, m) - 1
    return DensityReport(
        r=f.r,
        t=f.t,
        min_ratio=ratio,
        argmin=mask,
        epsilon=eps,
        subsets_examined=examined,
        lower_bound=epsilon_lower(f.r, f.t),
        upper_bound=epsilon_upper(f.r, f.t),
    )


def _min_ratio_gray(
    adj: list[int],
    verts: list[int],
    include_full: bool,
    prefix_positions: tuple[int, ...] = (),
    prefix_value: int = 0,
) -> tuple[int, int, int, int]:
    """Gray-code walk over subsets of `verts`; returns (num, den, mask, count).

    Positions in `prefix_positions` are pinned to the bits of
    `prefix_value`; the walk covers the remaining positions.  The full set
    (all of `verts`) is skipped unless include_full.
    """
    m = len(verts)
    free = [i for i in range(m) if i not in prefix_positions]
    degs = [adj[v].bit_count() for v in verts]

    cur_mask = 0
    cur_count = 0
    for i, pos in enumerate(prefix_positions):
        if prefix_value >> i & 1:
            v = verts[pos]
            cur_count += degs[pos] - (adj[v] & cur_mask).bit_count()
            cur_mask |= 1 << v

    full_mask = 0
    for v in verts:
        full_mask |= 1 << v

    best_num, best_den, best_mask = -1, 0, 0
    examined = 0

    def consider(count: int, mask: int, size: int):
        nonlocal best_num, best_den, best_mask, examined
        examined += 1
        if best_num < 0 or count * best_den < best_num * size or (
            count * best_den == best_num * size and mask < best_mask
        ):
            best_num, best_den, best_mask = count, size, mask

    size = cur_mask.bit_count()
    if size and (include_full or cur_mask != full_mask):
        consider(cur_count, cur_mask, size)

    gray_prev = 0
    for k in range(1, 1 << len(free)):
        gray = k ^ (k >> 1)
        pos = free[((gray ^ gray_prev).bit_length()) - 1]
        gray_prev = gray
        v = verts[pos]
        bit = 1 << v
        if cur_mask & bit:
            cur_mask ^= bit
            cur_count -= degs[pos] - (adj[v] & cur_mask).bit_count()
            size -= 1
        else:
            cur_count += degs[pos] - (adj[v] & cur_mask).bit_count()
            cur_mask |= bit
            size += 1
        if __debug__ and k % 4096 == 0:
            assert cur_count == _incident_recount(adj, cur_mask)
        if size == 0:
            continue
        if not include_full and cur_mask == full_mask:
            continue
        consider(cur_count, cur_mask, size)

    if best_num < 0:
        raise ValueError("no eligible subset (need at least one free vertex)")
    return best_num, best_den, best_mask, examined


def _incident_recount(adj: list[int], mask: int) -> int:
    total = inner = 0
    for v in bits(mask):
        total += adj[v].bit_count()
        inner += (adj[v] & mask).bit_count()
    return total - inner // 2


def _gray_worker(args):
    adj, verts, prefix_positions, prefix_value = args
    return _min_ratio_gray(
        adj, verts, include_full=False,
        prefix_positions=prefix_positions, prefix_value=prefix_value,
    )


def _min_ratio_parallel(g: Graph, verts: list[int], threads: int):
    m = len(verts)
    split = 1
    while (1 << split) < 2 * threads and split < m - 8:
        split += 1
    prefix_positions = tuple(range(m - split, m))
    tasks = [
        (g.adj, verts, prefix_positions, value) for value in range(1 << split)
    ]
    results = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for res in pool.map(_gray_worker, tasks):
            results.append(res)
    best = None
    examined = 0
    for num, den, mask, count in results:
        examined += count
        if (
            best is None
            or num * best[1] < best[0] * den
            or (num * best[1] == best[0] * den and mask < best[2])
        ):
            best = (num, den, mask)
    return best[0], best[1], best[2], examined


def _min_ratio_bnb(g: Graph, verts: list[int]) -> tuple[int, int, int, int]:
    """DFS over include/exclude decisions with an admissible lower bound.

    Incident count is monotone in the subset, so within a subtree rooted at
    partial choice (included I, free F) every ratio is at least
    count(I) / (|I| + |F|).  Pruning is strict (>) so ties survive and the
    argmin matches plain enumeration bit for bit.
    """
    adj = g.adj
    m = len(verts)
    full_mask = 0
    for v in verts:
        full_mask |= 1 << v
    degs = [adj[v].bit_count() for v in verts]

    best = [-1, 0, 0]  # num, den, mask
    examined = 0

    def consider(count, mask, size):
        nonlocal examined
        examined += 1
        if best[0] < 0 or count * best[1] < best[0] * size or (
            count * best[1] == best[0] * size and mask < best[2]
        ):
            best[0], best[1], best[2] = count, size, mask

    def dfs(idx: int, mask: int, count: int, size: int):
        if idx == m:
            if size and mask != full_mask:
                consider(count, mask, size)
            return
        if best[0] >= 0 and size:
            free = m - idx
            # count only grows; size can reach at most size + free
            if count * best[1] > best[0] * (size + free):
                return
        v = verts[idx]
        gain = degs[idx] - (adj[v] & mask).bit_count()
        dfs(idx + 1, mask | (1 << v), count + gain, size + 1)
        dfs(idx + 1, mask, count, size)

    dfs(0, 0, 0, 0)
    if best[0] < 0:
        raise ValueError("no eligible subset")
    return best[0], best[1], best[2], examined


def witness_set_minratio(
    r: int, t: int, f: AnchoredGraph | None = None
) -> tuple[int, Fraction]:
    """The explicit sparse set showing the minimum ratio is below (r+1)/2.

    Take a vertex v that first appeared at level t-1 and bundle it with all
    its level-t neighbours.  The set has 1 + (r-1)(r-2) vertices, all its
    incident edges live in the r-1 blocks planted on v's former edges, and
    the ratio lands strictly under (r+1)/2.  Returns (vertex bitmask,
    exact ratio).
    """
    if t < 2:
        raise ValueError("needs t >= 2 (one level of replacement)")
    if f is None:
        f = build_anchored(r, t)
    if t == 2:
        v = 2  # first core vertex outside the anchor; degree r-1 at level 1
    else:
        v = f.generation.index(t - 1)
    g = f.graph
    mask = 1 << v
    for u in bits(g.adj[v]):
        if f.generation[u] == t:
            mask |= 1 << u
    ratio = Fraction(g.incident_edge_count(mask), mask.bit_count())
    return mask, ratio


def cascade_overlap_report(f: AnchoredGraph) -> dict:
    """Iterated near-full overlap set: stated formulas vs direct count.

    Start from all but one core non-anchor vertex and, level by level, add
    every newest vertex adjacent to the running set.  The construction is
    reported twice: once via the stated closed forms
    (1 + 2(r-2)(tau^(t-1)-1)/(tau-1) vertices, tau^(t-1)(tau-2) incident
    edges) and once by building the set and counting.  The two vertex
    counts differ already at r=4, t=2 (7 built vs 5 by formula), so no
    equality is asserted; callers get both.
    """
    r, t = f.r, f.t
    g = f.graph
    tau = gadget_edges(r)

    mask = 0
    for v in range(2, r - 1):  # leave the last core vertex out
        mask |= 1 << v
    for level in range(2, t + 1):
        grown = mask
        for v in range(g.n):
            if f.generation[v] == level and g.adj[v] & mask:
                grown |= 1 << v
        mask = grown

    formula_vertices = 1 + 2 * (r - 2) * (tau ** (t - 1) - 1) // (tau - 1)
    formula_incident = tau ** (t - 1) * (tau - 2)
    return {
        "formula_vertices": formula_vertices,
        "formula_incident_edges": formula_incident,
        "built_vertices": mask.bit_count(),
        "built_incident_edges": g.incident_edge_count(mask),
        "built_set": mask,
    }
