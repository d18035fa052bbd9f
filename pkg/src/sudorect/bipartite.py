"""Bipartite combinatorial kernels: degree-constrained matching, Hall
certificates, and max-degree edge coloring.

Vertices are 0-based; parallel edges are allowed and matter (a matching is
a subset of edge *positions*).  Everything here is deterministic for a
fixed edge order: matchings come from a shortest-augmenting-path max flow
with adjacency in insertion order, and colorings from alternating Euler
splits with lowest-index tie-breaking.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union


class KernelError(Exception):
    """Contract violation (mismatched quotas, malformed graph, ...)."""


class ExhaustiveLimitExceeded(KernelError):
    """Left side too large for the subset-enumeration Hall check."""


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.left_count and 0 <= v < self.right_count):
                raise KernelError(f"edge ({u},{v}) out of range")

    @classmethod
    def build(cls, left_count: int, right_count: int, edges) -> "BipartiteGraph":
        return cls(left_count, right_count, tuple((u, v) for u, v in edges))

    def max_degree(self) -> int:
        left = [0] * self.left_count
        right = [0] * self.right_count
        for u, v in self.edges:
            left[u] += 1
            right[v] += 1
        return max(left + right, default=0)


@dataclass(frozen=True)
class DegreeDemand:
    """Exact matched degree required of every vertex."""

    left_quota: tuple[int, ...]
    right_quota: tuple[int, ...]

    @classmethod
    def uniform(cls, g: BipartiteGraph, left: int, right: int) -> "DegreeDemand":
        return cls((left,) * g.left_count, (right,) * g.right_count)


@dataclass(frozen=True)
class HallCertificate:
    """A set S of left vertices whose neighborhood cannot absorb its demand.

    ``capacity`` is what N(S) can take in total, which with unit right
    quotas is simply |N(S)|; the certificate asserts capacity < required.
    """

    left_set: tuple[int, ...]
    neighborhood: tuple[int, ...]
    required: int
    capacity: int


MatchingResult = Union[tuple[int, ...], HallCertificate]


class _Dinic:
    """Integer max flow (level graph + blocking flow), insertion-ordered."""

    def __init__(self, node_count: int):
        self.n = node_count
        self.head: list[list[int]] = [[] for _ in range(node_count)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for idx in self.head[u]:
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            cursor = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while cursor[u] < len(self.head[u]):
                    idx = self.head[u][cursor[u]]
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[idx]))
                        if got:
                            self.cap[idx] -= got
                            self.cap[idx ^ 1] += got
                            return got
                    cursor[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 60)
                if not pushed:
                    break
                flow += pushed

    def reachable(self, s: int) -> list[bool]:
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self.head[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def degree_matching(g: BipartiteGraph, demand: DegreeDemand) -> MatchingResult:
    """Edge subset giving every vertex exactly its quota, or a certificate.

    Infeasibility is witnessed by the left vertices reachable from the
    source in the residual network: their quota mass exceeds what their
    combined neighborhood can absorb.
    """
    if len(demand.left_quota) != g.left_count or len(demand.right_quota) != g.right_count:
        raise KernelError("quota vectors do not match vertex counts")
    if any(q < 0 for q in demand.left_quota + demand.right_quota):
        raise KernelError("negative quota")
    total = sum(demand.left_quota)
    if total != sum(demand.right_quota):
        raise KernelError(
            f"quota sums differ: left {total}, right {sum(demand.right_quota)}"
        )

    source = g.left_count + g.right_count
    sink = source + 1
    net = _Dinic(sink + 1)
    for u, q in enumerate(demand.left_quota):
        net.add_edge(source, u, q)
    edge_arc = []
    for u, v in g.edges:
        edge_arc.append(net.add_edge(u, g.left_count + v, 1))
    for v, q in enumerate(demand.right_quota):
        net.add_edge(g.left_count + v, sink, q)

    if net.max_flow(source, sink) == total:
        chosen = tuple(i for i, arc in enumerate(edge_arc) if net.cap[arc] == 0)
        return chosen

    seen = net.reachable(source)
    left_set = tuple(u for u in range(g.left_count) if seen[u])
    member = set(left_set)
    reach: dict[int, int] = {}
    for u, v in g.edges:
        if u in member:
            reach[v] = reach.get(v, 0) + 1
    neighborhood = tuple(sorted(reach))
    required = sum(demand.left_quota[u] for u in left_set)
    capacity = sum(min(demand.right_quota[v], reach[v]) for v in neighborhood)
    if capacity >= required:
        raise KernelError("min-cut certificate failed its own deficiency check")
    return HallCertificate(left_set, neighborhood, required, capacity)


def hall_check(
    g: BipartiteGraph, multiplier: int, limit: int = 20
) -> HallCertificate | None:
    """Exhaustively test |N(S)| >= multiplier·|S| for every left subset.

    Returns the first violating set in (size, lexicographic) order, or None.
    Intended for small left sides; refuses above ``limit`` vertices.
    """
    if multiplier < 1:
        raise KernelError(f"multiplier must be >= 1, got {multiplier}")
    if g.left_count > limit:
        raise ExhaustiveLimitExceeded(
            f"{g.left_count} left vertices exceed the exhaustive limit {limit}"
        )
    adj: list[set[int]] = [set() for _ in range(g.left_count)]
    for u, v in g.edges:
        adj[u].add(v)
    for size in range(1, g.left_count + 1):
        for subset in combinations(range(g.left_count), size):
            hood: set[int] = set()
            for u in subset:
                hood |= adj[u]
            if len(hood) < multiplier * size:
                return HallCertificate(
                    subset, tuple(sorted(hood)), multiplier * size, len(hood)
                )
    return None


# -- edge coloring ----------------------------------------------------------


def edge_color(g: BipartiteGraph) -> tuple[int, ...]:
    """Proper edge coloring with colors in [1, max degree].

    The graph is first padded to a Δ-regular bipartite multigraph with dummy
    vertices/edges; regular multigraphs are colored by alternating Euler
    splits (even degree) and one perfect-matching peel (odd degree), which
    meets the max-degree bound constructively.  Dummy edges are discarded.
    """
    if not g.edges:
        return ()
    delta = g.max_degree()
    side = max(g.left_count, g.right_count)
    left_deg = [0] * side
    right_deg = [0] * side
    edges: list[tuple[int, int]] = list(g.edges)
    for u, v in edges:
        left_deg[u] += 1
        right_deg[v] += 1
    real_count = len(edges)
    u = v = 0
    while True:
        while u < side and left_deg[u] == delta:
            u += 1
        if u == side:
            break
        while right_deg[v] == delta:
            v += 1
        edges.append((u, v))
        left_deg[u] += 1
        right_deg[v] += 1

    colors = [0] * len(edges)
    _color_regular(side, edges, list(range(len(edges))), delta, 1, colors)
    return tuple(colors[:real_count])


def _color_regular(
    side: int,
    edges: list[tuple[int, int]],
    live: list[int],
    degree: int,
    first_color: int,
    colors: list[int],
) -> None:
    if degree == 0 or not live:
        return
    if degree == 1:
        for e in live:
            colors[e] = first_color
        return
    if degree % 2 == 1:
        matched = _peel_perfect_matching(side, edges, live)
        for e in matched:
            colors[e] = first_color
        rest = [e for e in live if e not in matched]
        _color_regular(side, edges, rest, degree - 1, first_color + 1, colors)
        return
    half_a, half_b = _euler_split(side, edges, live)
    _color_regular(side, edges, half_a, degree // 2, first_color, colors)
    _color_regular(side, edges, half_b, degree // 2, first_color + degree // 2, colors)


def _peel_perfect_matching(
    side: int, edges: list[tuple[int, int]], live: list[int]
) -> set[int]:
    sub = BipartiteGraph.build(side, side, [edges[e] for e in live])
    demand = DegreeDemand.uniform(sub, 1, 1)
    result = degree_matching(sub, demand)
    if isinstance(result, HallCertificate):
        raise KernelError("regular bipartite multigraph lost its perfect matching")
    return {live[i] for i in result}


def _euler_split(
    side: int, edges: list[tuple[int, int]], live: list[int]
) -> tuple[list[int], list[int]]:
    """Split an even-regular multigraph into two halves of equal degree.

    Walks an Euler circuit of every component (lowest unused edge first) and
    alternates the edges between the halves; bipartite circuits have even
    length, so each vertex splits evenly.
    """
    node_count = 2 * side
    incidence: list[list[int]] = [[] for _ in range(node_count)]
    for e in live:
        u, v = edges[e]
        incidence[u].append(e)
        incidence[side + v].append(e)
    used = {e: False for e in live}
    cursor = [0] * node_count
    pick_a: list[int] = []
    pick_b: list[int] = []
    for start in range(node_count):
        if cursor[start] >= len(incidence[start]):
            continue
        while cursor[start] < len(incidence[start]) and used[incidence[start][cursor[start]]]:
            cursor[start] += 1
        if cursor[start] >= len(incidence[start]):
            continue
        circuit: list[int] = []
        stack = [(start, -1)]
        while stack:
            node, via = stack[-1]
            advanced = False
            while cursor[node] < len(incidence[node]):
                e = incidence[node][cursor[node]]
                if used[e]:
                    cursor[node] += 1
                    continue
                used[e] = True
                u, v = edges[e]
                other = side + v if node == u else u
                stack.append((other, e))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if via >= 0:
                    circuit.append(via)
        for i, e in enumerate(circuit):
            (pick_a if i % 2 == 0 else pick_b).append(e)
    # keep deterministic edge order within each half
    pick_a.sort()
    pick_b.sort()
    return pick_a, pick_b


def recount_matching(
    g: BipartiteGraph, demand: DegreeDemand, matching: Sequence[int]
) -> bool:
    """True iff the edge subset meets every quota exactly (audit helper)."""
    left = [0] * g.left_count
    right = [0] * g.right_count
    seen = set()
    for e in matching:
        if e in seen or not (0 <= e < len(g.edges)):
            return False
        seen.add(e)
        u, v = g.edges[e]
        left[u] += 1
        right[v] += 1
    return tuple(left) == demand.left_quota and tuple(right) == demand.right_quota


def coloring_is_proper(g: BipartiteGraph, colors: Sequence[int]) -> bool:
    if len(colors) != len(g.edges):
        return False
    seen_left: set[tuple[int, int]] = set()
    seen_right: set[tuple[int, int]] = set()
    for (u, v), c in zip(g.edges, colors):
        if (u, c) in seen_left or (v, c) in seen_right:
            return False
        seen_left.add((u, c))
        seen_right.add((v, c))
    return True
