"""Core graph type and exact distance/eccentricity computations.

Graphs are undirected, simple, and vertex-labelled 0..n-1.  Every
quantity that feeds a bound comparison is exact: distances are ints,
average eccentricities are `fractions.Fraction`.  Unreachable vertices
are reported with the `UNREACHABLE` sentinel, never a large number.
"""

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DisconnectedGraph,
    InvalidArgument,
    InvalidEdge,
    InvalidVertex,
    InvalidWeights,
)

#: Sentinel distance for vertices not reachable from the source set.
UNREACHABLE = None

#: Girth value reported for forests (no cycle at all).
INFINITE_GIRTH = math.inf


class Graph:
    """Immutable undirected simple graph.

    Attributes:
        n: number of vertices.
        adjacency: tuple of sorted neighbour tuples, one per vertex.
        edge_list: canonical edge list, each edge (u, v) with u < v,
            sorted ascending.
    """

    __slots__ = ("n", "adjacency", "edge_list")

    def __init__(self, n, adjacency, edge_list):
        # Not for direct use; go through build_graph().
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "edge_list", edge_list)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self):
        return len(self.edge_list)

    def degree(self, v):
        return len(self.adjacency[v])

    def min_degree(self):
        return min((len(a) for a in self.adjacency), default=0)

    def max_degree(self):
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u, v):
        if u == v or not (0 <= u < self.n) or not (0 <= v < self.n):
            return False
        if len(self.adjacency[u]) > len(self.adjacency[v]):
            u, v = v, u
        return v in self.adjacency[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_list == other.edge_list

    def __hash__(self):
        return hash((self.n, self.edge_list))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n, edges):
    """Build a canonical `Graph` from an iterable of vertex pairs.

    Duplicate edges (in either orientation) collapse to one.  Self loops
    and out-of-range endpoints are rejected.
    """
    if n < 0:
        raise InvalidArgument(f"vertex count must be nonnegative, got {n}")
    seen = set()
    for u, v in edges:
        if not (0 <= u < n):
            raise InvalidVertex(f"vertex {u} outside 0..{n - 1}")
        if not (0 <= v < n):
            raise InvalidVertex(f"vertex {v} outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edge_list = tuple(sorted(seen))
    nbrs = [[] for _ in range(n)]
    for u, v in edge_list:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n, adjacency, edge_list)


@dataclass(frozen=True)
class DistanceVector:
    """BFS distances from a set of source vertices.

    dist[v] is the length of a shortest path from the nearest source,
    or `UNREACHABLE`.
    """

    sources: frozenset
    dist: tuple


def distances_from(g, sources):
    """Multi-source BFS distances from `sources` (nonempty vertex set)."""
    src = sorted(set(sources))
    if not src:
        raise InvalidArgument("source set must be nonempty")
    for s in src:
        if not (0 <= s < g.n):
            raise InvalidVertex(f"source {s} outside 0..{g.n - 1}")
    dist = [UNREACHABLE] * g.n
    queue = deque(src)
    for s in src:
        dist[s] = 0
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return DistanceVector(frozenset(src), tuple(dist))


def _single_source_all(g, s):
    # Plain BFS returning a mutable dist list; UNREACHABLE where unreached.
    dist = [UNREACHABLE] * g.n
    dist[s] = 0
    queue = deque((s,))
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g):
    if g.n == 0:
        return False
    dist = _single_source_all(g, 0)
    return all(d is not UNREACHABLE for d in dist)


@dataclass(frozen=True)
class EccentricityProfile:
    """Exact per-vertex eccentricities and their aggregates.

    avec is the exact rational EX(G)/n; ex_total is EX(G), the sum of
    all eccentricities.
    """

    ecc: tuple
    ex_total: int
    avec: Fraction
    diameter: int
    radius: int


def eccentricity_profile(g):
    """Eccentricities of every vertex of a connected graph."""
    if g.n < 1:
        raise InvalidArgument("graph must have at least one vertex")
    ecc = []
    adjacency = g.adjacency
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque((s,))
        reached = 1
        last = 0
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = du
                    reached += 1
                    last = du
                    queue.append(w)
        if reached != g.n:
            raise DisconnectedGraph(
                f"vertex {s} reaches only {reached} of {g.n} vertices"
            )
        ecc.append(last)
    ex_total = sum(ecc)
    return EccentricityProfile(
        ecc=tuple(ecc),
        ex_total=ex_total,
        avec=Fraction(ex_total, g.n),
        diameter=max(ecc),
        radius=min(ecc),
    )


def weighted_avec(g, weights):
    """Weight-averaged eccentricity: sum c(v) e(v) / sum c(v), exact.

    Weights must be nonnegative ints or Fractions with positive total.
    """
    if len(weights) != g.n:
        raise InvalidWeights(f"expected {g.n} weights, got {len(weights)}")
    total = Fraction(0)
    for c in weights:
        if not isinstance(c, (int, Fraction)) or isinstance(c, bool):
            raise InvalidWeights(f"weight {c!r} is not an exact rational")
        if c < 0:
            raise InvalidWeights(f"negative weight {c}")
        total += c
    if total == 0:
        raise InvalidWeights("total weight is zero")
    profile = eccentricity_profile(g)
    acc = Fraction(0)
    for c, e in zip(weights, profile.ecc):
        if c:
            acc += c * e
    return acc / total


def girth(g):
    """Length of a shortest cycle, or `INFINITE_GIRTH` for a forest.

    One BFS per root; every non-tree edge seen closes a cycle through
    the root of length dist[u] + dist[w] + 1, and the minimum of those
    candidates over all roots is exact.
    """
    best = INFINITE_GIRTH
    adjacency = g.adjacency
    for r in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[r] = 0
        queue = deque((r,))
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du >= best:
                break
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = du + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


@dataclass(frozen=True)
class CycleScan:
    """Presence flags for short cycles and the derived class flags."""

    has_c3: bool
    has_c4: bool
    has_c5: bool

    @property
    def class_girth6(self):
        return not (self.has_c3 or self.has_c4 or self.has_c5)

    @property
    def class_c4c5free(self):
        return not (self.has_c4 or self.has_c5)


def forbidden_cycle_scan(g):
    """Detect C3, C4 and C5 subgraphs.

    C3/C4 by common-neighbourhood counting, C5 by an exhaustive scan of
    closed 5-walks anchored at each edge.  Intended for graphs up to a
    few thousand edges; beyond roughly 20000 edges it gets slow.
    """
    adj_sets = [set(a) for a in g.adjacency]
    has_c3 = any(adj_sets[u] & adj_sets[v] for u, v in g.edge_list)
    has_c4 = False
    seen_pairs = set()
    for u in range(g.n):
        nbrs = g.adjacency[u]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                pair = (nbrs[i], nbrs[j])
                if pair in seen_pairs:
                    has_c4 = True
                    break
                seen_pairs.add(pair)
            if has_c4:
                break
        if has_c4:
            break
    has_c5 = False
    for u, v in g.edge_list:
        for a in g.adjacency[u]:
            if a == v:
                continue
            for b in g.adjacency[v]:
                if b == u or b == a:
                    continue
                # c completes the 5-cycle u-a-c-b-v
                common = adj_sets[a] & adj_sets[b]
                common.discard(u)
                common.discard(v)
                if common:
                    has_c5 = True
                    break
            if has_c5:
                break
        if has_c5:
            break
    return CycleScan(has_c3=has_c3, has_c4=has_c4, has_c5=has_c5)


def ball(g, sources, k):
    """Set of vertices within distance k of the source set."""
    if k < 0:
        raise InvalidArgument(f"radius must be nonnegative, got {k}")
    src = sorted(set(sources))
    if not src:
        raise InvalidArgument("source set must be nonempty")
    for s in src:
        if not (0 <= s < g.n):
            raise InvalidVertex(f"source {s} outside 0..{g.n - 1}")
    dist = {s: 0 for s in src}
    queue = deque(src)
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du == k:
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return frozenset(dist)


def _require_edge(g, e):
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidEdge(f"({u}, {v}) is not an edge of the graph")
    return (u, v) if u < v else (v, u)


def edge_distance(g, e, f):
    """Distance between two edges: min over endpoint pairs.

    Returns `UNREACHABLE` if the edges lie in different components.
    """
    e = _require_edge(g, e)
    f = _require_edge(g, f)
    dist = distances_from(g, e).dist
    vals = [dist[x] for x in f if dist[x] is not UNREACHABLE]
    return min(vals) if vals else UNREACHABLE


def line_graph(g):
    """Line graph of g.

    Returns (L, edge_of_vertex) where vertex i of L is the edge
    edge_of_vertex[i] of g, in edge_list order.
    """
    index = {e: i for i, e in enumerate(g.edge_list)}
    incident = [[] for _ in range(g.n)]
    for e, i in index.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    edges = []
    for ids in incident:
        ids.sort()
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.append((ids[a], ids[b]))
    return build_graph(g.m, edges), tuple(g.edge_list)


def power_graph(g, k):
    """k-th power: u ~ v iff 1 <= d(u, v) <= k."""
    if k < 1:
        raise InvalidArgument(f"power must be >= 1, got {k}")
    edges = []
    for s in range(g.n):
        for v in ball(g, (s,), k):
            if v > s:
                edges.append((s, v))
    return build_graph(g.n, edges)


def induced_subgraph(g, vertices):
    """Induced subgraph on `vertices`, relabelled 0..|A|-1 in sorted order.

    Returns (subgraph, original) where original[i] is the vertex of g
    that became vertex i.
    """
    original = tuple(sorted(set(vertices)))
    for v in original:
        if not (0 <= v < g.n):
            raise InvalidVertex(f"vertex {v} outside 0..{g.n - 1}")
    new_index = {v: i for i, v in enumerate(original)}
    edges = [
        (new_index[u], new_index[v])
        for u, v in g.edge_list
        if u in new_index and v in new_index
    ]
    return build_graph(len(original), edges), original
