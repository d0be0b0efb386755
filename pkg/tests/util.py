"""Shared test helpers: format converters and independent oracles.

Oracles here deliberately avoid the library's own algorithms: girth by
edge deletion plus shortest path, short-cycle existence by brute-force
subset enumeration, everything distance-flavoured via networkx.
"""

import itertools
import math

import networkx as nx

from avec.graph import build_graph


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edge_list)
    return G


def from_nx(G):
    nodes = sorted(G.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in G.edges])


def girth_oracle(g):
    """min over edges uv of d_{G-uv}(u, v) + 1, or +inf for a forest."""
    G = to_nx(g)
    best = math.inf
    for u, v in g.edge_list:
        G.remove_edge(u, v)
        if nx.has_path(G, u, v):
            best = min(best, nx.shortest_path_length(G, u, v) + 1)
        G.add_edge(u, v)
    return best


def has_cycle_oracle(g, k):
    """True iff g contains a k-cycle subgraph.  Exponential; n <= ~12."""
    adj = [set(a) for a in g.adjacency]
    for sub in itertools.combinations(range(g.n), k):
        first, rest = sub[0], sub[1:]
        for perm in itertools.permutations(rest):
            if perm[0] > perm[-1]:
                continue
            cyc = (first,) + perm
            if all(cyc[(i + 1) % k] in adj[cyc[i]] for i in range(k)):
                return True
    return False


def random_connected_graph(rng, n, extra_edges=0):
    """Random tree by random parents, plus extra random chords."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for _ in range(extra_edges):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, edges)


def random_tree(rng, n):
    return random_connected_graph(rng, n, 0)


def is_bipartite(g):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True
