"""Step-by-step replay of the constructive average-eccentricity bounds.

The pipeline mirrors the derivation it certifies:

1. grow a scattered matching M (pairwise edge distance >= 5; in the
   maxdeg variant the anchor edge e_1 keeps distance >= 6 from the
   rest) until every edge of the graph is close to M;
2. span each matching edge's ball with a distance-preserving tree,
   join the ball trees with connector edges, and extend to a spanning
   tree T that preserves every vertex's distance to V(M);
3. concentrate vertex weights onto V(M) (c), onto the matching edges
   seen as line-graph vertices (cbar), and normalize (cprime);
4. contract: compare weighted average eccentricities across T, the
   line graph L of T, and the 6th-power contraction restricted to M;
5. check every intermediate inequality and the final closed-form
   bound, exactly where the quantities are rational and with a 1e-9
   tolerance on the bound side where a square root is involved.

A failing inequality is recorded (overall_pass = False), never hidden;
a malformed construction raises ConstructionInvariantViolated.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import bounds as _bounds
from .errors import (
    ConstructionInvariantViolated,
    InvalidArgument,
    InvalidVertex,
    LemmaBoundViolated,
    MissingParameter,
    NotGirthSix,
    OutOfRange,
)
from .graph import (
    build_graph,
    distances_from,
    eccentricity_profile,
    forbidden_cycle_scan,
    induced_subgraph,
    line_graph,
    power_graph,
    weighted_avec,
)

VARIANT_GIRTH6 = "girth6"
VARIANT_MAXDEG = "maxdeg"

#: Ball radius per matching edge; the maxdeg anchor edge gets 3.
_BALL_RADIUS = 2
_ANCHOR_RADIUS = 3


@dataclass(frozen=True)
class Matching:
    """Scattered matching in growth order; edges[0] is the anchor."""

    variant: str
    edges: tuple
    anchor: int | None
    pairwise: tuple


@dataclass(frozen=True)
class AnchoredTree:
    """Spanning tree preserving distances to the matching vertices.

    assignment[x] is the matching vertex whose ball tree x hangs
    under; d_T(x, assignment[x]) = d_G(x, V(M)) for every x.
    """

    tree: object
    assignment: tuple
    subtrees: tuple
    connectors: tuple
    radii: tuple


@dataclass(frozen=True)
class WeightSystem:
    """c on vertices, cbar/cprime aligned with the matching edges."""

    c: tuple
    cbar: tuple
    cprime: tuple
    n_normalized: object


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: object
    rhs: object
    passed: bool


@dataclass(frozen=True)
class ProofTrace:
    variant: str
    n: int
    delta: int
    max_degree: int
    matching: Matching
    tree: AnchoredTree
    weights: WeightSystem
    values: tuple
    checks: tuple
    structural: tuple
    final_bound: object
    overall_pass: bool
    notes: tuple


def _validate_replay_input(g, variant, anchor):
    if variant not in (VARIANT_GIRTH6, VARIANT_MAXDEG):
        raise InvalidArgument(f"unknown variant {variant!r}")
    if g.min_degree() < 3:
        raise OutOfRange(f"replay needs minimum degree >= 3, got {g.min_degree()}")
    scan = forbidden_cycle_scan(g)
    if not scan.class_girth6:
        raise NotGirthSix("replay needs a graph with no cycle shorter than 6")
    if variant == VARIANT_MAXDEG:
        if anchor is None:
            raise MissingParameter("maxdeg variant needs an anchor vertex")
        if not (0 <= anchor < g.n):
            raise InvalidVertex(f"anchor {anchor} outside 0..{g.n - 1}")
        if g.degree(anchor) != g.max_degree():
            raise OutOfRange(
                f"anchor degree {g.degree(anchor)} is not the maximum {g.max_degree()}"
            )


def _edge_dist_vector(g, edges):
    # d(e, {edges}) per edge of g: min endpoint distance to the vertex set.
    verts = set()
    for a, b in edges:
        verts.add(a)
        verts.add(b)
    dist = distances_from(g, verts).dist
    return [min(dist[a], dist[b]) for a, b in g.edge_list], dist


def build_matching(g, variant, anchor=None) -> Matching:
    """Grow the scattered matching, smallest qualifying edge first.

    girth6: start at the lexicographically smallest edge; while some
    edge is at distance >= 5 from M, add the smallest edge at distance
    exactly 5.  maxdeg: start at the smallest edge incident to the
    anchor; add the smallest uncovered edge whose distances to the
    anchor edge (>= 6) and the rest (>= 5) meet one bound with
    equality, until every edge is within 5 of e_1 or 4 of the rest.
    """
    _validate_replay_input(g, variant, anchor)
    if not g.edge_list:
        raise InvalidArgument("graph has no edges")
    if variant == VARIANT_GIRTH6:
        chosen = [g.edge_list[0]]
        while True:
            dvec, _ = _edge_dist_vector(g, chosen)
            if max(dvec) <= 4:
                break
            cand = [e for e, d in zip(g.edge_list, dvec) if d == 5]
            if not cand:
                raise ConstructionInvariantViolated(
                    "edges remain at distance >= 5 from the matching "
                    "but none at exactly 5"
                )
            chosen.append(cand[0])
    else:
        nbr = g.adjacency[anchor]
        e0 = min((min(anchor, w), max(anchor, w)) for w in nbr)
        chosen = [e0]
        while True:
            d1, _ = _edge_dist_vector(g, chosen[:1])
            if len(chosen) > 1:
                d2, _ = _edge_dist_vector(g, chosen[1:])
            else:
                d2 = [None] * g.m
            cand = []
            uncovered = False
            for e, a, b in zip(g.edge_list, d1, d2):
                if a >= 6 and (b is None or b >= 5):
                    uncovered = True
                    if a == 6 or b == 5:
                        cand.append(e)
            if not uncovered:
                break
            if not cand:
                raise ConstructionInvariantViolated(
                    "uncovered edges remain but none meets a distance "
                    "bound with equality"
                )
            chosen.append(cand[0])

    k = len(chosen)
    pairwise = [[0] * k for _ in range(k)]
    for i in range(k):
        dist = distances_from(g, chosen[i]).dist
        for j in range(k):
            a, b = chosen[j]
            pairwise[i][j] = min(dist[a], dist[b])
    _assert_matching(g, variant, chosen, pairwise)
    return Matching(
        variant=variant,
        edges=tuple(chosen),
        anchor=anchor,
        pairwise=tuple(tuple(row) for row in pairwise),
    )


def _assert_matching(g, variant, edges, pairwise):
    k = len(edges)
    for i in range(k):
        for j in range(i + 1, k):
            need = 6 if (variant == VARIANT_MAXDEG and 0 in (i, j)) else 5
            if pairwise[i][j] < need:
                raise ConstructionInvariantViolated(
                    f"matching edges {edges[i]} and {edges[j]} at distance "
                    f"{pairwise[i][j]} < {need}"
                )
    if variant == VARIANT_GIRTH6:
        dvec, _ = _edge_dist_vector(g, edges)
        if max(dvec) > 4:
            raise ConstructionInvariantViolated("an edge is farther than 4 from the matching")
    else:
        d1, _ = _edge_dist_vector(g, edges[:1])
        if k > 1:
            d2, _ = _edge_dist_vector(g, edges[1:])
        else:
            d2 = [10**9] * g.m
        for a, b in zip(d1, d2):
            if a > 5 and b > 4:
                raise ConstructionInvariantViolated(
                    "an edge escapes both coverage radii (5 around the "
                    "anchor, 4 around the rest)"
                )


def build_tree(g, matching: Matching) -> AnchoredTree:
    """Spanning tree from ball trees, connectors, and BFS extension.

    Each matching edge's ball (radius 2; the maxdeg anchor gets 3) is
    spanned by a tree preserving the distance to the edge; the balls
    must be pairwise disjoint.  Ball trees are joined by the smallest
    joining edge, then every remaining vertex is attached to a
    smallest-index parent one step closer to V(M).
    """
    n = g.n
    k = len(matching.edges)
    radii = tuple(
        _ANCHOR_RADIUS if (matching.variant == VARIANT_MAXDEG and i == 0) else _BALL_RADIUS
        for i in range(k)
    )
    owner = [-1] * n
    assignment = [-1] * n
    depth = [-1] * n
    tree_edges = set()
    subtrees = []
    for i, (a, b) in enumerate(matching.edges):
        dist = distances_from(g, (a, b)).dist
        members = [
            v for v, d in enumerate(dist) if d is not None and d <= radii[i]
        ]
        sub = {(a, b)}
        for v in members:
            if owner[v] != -1:
                raise ConstructionInvariantViolated(
                    f"vertex {v} lies in the balls of {matching.edges[owner[v]]} "
                    f"and {matching.edges[i]}"
                )
            owner[v] = i
            depth[v] = dist[v]
        for v in sorted(members):
            if dist[v] == 0:
                assignment[v] = v
                continue
            parent = min(w for w in g.adjacency[v] if dist[w] == dist[v] - 1)
            sub.add((min(v, parent), max(v, parent)))
        # Root every ball vertex at the endpoint its parent chain reaches.
        for v in sorted(members, key=lambda x: dist[x]):
            if dist[v] > 0:
                parent = min(w for w in g.adjacency[v] if dist[w] == dist[v] - 1)
                assignment[v] = assignment[parent]
        subtrees.append(frozenset(sub))
        tree_edges |= sub

    connectors = []
    for i in range(1, k):
        hit = None
        for x, y in g.edge_list:
            ox, oy = owner[x], owner[y]
            if (ox == i and 0 <= oy < i) or (oy == i and 0 <= ox < i):
                hit = (x, y)
                break
        if hit is None:
            raise ConstructionInvariantViolated(
                f"no edge joins the ball of {matching.edges[i]} to the earlier balls"
            )
        connectors.append(hit)
        tree_edges.add(hit)

    mverts = [v for e in matching.edges for v in e]
    dM = distances_from(g, mverts).dist
    in_tree = [o != -1 for o in owner]
    pending = sorted(
        (d, v) for v, d in enumerate(dM) if d is not None and not in_tree[v]
    )
    for d, v in pending:
        parents = [w for w in g.adjacency[v] if dM[w] == d - 1 and in_tree[w]]
        if not parents:
            raise ConstructionInvariantViolated(
                f"vertex {v} has no attached neighbour at distance {d - 1} from V(M)"
            )
        p = parents[0]
        tree_edges.add((min(v, p), max(v, p)))
        in_tree[v] = True
        assignment[v] = assignment[p]
        depth[v] = d
    if any(d is None for d in dM):
        raise ConstructionInvariantViolated("graph is disconnected")

    tree = build_graph(n, tree_edges)
    anchored = AnchoredTree(
        tree=tree,
        assignment=tuple(assignment),
        subtrees=tuple(subtrees),
        connectors=tuple(connectors),
        radii=radii,
    )
    _assert_tree(g, matching, anchored, dM)
    return anchored


def _assert_tree(g, matching, anchored, dM):
    tree = anchored.tree
    n = g.n
    if tree.m != n - 1:
        raise ConstructionInvariantViolated(
            f"tree has {tree.m} edges, expected {n - 1}"
        )
    reach = distances_from(tree, (0,)).dist
    if any(d is None for d in reach):
        raise ConstructionInvariantViolated("tree is not spanning")
    for i, e in enumerate(matching.edges):
        if e not in anchored.subtrees[i]:
            raise ConstructionInvariantViolated(f"matching edge {e} missing from its ball tree")
    limit = 6 if matching.variant == VARIANT_MAXDEG else 5
    dist_to = {}
    for v in {x for e in matching.edges for x in e}:
        dist_to[v] = distances_from(tree, (v,)).dist
    for x in range(n):
        w = anchored.assignment[x]
        if dist_to[w][x] != dM[x]:
            raise ConstructionInvariantViolated(
                f"vertex {x}: tree distance {dist_to[w][x]} to its matching vertex "
                f"{w} differs from graph distance {dM[x]} to V(M)"
            )
        if dM[x] > limit:
            raise ConstructionInvariantViolated(
                f"vertex {x} at distance {dM[x]} > {limit} from V(M)"
            )
    if matching.variant == VARIANT_MAXDEG:
        sub_vertices = [set() for _ in matching.edges]
        for i, sub in enumerate(anchored.subtrees):
            for e in sub:
                sub_vertices[i].update(e)
        for i, verts in enumerate(sub_vertices):
            ok = set(matching.edges[i])
            for x in verts:
                if anchored.assignment[x] not in ok:
                    raise ConstructionInvariantViolated(
                        f"vertex {x} in the ball tree of {matching.edges[i]} "
                        f"is assigned outside that edge"
                    )


def compute_weights(g, matching: Matching, anchored: AnchoredTree, constants) -> WeightSystem:
    """Concentrated weights c, cbar, cprime and the normalized total.

    Raises LemmaBoundViolated if any cbar falls below its closed-form
    floor (delta_star; Delta_star for the maxdeg anchor edge).
    """
    n = g.n
    c = [0] * n
    for x in range(n):
        c[anchored.assignment[x]] += 1
    cbar = tuple(c[a] + c[b] for a, b in matching.edges)
    maxdeg = matching.variant == VARIANT_MAXDEG
    for i, w in enumerate(cbar):
        if maxdeg and i == 0:
            if w < constants.Delta_star - _bounds.FLOAT_TOL:
                raise LemmaBoundViolated(
                    f"cbar(e_1) = {w} below Delta_star = {constants.Delta_star}"
                )
        elif w < constants.delta_star:
            raise LemmaBoundViolated(
                f"cbar({matching.edges[i]}) = {w} below delta_star = {constants.delta_star}"
            )
    ds = constants.delta_star
    if maxdeg:
        cprime = tuple(
            (w - constants.Delta_star + ds) / ds if i == 0 else Fraction(w, ds)
            for i, w in enumerate(cbar)
        )
        n_normalized = (n - constants.Delta_star + ds) / ds
    else:
        cprime = tuple(Fraction(w, ds) for w in cbar)
        n_normalized = Fraction(n, ds)
    for i, w in enumerate(cprime):
        if w < 1 - _bounds.FLOAT_TOL:
            raise LemmaBoundViolated(f"cprime({matching.edges[i]}) = {w} below 1")
    return WeightSystem(c=tuple(c), cbar=cbar, cprime=cprime, n_normalized=n_normalized)


def _le(lhs, rhs):
    if isinstance(lhs, float) or isinstance(rhs, float):
        return lhs <= rhs + _bounds.FLOAT_TOL
    return lhs <= rhs


def _dist_matrix(g):
    return [distances_from(g, (s,)).dist for s in range(g.n)]


def _component_count(g):
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def replay(g, variant, anchor=None) -> ProofTrace:
    """Run the whole pipeline and check every inequality in order."""
    profile_g = eccentricity_profile(g)
    matching = build_matching(g, variant, anchor)
    anchored = build_tree(g, matching)
    tree = anchored.tree
    n = g.n
    delta = g.min_degree()
    Delta = g.max_degree()
    maxdeg = variant == VARIANT_MAXDEG
    constants = _bounds.structural_constants(delta, Delta if maxdeg else None)
    weights = compute_weights(g, matching, anchored, constants)
    k = len(matching.edges)

    profile_t = eccentricity_profile(tree)
    avec_g = profile_g.avec
    avec_t = profile_t.avec
    avec_c_t = weighted_avec(tree, weights.c)

    line, line_edges = line_graph(tree)
    line_index = {e: i for i, e in enumerate(line_edges)}
    cbar_vec = [0] * line.n
    for i, e in enumerate(matching.edges):
        cbar_vec[line_index[e]] = weights.cbar[i]
    avec_cbar_line = weighted_avec(line, cbar_vec)

    power = power_graph(line, 6)
    m_line = sorted(line_index[e] for e in matching.edges)
    target, orig = induced_subgraph(power, m_line)
    t_of_line = {li: ti for ti, li in enumerate(orig)}
    t_of_match = tuple(t_of_line[line_index[e]] for e in matching.edges)
    if maxdeg:
        d_from_anchor = distances_from(line, (line_index[matching.edges[0]],)).dist
        extra = []
        t0 = t_of_match[0]
        for i in range(1, k):
            if d_from_anchor[line_index[matching.edges[i]]] <= 7:
                ti = t_of_match[i]
                extra.append((min(t0, ti), max(t0, ti)))
        target = build_graph(k, list(target.edge_list) + extra)

    components = _component_count(target)
    connected = components == 1

    checks = []

    def check(name, lhs, rhs, passed=None):
        ok = _le(lhs, rhs) if passed is None else passed
        checks.append(CheckResult(name=name, lhs=lhs, rhs=rhs, passed=ok))

    check("spanning_tree_domination", avec_g, avec_t)
    if maxdeg:
        check("weight_concentration_shift", avec_t, avec_c_t + 6)
    else:
        check("weight_concentration_shift", abs(avec_c_t - avec_t), Fraction(5))
    if maxdeg:
        rest = min(weights.cbar[1:]) if k > 1 else None
        check(
            "matching_edge_weight_lower",
            rest,
            constants.delta_star,
            passed=True if rest is None else rest >= constants.delta_star,
        )
        check(
            "anchor_edge_weight_lower",
            weights.cbar[0],
            constants.Delta_star,
            passed=weights.cbar[0] >= constants.Delta_star - _bounds.FLOAT_TOL,
        )
    else:
        low = min(weights.cbar)
        check(
            "matching_edge_weight_lower",
            low,
            constants.delta_star,
            passed=low >= constants.delta_star,
        )
    check("line_graph_transfer", avec_c_t, avec_cbar_line + 1)
    check("contraction_connected", components, 1, passed=connected)

    avec_cbar_target = None
    avec_cprime_target = None
    anchor_target_ecc = None
    if connected:
        profile_target = eccentricity_profile(target)
        ecc_by_match = tuple(profile_target.ecc[t] for t in t_of_match)
        avec_cbar_target = Fraction(
            sum(w * e for w, e in zip(weights.cbar, ecc_by_match)), n
        )
        acc = 0
        for w, e in zip(weights.cprime, ecc_by_match):
            acc = acc + w * e
        avec_cprime_target = acc / weights.n_normalized
        if maxdeg:
            anchor_target_ecc = ecc_by_match[0]
        shift = 8 if maxdeg else 5
        check(
            "power_contraction_transfer",
            avec_cbar_line,
            6 * avec_cbar_target + shift,
        )
        if maxdeg:
            path_rhs = 3 * (n - constants.Delta_star) / (4 * constants.delta_star) + 1
        else:
            ceil_n = -(-weights.n_normalized.numerator // weights.n_normalized.denominator)
            path_rhs = Fraction(3, 4) * ceil_n - Fraction(1, 2)
        check("contracted_path_bound", avec_cprime_target, path_rhs)
        if maxdeg:
            check(
                "anchor_eccentricity_bound",
                anchor_target_ecc,
                (n - constants.Delta_star) / constants.delta_star,
            )
    else:
        shift = 8 if maxdeg else 5
        check("power_contraction_transfer", None, None, passed=False)
        check("contracted_path_bound", None, None, passed=False)
        if maxdeg:
            check("anchor_eccentricity_bound", None, None, passed=False)

    bound_name = _bounds.BOUND_G6_MAX if maxdeg else _bounds.BOUND_G6
    final_bound = _bounds.upper_bound(bound_name, n, delta, Delta if maxdeg else None)
    check("final_bound", avec_g, final_bound)

    structural = _structural_checks(
        g, matching, anchored, weights, profile_g, profile_t,
        line, line_index, target, t_of_match, maxdeg, n,
    )

    values = (
        ("avec_graph", avec_g),
        ("avec_tree", avec_t),
        ("avec_c_tree", avec_c_t),
        ("avec_cbar_line", avec_cbar_line),
        ("avec_cbar_target", avec_cbar_target),
        ("avec_cprime_target", avec_cprime_target),
        ("anchor_target_ecc", anchor_target_ecc),
        ("n_normalized", weights.n_normalized),
        ("matching_size", k),
        ("delta_star", constants.delta_star),
        ("Delta_star", constants.Delta_star),
        ("final_bound", final_bound),
    )

    notes = (
        "coverage rule: every edge within distance 4 of the matching"
        if not maxdeg
        else "coverage rule: every edge within distance 5 of the anchor "
        "edge or 4 of a non-anchor member (anchor excluded from the "
        "latter set)",
    )

    overall = all(c.passed for c in checks) and all(c.passed for c in structural)
    return ProofTrace(
        variant=variant,
        n=n,
        delta=delta,
        max_degree=Delta,
        matching=matching,
        tree=anchored,
        weights=weights,
        values=values,
        checks=tuple(checks),
        structural=tuple(structural),
        final_bound=final_bound,
        overall_pass=overall,
        notes=notes,
    )


def _structural_checks(
    g, matching, anchored, weights, profile_g, profile_t,
    line, line_index, target, t_of_match, maxdeg, n,
):
    out = []

    def add(name, lhs, rhs, passed):
        out.append(CheckResult(name=name, lhs=lhs, rhs=rhs, passed=passed))

    ball_sets = []
    for sub in anchored.subtrees:
        verts = set()
        for e in sub:
            verts.update(e)
        ball_sets.append(verts)
    overlap = 0
    for i in range(len(ball_sets)):
        for j in range(i + 1, len(ball_sets)):
            overlap = max(overlap, len(ball_sets[i] & ball_sets[j]))
    add("ball_disjointness", overlap, 0, overlap == 0)

    total_c = sum(weights.c)
    total_cbar = sum(weights.cbar)
    add("weight_total_c", total_c, n, total_c == n)
    add("weight_total_cbar", total_cbar, n, total_cbar == n)
    acc = 0
    for w in weights.cprime:
        acc = acc + w
    if isinstance(acc, float) or isinstance(weights.n_normalized, float):
        ok = abs(acc - weights.n_normalized) <= _bounds.FLOAT_TOL
    else:
        ok = acc == weights.n_normalized
    add("weight_total_cprime", acc, weights.n_normalized, ok)

    worst = min(t - gg for t, gg in zip(profile_t.ecc, profile_g.ecc))
    add("tree_ecc_domination", worst, 0, worst >= 0)

    # d_T(x, y) <= d_L(e_x, e_y) + 1 over all endpoint/edge choices.
    tree = anchored.tree
    dt = _dist_matrix(tree)
    dl = _dist_matrix(line)
    edges = tree.edge_list
    worst_gap = None
    for i, (u1, v1) in enumerate(edges):
        row = dl[i]
        for j in range(i, len(edges)):
            u2, v2 = edges[j]
            dtmax = max(dt[u1][u2], dt[u1][v2], dt[v1][u2], dt[v1][v2])
            gap = dtmax - row[j]
            if worst_gap is None or gap > worst_gap:
                worst_gap = gap
    add("line_displacement", worst_gap, 1, worst_gap is not None and worst_gap <= 1)

    # d_L(e, f) <= 6 d_target(e, f) (+2 for maxdeg) over matching pairs.
    dtarget = _dist_matrix(target)
    slack = 2 if maxdeg else 0
    worst_pc = 0
    k = len(matching.edges)
    for i in range(k):
        li = line_index[matching.edges[i]]
        for j in range(i + 1, k):
            lj = line_index[matching.edges[j]]
            lhs = dl[li][lj]
            rhs = 6 * dtarget[t_of_match[i]][t_of_match[j]] + slack
            worst_pc = max(worst_pc, lhs - rhs)
    add("power_contraction", worst_pc, 0, worst_pc <= 0)
    return tuple(out)


def _num_json(x):
    if x is None or isinstance(x, (int, float)) and not isinstance(x, bool):
        return x
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    return x


def trace_json(trace: ProofTrace) -> dict:
    """JSON form of a trace: ordered checks plus the full certificate."""
    return {
        "variant": trace.variant,
        "n": trace.n,
        "delta": trace.delta,
        "max_degree": trace.max_degree,
        "matching": {
            "size": len(trace.matching.edges),
            "edges": [list(e) for e in trace.matching.edges],
            "anchor": trace.matching.anchor,
            "pairwise_distances": [list(r) for r in trace.matching.pairwise],
        },
        "tree": {
            "edges": [list(e) for e in trace.tree.tree.edge_list],
            "connectors": [list(e) for e in trace.tree.connectors],
            "assignment": list(trace.tree.assignment),
        },
        "weights": {
            "c": list(trace.weights.c),
            "cbar": list(trace.weights.cbar),
            "cprime": [_num_json(w) for w in trace.weights.cprime],
            "n_normalized": _num_json(trace.weights.n_normalized),
        },
        "values": {name: _num_json(v) for name, v in trace.values},
        "checks": [
            {
                "name": c.name,
                "lhs": _num_json(c.lhs),
                "rhs": _num_json(c.rhs),
                "pass": c.passed,
            }
            for c in trace.checks
        ],
        "structural": [
            {
                "name": c.name,
                "lhs": _num_json(c.lhs),
                "rhs": _num_json(c.rhs),
                "pass": c.passed,
            }
            for c in trace.structural
        ],
        "final_bound": _num_json(trace.final_bound),
        "overall_pass": trace.overall_pass,
        "notes": list(trace.notes),
    }
