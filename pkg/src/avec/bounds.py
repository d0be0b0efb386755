"""Closed-form average-eccentricity bounds and the report that compares them.

Every bound that is a rational function of (n, delta) is evaluated as an
exact `Fraction`; the two maximum-degree bounds involve a square root
and are evaluated in double precision with a documented 1e-9 tolerance
applied on the bound side only.  Exact quantities are never rounded.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DisconnectedGraph,
    InvalidArgument,
    MissingParameter,
    NotApplicable,
    OutOfRange,
)
from .graph import ball, eccentricity_profile, forbidden_cycle_scan, is_connected

#: Bound identifiers used in reports, CSV columns, and the CLI.
BOUND_PATH = "path_T11"
BOUND_EQ1 = "general_eq1"
BOUND_G6 = "girth6_T31"
BOUND_C4C5 = "c4c5_T33"
BOUND_G6_MAX = "girth6_maxdeg_T41"
BOUND_C4C5_MAX = "c4c5_maxdeg_T44"
BOUND_LOWER = "lower_T32"

UPPER_BOUNDS = (BOUND_PATH, BOUND_EQ1, BOUND_G6, BOUND_C4C5, BOUND_G6_MAX, BOUND_C4C5_MAX)

#: Comparison tolerance for sqrt-valued bounds, applied to the bound side.
FLOAT_TOL = 1e-9

_CONSTANT_NOTE = (
    "girth6_T31 and c4c5_T33 use the additive constant +8; "
    "a tighter +7 variant circulates but is not what is certified here"
)


@dataclass(frozen=True)
class StructuralConstants:
    """Neighbourhood-size constants for minimum degree delta (and Delta).

    delta_star bounds |N<=2(vw)| from below in girth-6 graphs,
    delta_circ does the same in (C4,C5)-free graphs; Delta_star and
    Delta_circ bound |N<=3(v)| for a vertex v of degree Delta.
    """

    delta: int
    Delta: int | None
    delta_star: int
    delta_circ: int
    Delta_star: float | None
    Delta_circ: float | None


def structural_constants(delta: int, Delta: int | None = None) -> StructuralConstants:
    if delta < 3:
        raise OutOfRange(f"delta must be >= 3, got {delta}")
    if Delta is not None and Delta < delta:
        raise OutOfRange(f"Delta {Delta} below delta {delta}")
    delta_star = 2 * delta * delta - 2 * delta + 2
    if delta % 2 == 0:
        delta_circ = 2 * delta * delta - 5 * delta + 5
    else:
        delta_circ = 2 * delta * delta - 5 * delta + 7
    Delta_star = Delta_circ = None
    if Delta is not None:
        Delta_star = Delta * delta + (delta - 1) * math.sqrt(Delta * (delta - 2)) + 1.5
        Delta_circ = (
            Delta * (delta - 1) + (delta - 2) * math.sqrt(Delta * (delta - 3)) + 1.5
        )
    return StructuralConstants(
        delta=delta,
        Delta=Delta,
        delta_star=delta_star,
        delta_circ=delta_circ,
        Delta_star=Delta_star,
        Delta_circ=Delta_circ,
    )


def path_avec(n: int) -> Fraction:
    """Average eccentricity of the n-vertex path: (1/n) * floor(3n^2/4 - n/2).

    This is the maximum average eccentricity over all connected graphs
    of order n, attained only by the path.
    """
    if n < 1:
        raise OutOfRange(f"order must be >= 1, got {n}")
    return Fraction((3 * n * n - 2 * n) // 4, n)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def upper_bound(name: str, n: int, delta: int, Delta: int | None = None):
    """Evaluate one named upper bound at (n, delta[, Delta]).

    Rational bounds come back as `Fraction`, the two maximum-degree
    bounds as float.
    """
    if n < 1:
        raise OutOfRange(f"order must be >= 1, got {n}")
    if delta < 0:
        raise OutOfRange(f"delta must be nonnegative, got {delta}")
    if name == BOUND_PATH:
        return path_avec(n)
    if name == BOUND_EQ1:
        return Fraction(9 * n, 4 * (delta + 1)) + Fraction(15, 4)
    if name == BOUND_G6:
        sc = structural_constants(delta)
        return Fraction(9, 2) * _ceil_div(n, sc.delta_star) + 8
    if name == BOUND_C4C5:
        sc = structural_constants(delta)
        return Fraction(9, 2) * _ceil_div(n, sc.delta_circ) + 8
    if name in (BOUND_G6_MAX, BOUND_C4C5_MAX):
        if Delta is None:
            raise MissingParameter(f"{name} needs the maximum degree Delta")
        sc = structural_constants(delta, Delta)
        if name == BOUND_G6_MAX:
            dd, ds = sc.delta_star, sc.Delta_star
        else:
            dd, ds = sc.delta_circ, sc.Delta_circ
        return ((n - ds) / (2 * dd)) * ((9 * n + 3 * ds) / n) + 21
    raise InvalidArgument(f"unknown bound {name!r}")


def sharpness_lower(n: int, delta: int) -> Fraction:
    """Lower bound 9n/(2 delta_star) - 5 attained up to O(1) by chains."""
    if n < 0:
        raise OutOfRange(f"order must be nonnegative, got {n}")
    sc = structural_constants(delta)
    return Fraction(9 * n, 2 * sc.delta_star) - 5


@dataclass(frozen=True)
class AuditItem:
    """One audited neighbourhood: observed size vs. its lower bound."""

    check: str
    subject: tuple
    size: int
    bound: object
    margin: object


@dataclass(frozen=True)
class AuditRecord:
    delta: int
    max_degree: int
    girth_class: bool
    c4c5_class: bool
    items: tuple
    passed: bool


def audit_balls(g) -> AuditRecord:
    """Compare every relevant ball size against its closed-form bound.

    For each edge vw, |N<=2({v,w})| is checked against delta_star
    (girth-6 class) and/or delta_circ ((C4,C5)-free class); for each
    maximum-degree vertex, |N<=3(v)| is checked against Delta_star
    and/or Delta_circ.  Margins (size - bound) are reported raw; a
    negative margin flips the global pass flag but never raises.
    """
    if not is_connected(g):
        raise DisconnectedGraph("ball audit needs a connected graph")
    delta = g.min_degree()
    if delta < 3:
        raise OutOfRange(f"ball audit needs minimum degree >= 3, got {delta}")
    scan = forbidden_cycle_scan(g)
    if not scan.class_c4c5free:
        raise NotApplicable("graph is neither girth-6 nor (C4,C5)-free")
    Delta = g.max_degree()
    sc = structural_constants(delta, Delta)
    items = []
    for u, v in g.edge_list:
        size = len(ball(g, (u, v), 2))
        if scan.class_girth6:
            items.append(
                AuditItem("edge_ball2_girth6", (u, v), size, sc.delta_star, size - sc.delta_star)
            )
        items.append(
            AuditItem("edge_ball2_c4c5", (u, v), size, sc.delta_circ, size - sc.delta_circ)
        )
    for v in range(g.n):
        if g.degree(v) != Delta:
            continue
        size = len(ball(g, (v,), 3))
        if scan.class_girth6:
            items.append(
                AuditItem("vertex_ball3_girth6", (v,), size, sc.Delta_star, size - sc.Delta_star)
            )
        items.append(
            AuditItem("vertex_ball3_c4c5", (v,), size, sc.Delta_circ, size - sc.Delta_circ)
        )
    passed = all(item.margin >= -FLOAT_TOL for item in items)
    return AuditRecord(
        delta=delta,
        max_degree=Delta,
        girth_class=scan.class_girth6,
        c4c5_class=scan.class_c4c5free,
        items=tuple(items),
        passed=passed,
    )


def audit_json(record: AuditRecord) -> dict:
    return {
        "delta": record.delta,
        "max_degree": record.max_degree,
        "girth_class": record.girth_class,
        "c4c5_class": record.c4c5_class,
        "pass": record.passed,
        "items": [
            {
                "check": it.check,
                "subject": list(it.subject),
                "size": it.size,
                "bound": _num_json(it.bound),
                "margin": _num_json(it.margin),
            }
            for it in record.items
        ],
    }


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: object
    applicable: bool
    slack: object


@dataclass(frozen=True)
class BoundReport:
    """All bound evaluations for one graph, against its exact avec."""

    n: int
    delta: int
    max_degree: int
    girth_class: bool
    c4c5_class: bool
    ex_total: int
    avec: Fraction
    bounds: tuple
    violations: tuple
    family: str | None = None
    ell: int | None = None
    notes: tuple = ()


def analyze(g, chain_params=None) -> BoundReport:
    """Evaluate every bound whose hypotheses the graph satisfies.

    chain_params, when given as (delta, ell), marks the graph as a
    default-head chain instance, enabling the family lower bound.
    """
    profile = eccentricity_profile(g)
    scan = forbidden_cycle_scan(g)
    n = g.n
    delta = g.min_degree()
    Delta = g.max_degree()
    avec = profile.avec
    theorem_ok = delta >= 3

    entries = []
    violations = []

    def push(name, value, applicable):
        slack = None
        if applicable and value is not None:
            if name == BOUND_LOWER:
                slack = avec - value
            else:
                slack = value - avec
            bad = slack < -FLOAT_TOL if isinstance(slack, float) else slack < 0
            if bad:
                violations.append(name)
        entries.append(BoundEntry(name=name, value=value, applicable=applicable, slack=slack))

    push(BOUND_PATH, upper_bound(BOUND_PATH, n, delta), True)
    push(BOUND_EQ1, upper_bound(BOUND_EQ1, n, delta), True)
    push(
        BOUND_G6,
        upper_bound(BOUND_G6, n, delta) if theorem_ok else None,
        theorem_ok and scan.class_girth6,
    )
    push(
        BOUND_C4C5,
        upper_bound(BOUND_C4C5, n, delta) if theorem_ok else None,
        theorem_ok and scan.class_c4c5free,
    )
    push(
        BOUND_G6_MAX,
        upper_bound(BOUND_G6_MAX, n, delta, Delta) if theorem_ok else None,
        theorem_ok and scan.class_girth6,
    )
    push(
        BOUND_C4C5_MAX,
        upper_bound(BOUND_C4C5_MAX, n, delta, Delta) if theorem_ok else None,
        theorem_ok and scan.class_c4c5free,
    )

    family = None
    ell = None
    if chain_params is not None:
        family_delta, ell = chain_params
        if family_delta != delta:
            raise InvalidArgument(
                f"chain_params delta {family_delta} does not match graph delta {delta}"
            )
        family = f"chain(delta={delta})"
        push(BOUND_LOWER, sharpness_lower(n, delta), True)
    else:
        push(BOUND_LOWER, None, False)

    return BoundReport(
        n=n,
        delta=delta,
        max_degree=Delta,
        girth_class=scan.class_girth6,
        c4c5_class=scan.class_c4c5free,
        ex_total=profile.ex_total,
        avec=avec,
        bounds=tuple(entries),
        violations=tuple(violations),
        family=family,
        ell=ell,
        notes=(_CONSTANT_NOTE,),
    )


def _num_json(x):
    if x is None:
        return None
    if isinstance(x, Fraction):
        return float(x)
    return x


def report_json(report: BoundReport) -> dict:
    """JSON form of a report; avec is the unreduced pair (EX(G), n)."""
    return {
        "n": report.n,
        "delta": report.delta,
        "max_degree": report.max_degree,
        "girth_class": report.girth_class,
        "c4c5_class": report.c4c5_class,
        "avec": {"num": report.ex_total, "den": report.n},
        "bounds": [
            {
                "name": b.name,
                "value": _num_json(b.value),
                "applicable": b.applicable,
                "slack": _num_json(b.slack),
            }
            for b in report.bounds
        ],
        "violations": list(report.violations),
        "family": report.family,
        "ell": report.ell,
        "notes": list(report.notes),
    }


CSV_HEADER = "n,delta,max_degree,ell,avec_num,avec_den,lower_T32,girth6_T31,slack_upper,slack_lower,pass"


def report_csv_row(report: BoundReport) -> str:
    by_name = {b.name: b for b in report.bounds}
    lower = by_name[BOUND_LOWER]
    upper = by_name[BOUND_G6]

    def fmt(x):
        return "" if x is None else repr(float(x))

    cells = [
        str(report.n),
        str(report.delta),
        str(report.max_degree),
        "" if report.ell is None else str(report.ell),
        str(report.ex_total),
        str(report.n),
        fmt(lower.value),
        fmt(upper.value),
        fmt(upper.slack),
        fmt(lower.slack),
        "true" if not report.violations else "false",
    ]
    return ",".join(cells)
