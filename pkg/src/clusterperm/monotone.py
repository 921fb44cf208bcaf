"""Monotone collections: simplified recurrence and linear ODE systems.

A collection is monotone when every realized k-overlap forces the overlapped
prefix of the right pattern to use only entries <= k.  For such collections
the refined cluster statistics collapse (the initial subword of a cluster is
literally the vertex permutation), the recurrence reduces to a single
binomial per edge,

    cl_{v,n,q} = sum_j C(n - m_j, l_j - m_j) cl_{v_j, n - l_j + k_j, q - 1},

and the vertex generating functions y_v(x,t) = sum cl_{v,n,q} x^n/n! t^q
satisfy a linear ODE system with monomial coefficients:

    d^m/dx^m y_v = t sum_j d^(m-m_j)/dx^(m-m_j) ( x^(l_j-m_j)/(l_j-m_j)!
                                                   d^(k_j)/dx^(k_j) y_{v_j} ),

where m_j is the maximal entry of the final k_j-subword of the edge pattern
and m is the per-vertex maximum of the m_j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .clusters import ClusterTable, binom
from .graph import OverlapGraph, PatternCollection, build_graph, overlap_lengths
from .perms import DomainError, Perm, format_perm, parse_perm
from .series import BiSeries


class MonotoneError(DomainError):
    pass


class MonotoneResult(NamedTuple):
    ok: bool
    witness: tuple[Perm, Perm, int] | None  # (pi, pi_prime, k) on failure

    def __bool__(self):
        return self.ok


def is_monotone(collection: PatternCollection) -> MonotoneResult:
    """Check the defining property on all ordered pairs, self-pairs included."""
    for pi in collection:
        for pi_prime in collection:
            for k in overlap_lengths(pi, pi_prime):
                if max(pi_prime[:k]) > k:
                    return MonotoneResult(False, (pi, pi_prime, k))
    return MonotoneResult(True, None)


class EdgeData(NamedTuple):
    l: int  # pattern length
    k: int  # target vertex length
    m: int  # maximal entry of the final subword
    target: Perm


def _require_monotone(collection: PatternCollection):
    res = is_monotone(collection)
    if not res:
        pi, pp, k = res.witness
        raise MonotoneError(
            f"collection is not monotone: patterns {pi} -> {pp} overlap at "
            f"k={k} with prefix entry {max(pp[:k])} > {k}"
        )


def monotone_recurrence_data(graph: OverlapGraph) -> dict[Perm, list[EdgeData]]:
    """Per-vertex (l_j, k_j, m_j, target) tuples for the simplified recurrence."""
    _require_monotone(graph.collection)
    data: dict[Perm, list[EdgeData]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        l = len(e.pattern)
        m = max(e.label.mu_f) if l > e.k + e.k_prime else l
        data[e.source].append(EdgeData(l, e.k_prime, m, e.target))
    for v in data:
        data[v].sort()
    return data


def _vertex_tables(
    collection: PatternCollection, n_max: int, q_max: int
) -> dict[tuple[Perm, int, int], int]:
    graph = build_graph(collection)
    data = monotone_recurrence_data(graph)
    memo: dict[tuple[Perm, int, int], int] = {}

    def cl(v: Perm, n: int, q: int) -> int:
        if n < 1:
            return 0
        if q == 0:
            return 1 if v == (1,) and n == 1 else 0
        key = (v, n, q)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for l, k, m, target in data[v]:
            coef = binom(n - m, l - m)
            if coef:
                total += coef * cl(target, n - l + k, q - 1)
        memo[key] = total
        return total

    out = {}
    for v in graph.vertices:
        for n in range(1, n_max + 1):
            for q in range(0, q_max + 1):
                c = cl(v, n, q)
                if c:
                    out[(v, n, q)] = c
    return out


def monotone_cluster_counts(
    collection: PatternCollection, n_max: int, q_max: int
) -> ClusterTable:
    """Totals cl_{n,q} via the simplified monotone recurrence."""
    _require_monotone(collection)
    if n_max < 1 or q_max < 1:
        raise DomainError("need n_max >= 1 and q_max >= 1")
    cells = _vertex_tables(collection, n_max, q_max)
    totals = {
        (n, q): c for (v, n, q), c in cells.items() if v == (1,)
    }
    return ClusterTable(collection, n_max, q_max, totals)


def monotone_vertex_series(
    collection: PatternCollection, order: int
) -> dict[Perm, BiSeries]:
    """The generating functions y_v(x,t), truncated at x^order."""
    cells = _vertex_tables(collection, order, order)
    by_vertex: dict[Perm, dict[tuple[int, int], Fraction]] = {}
    for (v, n, q), c in cells.items():
        by_vertex.setdefault(v, {})[(n, q)] = Fraction(c, factorial(n))
    graph = build_graph(collection)
    return {v: BiSeries(order, by_vertex.get(v, {})) for v in graph.vertices}


# ---------------------------------------------------------------------------
# ODE emission
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class OdeTerm:
    """The operator y -> d^a/dx^a ( x^b/b! * d^c/dx^c y ) applied to y_target."""

    a: int
    b: int
    c: int
    target: Perm

    def apply(self, series: BiSeries) -> BiSeries:
        return series.dx(self.c).mul_xpow(self.b).dx(self.a)


@dataclass(frozen=True)
class OdeEquation:
    vertex: Perm
    order: int  # LHS derivative order m_v
    terms: tuple[OdeTerm, ...]  # RHS, each carrying an overall factor t


@dataclass(frozen=True)
class OdeSystem:
    equations: tuple[OdeEquation, ...]
    # boundary[v][i] is the t-polynomial y_v^(i)(0,t) for i < m_v,
    # as a map q -> coefficient
    boundary: dict[Perm, tuple[dict[int, Fraction], ...]]


def emit_ode_system(collection: PatternCollection) -> OdeSystem:
    _require_monotone(collection)
    graph = build_graph(collection)
    data = monotone_recurrence_data(graph)
    equations = []
    orders = {}
    for v in graph.vertices:
        if not data[v]:
            raise DomainError(f"vertex {v} has no outgoing edges")
        m_v = max(d.m for d in data[v])
        orders[v] = m_v
        terms = tuple(
            sorted(OdeTerm(m_v - d.m, d.l - d.m, d.k, d.target) for d in data[v])
        )
        equations.append(OdeEquation(v, m_v, terms))
    series = monotone_vertex_series(collection, max(orders.values()))
    boundary = {}
    for v in graph.vertices:
        rows = []
        for i in range(orders[v]):
            poly = {
                q: series[v].coeff(i, q) * factorial(i)
                for q in range(i + 1)
                if series[v].coeff(i, q)
            }
            rows.append(poly)
        boundary[v] = tuple(rows)
    return OdeSystem(tuple(equations), boundary)


def emit_single_pattern_ode(pattern) -> OdeSystem:
    """One-equation specialization for a monotone single pattern."""
    collection = PatternCollection((tuple(pattern),))
    _require_monotone(collection)
    pat = collection.patterns[0]
    l = len(pat)
    from .perms import standardize

    ks = [
        k
        for k in range(1, l)
        if standardize(pat[l - k :]) == standardize(pat[:k])
    ]
    if not ks:
        raise DomainError(f"pattern {pat} has no self-overlap (length-1 expected)")
    ms = [max(pat[l - k :]) for k in ks]
    m = max(ms)
    terms = tuple(
        sorted(OdeTerm(m - mj, l - mj, kj, (1,)) for kj, mj in zip(ks, ms))
    )
    eq = OdeEquation((1,), m, terms)
    rows = [{} for _ in range(m)]
    if m >= 2:
        rows[1] = {0: Fraction(1)}  # y'(0,t) = 1
    return OdeSystem((eq,), {(1,): tuple(rows)})


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


class EquationCheck(NamedTuple):
    vertex: Perm
    ok: bool
    checked_order: int
    mismatch: tuple[int, int, Fraction, Fraction] | None  # (n, q, lhs, rhs)


class VerifyReport(NamedTuple):
    ok: bool
    equations: tuple[EquationCheck, ...]
    boundary_ok: bool

    def __bool__(self):
        return self.ok


def _first_mismatch(lhs: BiSeries, rhs: BiSeries, top: int):
    keys = sorted(
        {k for k in lhs.coeffs if k[0] <= top}
        | {k for k in rhs.coeffs if k[0] <= top}
    )
    for n, q in keys:
        if lhs.coeff(n, q) != rhs.coeff(n, q):
            return (n, q, lhs.coeff(n, q), rhs.coeff(n, q))
    return None


def verify_ode(
    system: OdeSystem, series: dict[Perm, BiSeries], order: int
) -> VerifyReport:
    """Check every equation (and the boundary data) against the series."""
    checks = []
    for eq in system.equations:
        y = series[eq.vertex]
        if y.order < order:
            raise DomainError(
                f"series for {eq.vertex} filled to {y.order}, need {order}"
            )
        lhs = y.dx(eq.order)
        rhs = BiSeries.zero(order)
        for term in eq.terms:
            rhs = rhs + term.apply(series[term.target])
        rhs = rhs.mul_tpow(1)
        top = min(lhs.order, rhs.order, order - eq.order)
        bad = _first_mismatch(lhs, rhs, top)
        checks.append(EquationCheck(eq.vertex, bad is None, top, bad))
    boundary_ok = True
    for v, rows in system.boundary.items():
        y = series[v]
        for i, poly in enumerate(rows):
            got = {
                q: y.coeff(i, q) * factorial(i)
                for q in range(order + 1)
                if y.coeff(i, q)
            }
            if got != {q: c for q, c in poly.items() if c}:
                boundary_ok = False
    ok = boundary_ok and all(c.ok for c in checks)
    return VerifyReport(ok, tuple(checks), boundary_ok)


@dataclass(frozen=True)
class OdePolyTerm:
    """coeff * t^t_power * x^pre_degree * d^a/dx^a ( x^b/b! d^c/dx^c y_target );
    general enough for hand-assembled single equations with polynomial
    coefficients."""

    coeff: Fraction
    t_power: int
    pre_degree: int
    a: int
    b: int
    c: int
    target: Perm

    def apply(self, series: BiSeries) -> BiSeries:
        s = series.dx(self.c).mul_xpow(self.b).dx(self.a)
        s = s.mul_monomial(self.pre_degree).mul_tpow(self.t_power)
        return s.scale(self.coeff)


def verify_poly_ode(
    terms: list[OdePolyTerm], series: dict[Perm, BiSeries], order: int
) -> tuple[bool, tuple[int, int, Fraction] | None, int]:
    """Check that the sum of the terms vanishes; returns (ok, first nonzero
    residual coefficient as (n, q, value) or None, order actually checked)."""
    acc = None
    for term in terms:
        s = term.apply(series[term.target])
        acc = s if acc is None else acc + s
    top = min(acc.order, order)
    for n, q in sorted(k for k in acc.coeffs if k[0] <= top):
        if acc.coeff(n, q) != 0:
            return False, (n, q, acc.coeff(n, q)), top
    return True, None, top


# ---------------------------------------------------------------------------
# Serialization and rendering
# ---------------------------------------------------------------------------


def _poly_to_json(poly: dict[int, Fraction]):
    return {str(q): f"{c.numerator}/{c.denominator}" for q, c in sorted(poly.items())}


def system_to_json(system: OdeSystem) -> str:
    doc = {
        "equations": [
            {
                "vertex": format_perm(eq.vertex),
                "order": eq.order,
                "terms": [
                    {"a": t.a, "b": t.b, "c": t.c, "target": format_perm(t.target)}
                    for t in eq.terms
                ],
                "boundary": [
                    _poly_to_json(p) for p in system.boundary.get(eq.vertex, ())
                ],
            }
            for eq in system.equations
        ]
    }
    return json.dumps(doc, indent=2) + "\n"


def system_from_json(text: str) -> OdeSystem:
    doc = json.loads(text)
    equations = []
    boundary = {}
    for item in doc["equations"]:
        v = parse_perm(item["vertex"])
        terms = tuple(
            OdeTerm(t["a"], t["b"], t["c"], parse_perm(t["target"]))
            for t in item["terms"]
        )
        equations.append(OdeEquation(v, item["order"], terms))
        boundary[v] = tuple(
            {int(q): Fraction(c) for q, c in row.items()}
            for row in item.get("boundary", [])
        )
    return OdeSystem(tuple(equations), boundary)


def _term_text(t: OdeTerm) -> str:
    inner = f"y_({''.join(map(str, t.target))})"
    if t.c:
        inner = f"{inner}^({t.c})"
    if t.b:
        inner = f"x^{t.b}/{t.b}! * {inner}"
    if t.a:
        inner = f"d^{t.a}/dx^{t.a}( {inner} )"
    return inner


def system_to_text(system: OdeSystem) -> str:
    lines = []
    for eq in system.equations:
        name = f"y_({''.join(map(str, eq.vertex))})"
        rhs = " + ".join(_term_text(t) for t in eq.terms)
        lines.append(f"{name}^({eq.order}) = t * ( {rhs} )")
    return "\n".join(lines) + "\n"
