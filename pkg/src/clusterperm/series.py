"""Truncated bivariate exponential generating functions, exact arithmetic.

A BiSeries represents sum c_{n,q} x^n t^q with rational coefficients and an
explicit truncation order: coefficients of x^n are trusted only for
n <= order.  Binary operations take the minimum of the operand orders, so
precision loss is always visible in the result's order.

The cluster-method identities live here: Pi_cl(x,t) assembled from a cluster
table, the substitution t -> t + delta, series reciprocal, and the avoidance
generating function Pi(x,t) = 1/(1 - Pi_cl(x, t-1)) whose coefficients give
alpha_{n,q} = n! c_{n,q}, the number of permutations of length n with exactly
q consecutive occurrences of patterns from the collection.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from . import kernels
from .clusters import ClusterTable, cluster_counts
from .graph import PatternCollection
from .perms import DomainError


class BiSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise DomainError("truncation order must be nonnegative")
        self.order = order
        self.coeffs: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (n, q), c in coeffs.items():
                c = Fraction(c)
                if c != 0 and n <= order:
                    self.coeffs[(n, q)] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "BiSeries":
        return cls(order, {(0, 0): 1})

    # -- accessors ---------------------------------------------------------

    def coeff(self, n: int, q: int) -> Fraction:
        return self.coeffs.get((n, q), Fraction(0))

    def eq_through(self, other: "BiSeries", order: int | None = None) -> bool:
        top = min(self.order, other.order)
        if order is not None:
            top = min(top, order)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(
            self.coeff(n, q) == other.coeff(n, q) for n, q in keys if n <= top
        )

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"BiSeries(order={self.order}, terms={len(self.coeffs)})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "BiSeries") -> "BiSeries":
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BiSeries(order, out)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def scale(self, factor) -> "BiSeries":
        f = Fraction(factor)
        return BiSeries(self.order, {k: c * f for k, c in self.coeffs.items()})

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        order = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (n1, q1), c1 in self.coeffs.items():
            if n1 > order:
                continue
            for (n2, q2), c2 in other.coeffs.items():
                n = n1 + n2
                if n > order:
                    continue
                key = (n, q1 + q2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiSeries(order, out)

    def truncated(self, order: int) -> "BiSeries":
        return BiSeries(min(order, self.order), self.coeffs)

    # -- calculus and substitutions -----------------------------------------

    def dx(self, times: int = 1) -> "BiSeries":
        s = self
        for _ in range(times):
            s = BiSeries(
                s.order - 1,
                {(n - 1, q): n * c for (n, q), c in s.coeffs.items() if n >= 1},
            )
        return s

    def mul_xpow(self, b: int) -> "BiSeries":
        """Multiply by x^b / b!."""
        if b < 0:
            raise DomainError("monomial degree must be nonnegative")
        inv = Fraction(1, factorial(b))
        return BiSeries(
            self.order + b,
            {(n + b, q): c * inv for (n, q), c in self.coeffs.items()},
        )

    def mul_monomial(self, e: int) -> "BiSeries":
        """Multiply by the plain monomial x^e."""
        if e < 0:
            raise DomainError("monomial degree must be nonnegative")
        return BiSeries(
            self.order + e,
            {(n + e, q): c for (n, q), c in self.coeffs.items()},
        )

    def mul_tpow(self, p: int) -> "BiSeries":
        if p < 0:
            raise DomainError("t power must be nonnegative")
        return BiSeries(
            self.order, {(n, q + p): c for (n, q), c in self.coeffs.items()}
        )

    def shift_t(self, delta: int) -> "BiSeries":
        """Substitute t -> t + delta, re-expanding each x^n slice exactly."""
        out: dict[tuple[int, int], Fraction] = {}
        for (n, big_q), c in self.coeffs.items():
            for q in range(big_q + 1):
                term = c * comb(big_q, q) * delta ** (big_q - q)
                if term:
                    key = (n, q)
                    out[key] = out.get(key, Fraction(0)) + term
        return BiSeries(self.order, out)

    def subs_t(self, value) -> dict[int, Fraction]:
        """Evaluate at a numeric t; returns the univariate slice map n -> c."""
        v = Fraction(value)
        out: dict[int, Fraction] = {}
        for (n, q), c in self.coeffs.items():
            out[n] = out.get(n, Fraction(0)) + c * v**q
        return {n: c for n, c in out.items() if c != 0}

    def reciprocal(self) -> "BiSeries":
        """Inverse series in x; requires constant coefficient exactly 1."""
        if self.coeff(0, 0) != 1 or any(
            n == 0 and q != 0 and c != 0 for (n, q), c in self.coeffs.items()
        ):
            raise DomainError("reciprocal requires constant term 1")
        # slice view: a[n] is the t-polynomial coefficient of x^n
        a: dict[int, dict[int, Fraction]] = {}
        for (n, q), c in self.coeffs.items():
            a.setdefault(n, {})[q] = c
        r: dict[int, dict[int, Fraction]] = {0: {0: Fraction(1)}}
        for n in range(1, self.order + 1):
            acc: dict[int, Fraction] = {}
            for m in range(1, n + 1):
                am = a.get(m)
                if not am:
                    continue
                rn = r.get(n - m)
                if not rn:
                    continue
                for q1, c1 in am.items():
                    for q2, c2 in rn.items():
                        q = q1 + q2
                        acc[q] = acc.get(q, Fraction(0)) - c1 * c2
            r[n] = {q: c for q, c in acc.items() if c != 0}
        out = {
            (n, q): c for n, poly in r.items() for q, c in poly.items() if c != 0
        }
        return BiSeries(self.order, out)


# ---------------------------------------------------------------------------
# Cluster-method identities
# ---------------------------------------------------------------------------


def cluster_gf(table: ClusterTable, order: int) -> BiSeries:
    """Pi_cl(x,t): EGF of the cluster counts, including the fictitious
    0-cluster term x."""
    if table.n_max < order:
        raise DomainError(
            f"table filled to n={table.n_max}, need n={order}"
        )
    coeffs = {
        (n, q): Fraction(c, factorial(n))
        for (n, q), c in table.totals.items()
        if n <= order
    }
    return BiSeries(order, coeffs)


def avoidance_gf(
    collection: PatternCollection, order: int, table: ClusterTable | None = None
) -> BiSeries:
    """Pi(x,t) = 1/(1 - Pi_cl(x, t-1)), truncated at x^order."""
    if table is None:
        table = cluster_counts(collection, order, order)
    pcl = cluster_gf(table, order)
    return (BiSeries.one(order) - pcl.shift_t(-1)).reciprocal()


def alpha_counts(series: BiSeries) -> dict[tuple[int, int], int]:
    """alpha_{n,q} = n! c_{n,q}; asserts integrality and nonnegativity."""
    out = {}
    for (n, q), c in series.coeffs.items():
        a = c * factorial(n)
        if a.denominator != 1 or a < 0:
            raise DomainError(f"coefficient at (n={n}, q={q}) is not a count: {a}")
        if a:
            out[(n, q)] = int(a)
    return out


def count_distribution_oracle(
    collection: PatternCollection, n: int
) -> dict[int, int]:
    """Definitional alpha_{n,q}: full scan of S_n."""
    if n < 1:
        raise DomainError("need n >= 1")
    return kernels.count_distribution(n, list(collection))


# ---------------------------------------------------------------------------
# TSV export
# ---------------------------------------------------------------------------


def alpha_to_tsv(series: BiSeries) -> str:
    counts = alpha_counts(series)
    lines = [f"{n}\t{q}\t{counts[(n, q)]}" for n, q in sorted(counts)]
    return "\n".join(lines) + "\n"


def avoiders_to_tsv(series: BiSeries) -> str:
    """Two-column form n, alpha_n for the avoider counts (q = 0 slice)."""
    counts = alpha_counts(series)
    lines = []
    for n in range(1, series.order + 1):
        lines.append(f"{n}\t{counts.get((n, 0), 0)}")
    return "\n".join(lines) + "\n"


def gf_to_tsv(series: BiSeries) -> str:
    """Exact coefficients as n, q, numerator/denominator rows."""
    lines = [
        f"{n}\t{q}\t{c.numerator}/{c.denominator}"
        for (n, q), c in sorted(series.coeffs.items())
    ]
    return "\n".join(lines) + "\n"


def gf_from_tsv(text: str, order: int) -> BiSeries:
    coeffs = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, q, frac = line.split("\t")
        coeffs[(int(n), int(q))] = Fraction(frac)
    return BiSeries(order, coeffs)
