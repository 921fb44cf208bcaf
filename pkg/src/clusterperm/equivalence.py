"""Strong c-Wilf equivalence: sufficient conditions and ground-truth checks.

Two collections are strongly c-Wilf equivalent when the full distribution of
consecutive-occurrence counts agrees for every length.  Three tools decide
this at increasing cost:

* check_theorem13: a structural sufficient condition on a pattern bijection
  (equal lengths, equal realized overlap lengths for every ordered pair, and
  equal boundary entry sets at every realized overlap);
* graphs_isomorphic: a label-preserving isomorphism of overlap graphs, also
  sufficient since the graph determines the cluster recurrence;
* verify_strong_equivalence: coefficientwise equality of the avoidance
  generating functions to a finite order (the definition, truncated).

The module also provides the separated pattern families (whose members are
pairwise equivalent by construction) and the full classification of S_5
orbits under reverse and complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _it_permutations

from .clusters import cluster_counts_single_pattern
from .graph import (
    OverlapGraph,
    PatternCollection,
    build_graph,
    overlap_lengths,
)
from .perms import (
    DomainError,
    Perm,
    all_permutations,
    check_permutation,
    format_perm,
    occurrences,
    symmetry_orbit,
)
from .series import avoidance_gf


def _patterns_of(collection) -> tuple[Perm, ...]:
    """Normalize a PatternCollection or plain pattern sequence.

    The structural sufficient condition is well defined for any set of
    distinct patterns, so unlike the cluster recurrence it does not require
    the collection to be reduced.
    """
    if isinstance(collection, PatternCollection):
        return collection.patterns
    pats = tuple(check_permutation(p) for p in collection)
    if len(set(pats)) != len(pats):
        raise DomainError("duplicate pattern in collection")
    return pats


@dataclass(frozen=True)
class PatternBijection:
    pairs: tuple[tuple[Perm, Perm], ...]

    def __post_init__(self):
        firsts = [a for a, _ in self.pairs]
        seconds = [b for _, b in self.pairs]
        if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
            raise DomainError("mapping is not a bijection")

    def check_domains(self, pi1, pi2):
        if set(a for a, _ in self.pairs) != set(_patterns_of(pi1)) or set(
            b for _, b in self.pairs
        ) != set(_patterns_of(pi2)):
            raise DomainError("bijection does not match the two collections")

    def apply(self, pattern: Perm) -> Perm:
        for a, b in self.pairs:
            if a == pattern:
                return b
        raise DomainError(f"{pattern} not in bijection domain")


@dataclass(frozen=True)
class Theorem13Report:
    ok: bool
    lengths_ok: bool
    linkages_ok: bool
    overlap_sets_ok: bool
    failures: tuple[str, ...]

    def __bool__(self):
        return self.ok


def check_theorem13(pi1, pi2, phi: PatternBijection) -> Theorem13Report:
    """Sufficient condition for strong c-Wilf equivalence via a bijection.

    Accepts PatternCollections or plain sequences of patterns; note the
    condition only implies equivalence for reduced collections.
    """
    phi.check_domains(pi1, pi2)
    pats1 = _patterns_of(pi1)
    failures = []
    lengths_ok = True
    for pi in pats1:
        if len(pi) != len(phi.apply(pi)):
            lengths_ok = False
            failures.append(f"length mismatch: {pi} vs {phi.apply(pi)}")
    linkages_ok = True
    overlap_sets_ok = True
    if lengths_ok:
        for pi in pats1:
            for pip in pats1:
                ks1 = overlap_lengths(pi, pip)
                ks2 = overlap_lengths(phi.apply(pi), phi.apply(pip))
                if ks1 != ks2:
                    linkages_ok = False
                    failures.append(
                        f"overlap lengths differ for ({pi},{pip}): {ks1} vs {ks2}"
                    )
                    continue
                for k in ks1:
                    l = len(pi)
                    fp, fpp = phi.apply(pi), phi.apply(pip)
                    if set(pi[l - k :]) != set(fp[l - k :]):
                        overlap_sets_ok = False
                        failures.append(
                            f"final {k}-set differs: {pi} vs {fp}"
                        )
                    if set(pip[:k]) != set(fpp[:k]):
                        overlap_sets_ok = False
                        failures.append(
                            f"initial {k}-set differs: {pip} vs {fpp}"
                        )
    ok = lengths_ok and linkages_ok and overlap_sets_ok
    return Theorem13Report(ok, lengths_ok, linkages_ok, overlap_sets_ok, tuple(failures))


def any_theorem13_bijection(pi1, pi2) -> PatternBijection | None:
    """First bijection passing check_theorem13, in deterministic order."""
    pats1, pats2 = _patterns_of(pi1), _patterns_of(pi2)
    if len(pats1) != len(pats2):
        return None
    a = sorted(pats1)
    for perm in _it_permutations(sorted(pats2)):
        phi = PatternBijection(tuple(zip(a, perm)))
        if check_theorem13(pats1, pats2, phi):
            return phi
    return None


def check_monotone_corollary(pi1, pi2, phi: PatternBijection) -> Theorem13Report:
    """Weaker sufficient condition for two monotone collections: the bijection
    must preserve lengths, overlap lengths, and for every realized k-overlap
    only the maximum of the final k entries (the initial k entries of a
    monotone pattern's overlap are forced to be {1..k})."""
    phi.check_domains(pi1, pi2)
    pats1 = _patterns_of(pi1)
    failures = []
    lengths_ok = True
    for pi in pats1:
        if len(pi) != len(phi.apply(pi)):
            lengths_ok = False
            failures.append(f"length mismatch: {pi} vs {phi.apply(pi)}")
    linkages_ok = True
    maxima_ok = True
    if lengths_ok:
        for pi in pats1:
            for pip in pats1:
                ks1 = overlap_lengths(pi, pip)
                ks2 = overlap_lengths(phi.apply(pi), phi.apply(pip))
                if ks1 != ks2:
                    linkages_ok = False
                    failures.append(
                        f"overlap lengths differ for ({pi},{pip}): {ks1} vs {ks2}"
                    )
                    continue
                for k in ks1:
                    l = len(pi)
                    fp = phi.apply(pi)
                    if max(pi[l - k :]) != max(fp[l - k :]):
                        maxima_ok = False
                        failures.append(
                            f"final {k}-set maximum differs: {pi} vs {fp}"
                        )
    ok = lengths_ok and linkages_ok and maxima_ok
    return Theorem13Report(ok, lengths_ok, linkages_ok, maxima_ok, tuple(failures))


def any_monotone_corollary_bijection(pi1, pi2) -> PatternBijection | None:
    """First bijection passing check_monotone_corollary, deterministic order."""
    pats1, pats2 = _patterns_of(pi1), _patterns_of(pi2)
    if len(pats1) != len(pats2):
        return None
    a = sorted(pats1)
    for perm in _it_permutations(sorted(pats2)):
        phi = PatternBijection(tuple(zip(a, perm)))
        if check_monotone_corollary(pats1, pats2, phi):
            return phi
    return None


def graphs_isomorphic(g1: OverlapGraph, g2: OverlapGraph):
    """Vertex bijection inducing a label-preserving edge bijection, with the
    distinguished vertex fixed; None when no such bijection exists."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None

    def edge_counter(g, mapping=None):
        items = {}
        for e in g.edges:
            s, t = e.source, e.target
            if mapping is not None:
                s, t = mapping[s], mapping[t]
            key = (s, t, e.label)
            items[key] = items.get(key, 0) + 1
        return items

    target = edge_counter(g2)
    rest1 = [v for v in g1.vertices if v != (1,)]
    rest2 = [v for v in g2.vertices if v != (1,)]
    for image in _it_permutations(rest2):
        mapping = {(1,): (1,)}
        mapping.update(dict(zip(rest1, image)))
        # the images must be consistent with vertex lengths (edge labels fix
        # the boundary set sizes)
        if any(len(v) != len(mapping[v]) for v in rest1):
            continue
        if edge_counter(g1, mapping) == target:
            return mapping
    return None


def verify_strong_equivalence(
    pi1: PatternCollection, pi2: PatternCollection, order: int
) -> bool:
    """Definitional check to finite order: equality of avoidance GFs."""
    return avoidance_gf(pi1, order).eq_through(avoidance_gf(pi2, order))


# ---------------------------------------------------------------------------
# Separated families
# ---------------------------------------------------------------------------


def separation_property(alpha, beta) -> bool:
    a = check_permutation(alpha)
    b = check_permutation(beta)
    k, kp = len(a), len(b)
    ext_a = a + (k + 1,)
    ext_b = (kp + 1,) + b
    return not occurrences(ext_a, b) and not occurrences(ext_b, a)


def separated_set(alpha, beta, l: int) -> list[Perm]:
    """All permutations of length k+l+k' with prefix alpha on the smallest
    values, suffix beta on the middle values, and the top l values free."""
    a = check_permutation(alpha)
    b = check_permutation(beta)
    if l < 1:
        raise DomainError("need l >= 1")
    k, kp = len(a), len(b)
    suffix = tuple(x + k for x in b)
    top = range(k + kp + 1, k + kp + l + 1)
    out = [a + mid + suffix for mid in _it_permutations(top)]
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Classification of S_5
# ---------------------------------------------------------------------------


def _self_overlap_profile(p: Perm) -> tuple[int, ...]:
    return tuple(k for k in overlap_lengths(p, p) if k >= 2)


def classify_s5(n_max: int = 13, q_max: int = 3) -> dict:
    """Orbits of S_5 under reverse and complement, bucketed by self-overlap
    profile, with strong c-Wilf equivalence classes and the cluster statistics
    separating inequivalent pairs."""
    orbits = {}
    for p in all_permutations(5):
        orb = symmetry_orbit(p)
        rep = min(orb)
        orbits[rep] = sorted(orb)
    reps = sorted(orbits)

    buckets: dict[str, list[Perm]] = {}
    for rep in reps:
        prof = _self_overlap_profile(rep)
        key = ",".join(map(str, prof)) if prof else "none"
        buckets.setdefault(key, []).append(rep)

    totals = {
        rep: cluster_counts_single_pattern(rep, n_max, q_max).totals
        for rep in reps
    }

    def positive(r1: Perm, r2: Perm) -> bool:
        c1 = PatternCollection((r1,))
        for member in orbits[r2]:
            c2 = PatternCollection((member,))
            if any_theorem13_bijection(c1, c2) is not None:
                return True
        return False

    def separating(r1: Perm, r2: Perm):
        for q in range(1, q_max + 1):
            for n in range(1, n_max + 1):
                a = totals[r1].get((n, q), 0)
                b = totals[r2].get((n, q), 0)
                if a != b:
                    return (n, q, a, b)
        return None

    classes: dict[str, list[list[Perm]]] = {}
    separations = []
    undecided = []
    for key, members in buckets.items():
        groups: list[list[Perm]] = []
        for rep in members:
            placed = False
            for grp in groups:
                if positive(grp[0], rep):
                    grp.append(rep)
                    placed = True
                    break
            if not placed:
                groups.append([rep])
        classes[key] = groups
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                for r1 in groups[i]:
                    for r2 in groups[j]:
                        sep = separating(r1, r2)
                        if sep is None:
                            undecided.append((r1, r2))
                        else:
                            n, q, a, b = sep
                            separations.append(
                                {
                                    "a": format_perm(r1),
                                    "b": format_perm(r2),
                                    "n": n,
                                    "q": q,
                                    "a_count": str(a),
                                    "b_count": str(b),
                                }
                            )
    return {
        "orbit_count": len(reps),
        "orbits": [
            {
                "representative": format_perm(rep),
                "size": len(orbits[rep]),
                "members": [format_perm(m) for m in orbits[rep]],
            }
            for rep in reps
        ],
        "buckets": {
            key: [format_perm(r) for r in members]
            for key, members in sorted(buckets.items())
        },
        "classes": {
            key: [[format_perm(r) for r in grp] for grp in groups]
            for key, groups in sorted(classes.items())
        },
        "separations": separations,
        "undecided": [
            (format_perm(a), format_perm(b)) for a, b in undecided
        ],
    }
