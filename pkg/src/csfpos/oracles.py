"""Independent ground truth: brute-force colorings, basis converters, acyclic orientations.

Nothing here uses P-tableaux or inverse Kostka numbers, so agreement with the
expansions module is a genuine cross-check.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Optional

from .dyck import IncompGraph, UnitIntervalPoset, incomparability_graph
from .expansions import BasisError, SymExpansion, e_expansion, schur_expansion
from .partitions import Partition, kostka, partitions_of
from .qpoly import QPoly

DEFAULT_MAX_N = 9


class ResourceLimitError(RuntimeError):
    pass


class SymmetryError(AssertionError):
    pass


def max_n() -> int:
    """Brute-force size limit, overridable with the CSF_MAX_N environment variable."""
    raw = os.environ.get("CSF_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ResourceLimitError(f"CSF_MAX_N must be an integer, got {raw!r}") from None


def check_limit(n: int, limit: Optional[int] = None) -> None:
    limit = max_n() if limit is None else limit
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the brute-force limit {limit} (set CSF_MAX_N to raise it)")


# ---------------------------------------------------------------------------
# proper colorings


def _coloring_poly(G: IncompGraph, content: tuple[int, ...]) -> QPoly:
    """Sum of q^asc over proper colorings where color c+1 is used content[c] times."""
    n = G.n
    earlier = [[] for _ in range(n + 1)]
    for i, j in G.edges:
        earlier[j].append(i)
    colors = [0] * (n + 1)
    remaining = list(content)
    ncolors = len(content)
    counts: list[int] = []

    def rec(v: int, asc: int) -> None:
        if v > n:
            if asc >= len(counts):
                counts.extend([0] * (asc + 1 - len(counts)))
            counts[asc] += 1
            return
        nbr_colors = [colors[u] for u in earlier[v]]
        for c in range(1, ncolors + 1):
            if remaining[c - 1] == 0 or c in nbr_colors:
                continue
            remaining[c - 1] -= 1
            colors[v] = c
            rec(v + 1, asc + sum(1 for x in nbr_colors if x < c))
            remaining[c - 1] += 1
        colors[v] = 0

    rec(1, 0)
    return QPoly(counts)


def monomial_expansion_bruteforce(G: IncompGraph, limit: Optional[int] = None) -> SymExpansion:
    """X_G(x, q) in the monomial basis by enumerating colorings of each content.

    The coefficient of m_lam is computed for colors 1..len(lam) used lam_1, lam_2, ...
    times and again with the multiplicities reversed; the two must agree.
    """
    check_limit(G.n, limit)
    out = SymExpansion("m", G.n)
    for lam in partitions_of(G.n):
        forward = _coloring_poly(G, tuple(lam))
        backward = _coloring_poly(G, tuple(reversed(lam)))
        if forward != backward:
            raise SymmetryError(f"m{lam}: {forward} vs {backward} under reversed color assignment")
        out.add(lam, forward)
    return out


def count_proper_colorings(G: IncompGraph, t: int) -> int:
    """Number of proper colorings of G with colors 1..t, by direct product scan."""
    n = G.n
    return sum(
        1
        for kappa in product(range(t), repeat=n)
        if all(kappa[i - 1] != kappa[j - 1] for i, j in G.edges)
    )


def monomial_at_ones(lam: Partition, t: int) -> int:
    """m_lam(1, ..., 1, 0, ...) with t ones: the number of distinct monomials of type lam."""
    if len(lam) > t:
        return 0
    mult = Counter(lam)
    mult[0] = t - len(lam)
    out = factorial(t)
    for k in mult.values():
        out //= factorial(k)
    return out


def specialize_ones(X: SymExpansion, t: int) -> int:
    """Evaluate a monomial expansion at q = 1 and x_1 = ... = x_t = 1, x_i = 0 otherwise."""
    if X.basis != "m":
        raise BasisError("specialization needs the monomial basis")
    return sum(p(1) * monomial_at_ones(lam, t) for lam, p in X.terms.items())


# ---------------------------------------------------------------------------
# basis converters


@lru_cache(maxsize=None)
def _elementary_poly(k: int, nvars: int) -> dict[tuple[int, ...], int]:
    out = {}
    for subset in combinations(range(nvars), k):
        exp = [0] * nvars
        for i in subset:
            exp[i] = 1
        out[tuple(exp)] = 1
    return out


def _multiply(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


@lru_cache(maxsize=None)
def e_in_monomials(lam: tuple[int, ...]) -> dict[Partition, int]:
    """The m-expansion of e_lam, read off from the product of e_k in |lam| variables."""
    n = sum(lam)
    poly = {tuple([0] * n): 1}
    for k in lam:
        poly = _multiply(poly, _elementary_poly(k, n))
    out = {}
    for exp, c in poly.items():
        if all(exp[i] >= exp[i + 1] for i in range(n - 1)):
            out[Partition.from_parts(exp)] = c
    return out


def e_to_m(X: SymExpansion) -> SymExpansion:
    if X.basis != "e":
        raise BasisError(f"expected an elementary expansion, got basis {X.basis!r}")
    out = SymExpansion("m", X.n)
    for lam, coeff in X.terms.items():
        for nu, c in e_in_monomials(tuple(lam)).items():
            out.add(nu, coeff * c)
    return out


def s_to_m(X: SymExpansion) -> SymExpansion:
    if X.basis != "s":
        raise BasisError(f"expected a Schur expansion, got basis {X.basis!r}")
    out = SymExpansion("m", X.n)
    for lam, coeff in X.terms.items():
        for nu in partitions_of(X.n):
            k = kostka(lam, nu)
            if k:
                out.add(nu, coeff * k)
    return out


# ---------------------------------------------------------------------------
# acyclic orientations


def acyclic_orientation_polys(G: IncompGraph, limit: Optional[int] = None) -> dict[int, QPoly]:
    """Map j -> sum of q^asc over acyclic orientations with exactly j sinks.

    Edges are oriented one at a time; reachability bitmasks reject any choice
    that would close a cycle, so every leaf is an acyclic orientation.
    """
    check_limit(G.n, limit)
    n = G.n
    edges = sorted(G.edges)
    reach = [0] * (n + 1)  # reach[v]: vertices reachable from v by a nonempty path
    out_deg = [0] * (n + 1)
    tallies: dict[int, list[int]] = {}

    def orient(a: int, b: int) -> list[int]:
        saved = reach[:]
        gain = reach[b] | (1 << b)
        for x in range(1, n + 1):
            if x == a or reach[x] >> a & 1:
                reach[x] |= gain
        return saved

    def rec(idx: int, asc: int) -> None:
        nonlocal reach
        if idx == len(edges):
            sinks = sum(1 for v in range(1, n + 1) if out_deg[v] == 0)
            row = tallies.setdefault(sinks, [])
            if asc >= len(row):
                row.extend([0] * (asc + 1 - len(row)))
            row[asc] += 1
            return
        i, j = edges[idx]
        for a, b in ((i, j), (j, i)):
            if reach[b] >> a & 1:
                continue
            saved = orient(a, b)
            out_deg[a] += 1
            rec(idx + 1, asc + (a < b))
            out_deg[a] -= 1
            reach = saved

    rec(0, 0)
    return {j: QPoly(row) for j, row in sorted(tallies.items())}


def acyclic_orientation_poly(G: IncompGraph, j: int, limit: Optional[int] = None) -> QPoly:
    return acyclic_orientation_polys(G, limit).get(j, QPoly())


def acyclic_orientation_polys_naive(G: IncompGraph) -> dict[int, QPoly]:
    """Same statistic by scanning all 2^|E| orientations with a cycle test."""
    n = G.n
    edges = sorted(G.edges)
    tallies: dict[int, Counter] = {}
    for bits in range(1 << len(edges)):
        succ = [[] for _ in range(n + 1)]
        asc = 0
        for idx, (i, j) in enumerate(edges):
            if bits >> idx & 1:
                succ[j].append(i)
            else:
                succ[i].append(j)
                asc += 1
        if _has_cycle(succ, n):
            continue
        sinks = sum(1 for v in range(1, n + 1) if not succ[v])
        tallies.setdefault(sinks, Counter())[asc] += 1
    return {
        j: QPoly(c.get(p, 0) for p in range(max(c) + 1)) for j, c in sorted(tallies.items())
    }


def _has_cycle(succ: list[list[int]], n: int) -> bool:
    indeg = [0] * (n + 1)
    for v in range(1, n + 1):
        for w in succ[v]:
            indeg[w] += 1
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen < n


def sink_identity_discrepancy(P: UnitIntervalPoset, X: Optional[SymExpansion] = None):
    """First j where the e-coefficients of length j disagree with the orientation count, or None."""
    from .expansions import sum_by_length

    X = e_expansion(P) if X is None else X
    by_len = sum_by_length(X)
    orient = acyclic_orientation_polys(incomparability_graph(P))
    for j in sorted(set(by_len) | set(orient)):
        lhs, rhs = by_len.get(j, QPoly()), orient.get(j, QPoly())
        if lhs != rhs:
            return j, lhs, rhs
    return None


# ---------------------------------------------------------------------------
# cross validation


@dataclass
class CrossValidationReport:
    dyck: tuple[int, ...]
    n: int
    passed: bool
    stage: Optional[str] = None
    partition: Optional[Partition] = None
    expected: Optional[QPoly] = None
    got: Optional[QPoly] = None

    def to_dict(self) -> dict:
        out = {"dyck": list(self.dyck), "n": self.n, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out.update(
                stage=self.stage,
                partition=list(self.partition),
                expected=list(self.expected.coeffs),
                got=list(self.got.coeffs),
            )
        return out


def cross_validate(P: UnitIntervalPoset, limit: Optional[int] = None) -> CrossValidationReport:
    """Schur and elementary expansions, pushed to monomials, against brute-force colorings."""
    truth = monomial_expansion_bruteforce(incomparability_graph(P), limit)
    S = schur_expansion(P)
    for stage, candidate in (("schur", s_to_m(S)), ("elementary", e_to_m(e_expansion(P)))):
        diff = truth.first_difference(candidate)
        if diff is not None:
            lam, expected, got = diff
            return CrossValidationReport(P.path.d, P.n, False, stage, lam, expected, got)
    return CrossValidationReport(P.path.d, P.n, True)
