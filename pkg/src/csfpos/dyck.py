"""Dyck paths, their natural unit interval orders, and bounce data.

A Dyck path on an n x n board is stored as ``d = (d_1, ..., d_{n-1})`` with
``i <= d_i <= n`` weakly increasing. It defines the poset on [n] where
``i < j`` in the order exactly when ``j > d_i``. Vertices are 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .partitions import Partition, conjugate


class InvalidDyckPath(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    n: int
    d: tuple[int, ...]

    def __post_init__(self):
        n, d = self.n, tuple(self.d)
        object.__setattr__(self, "d", d)
        if n < 1:
            raise InvalidDyckPath("board size must be at least 1")
        if len(d) != n - 1:
            raise InvalidDyckPath(f"expected {n - 1} entries for n={n}, got {len(d)}")
        for i, di in enumerate(d, start=1):
            if not i <= di <= n:
                raise InvalidDyckPath(f"d_{i}={di} outside [{i}, {n}]")
        if any(d[i] > d[i + 1] for i in range(len(d) - 1)):
            raise InvalidDyckPath(f"sequence {d} is not weakly increasing")

    @classmethod
    def of(cls, d: Iterable[int], n: Optional[int] = None) -> "DyckPath":
        """Build from d_1..d_{n-1}; with explicit n, a trailing d_n = n is also accepted."""
        d = tuple(int(x) for x in d)
        if n is None:
            return cls(len(d) + 1, d)
        if len(d) == n and d and d[-1] == n:
            d = d[:-1]
        return cls(n, d)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "DyckPath":
        text = text.strip().strip("()")
        try:
            d = [int(x) for x in text.replace(" ", ",").split(",") if x]
        except ValueError:
            raise InvalidDyckPath(f"malformed Dyck path {text!r}") from None
        return cls.of(d, n)

    def entry(self, i: int) -> int:
        """d_i with the convention d_n = n."""
        return self.d[i - 1] if i < self.n else self.n

    def __str__(self):
        return ",".join(map(str, self.d)) if self.d else "()"


@dataclass(frozen=True)
class BounceData:
    m: tuple[int, ...]
    S1: tuple[int, ...] = ()
    S2: tuple[int, ...] = ()
    S3: tuple[int, ...] = ()

    @property
    def bounce_number(self) -> int:
        return len(self.m)

    @property
    def a(self) -> int:
        return len(self.S3)

    @property
    def b(self) -> int:
        return len(self.S2)

    @property
    def c(self) -> int:
        return len(self.S1)

    @property
    def k(self) -> int:
        return self.a + self.b

    def block_of(self, x: int) -> int:
        """Index (1-based) of the bounce block containing x."""
        lo = 0
        for idx, hi in enumerate(self.m, start=1):
            if lo < x <= hi:
                return idx
            lo = hi
        raise ValueError(x)


def bounce_data(path: DyckPath) -> BounceData:
    n = path.n
    m = [path.entry(1)]
    while m[-1] < n:
        m.append(path.entry(m[-1] + 1))
    if len(m) == 3:
        m0, m1, _ = m
        return BounceData(
            tuple(m),
            tuple(range(1, m0 + 1)),
            tuple(range(m0 + 1, m1 + 1)),
            tuple(range(m1 + 1, n + 1)),
        )
    return BounceData(tuple(m))


class UnitIntervalPoset:
    """The natural unit interval order P(d) on {1, ..., n}."""

    def __init__(self, path: DyckPath):
        self.path = path
        self.n = n = path.n
        # above[i]: bitmask of j with i < j in the order
        self.above = [0] * (n + 1)
        self.below = [0] * (n + 1)
        for i in range(1, n):
            for j in range(path.d[i - 1] + 1, n + 1):
                self.above[i] |= 1 << j
                self.below[j] |= 1 << i

    @classmethod
    def from_dyck(cls, d, n: Optional[int] = None) -> "UnitIntervalPoset":
        if not isinstance(d, DyckPath):
            d = DyckPath.of(d, n)
        return cls(d)

    def precedes(self, i: int, j: int) -> bool:
        return bool(self.above[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.precedes(i, j) or self.precedes(j, i)

    def relations(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1) if self.precedes(i, j)]

    @cached_property
    def bounce(self) -> BounceData:
        return bounce_data(self.path)

    def longest_chain(self) -> int:
        best = [0] * (self.n + 1)
        for j in range(1, self.n + 1):
            best[j] = 1 + max((best[i] for i in range(1, j) if self.precedes(i, j)), default=0)
        return max(best[1:], default=0)

    def __repr__(self):
        return f"UnitIntervalPoset(d={self.path.d}, n={self.n})"

    def __eq__(self, other):
        return isinstance(other, UnitIntervalPoset) and self.path == other.path

    def __hash__(self):
        return hash(self.path)


def poset_from_dyck(path: DyckPath) -> UnitIntervalPoset:
    return UnitIntervalPoset(path)


def is_transitive(P: UnitIntervalPoset) -> bool:
    n = P.n
    for i in range(1, n + 1):
        if P.precedes(i, i):
            return False
        for j in range(1, n + 1):
            if P.precedes(i, j):
                for k in range(1, n + 1):
                    if P.precedes(j, k) and not P.precedes(i, k):
                        return False
    return True


def contains_induced(P: UnitIntervalPoset, a: int, b: int) -> bool:
    """Whether P has an induced copy of an a-chain disjoint-union b-chain (a + b <= 4)."""
    n = P.n
    for chosen in combinations(range(1, n + 1), a + b):
        for first in combinations(chosen, a):
            second = tuple(x for x in chosen if x not in first)
            if _is_chain(P, first) and _is_chain(P, second) and all(
                not P.comparable(x, y) for x in first for y in second
            ):
                return True
    return False


def _is_chain(P, elems) -> bool:
    return all(P.comparable(x, y) for x, y in combinations(elems, 2))


@dataclass(frozen=True)
class IncompGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return sorted({j for e in self.edges if v in e for j in e if j != v})

    @classmethod
    def complete(cls, n: int) -> "IncompGraph":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))


def incomparability_graph(P: UnitIntervalPoset) -> IncompGraph:
    edges = frozenset(
        (i, j) for i, j in combinations(range(1, P.n + 1), 2) if not P.comparable(i, j)
    )
    return IncompGraph(P.n, edges)


def tau_from_dyck(path: DyckPath) -> Partition:
    """The diagram of cells above the path."""
    return conjugate(p for p in (path.n - di for di in path.d) if p > 0)


def dyck_from_tau(tau: Iterable[int], n: int) -> DyckPath:
    cols = list(conjugate(tau))
    cols += [0] * (n - 1 - len(cols))
    if len(cols) > n - 1:
        raise InvalidDyckPath(f"diagram {tuple(tau)} does not fit an {n}x{n} board")
    return DyckPath(n, tuple(n - c for c in cols))


def transpose_dyck(path: DyckPath) -> DyckPath:
    """The path whose diagram is the conjugate of this path's diagram."""
    tau = tau_from_dyck(path)
    return dyck_from_tau(conjugate(tau), path.n)


def enumerate_dyck_paths(n: int, bounce_filter: Optional[int] = None) -> Iterator[DyckPath]:
    """All Dyck paths on the n x n board in lexicographic order of d."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(i: int, lo: int, acc: list[int]):
        if i == n:
            yield DyckPath(n, tuple(acc))
            return
        for v in range(max(lo, i), n + 1):
            acc.append(v)
            yield from rec(i + 1, v, acc)
            acc.pop()

    for path in rec(1, 1, []):
        if bounce_filter is None or bounce_data(path).bounce_number == bounce_filter:
            yield path


def is_theorem41_class(path: DyckPath) -> bool:
    """d = (d_1, d_2, n-1, ..., n-1, n, ..., n) with bounce number 3."""
    n = path.n
    if bounce_data(path).bounce_number != 3:
        return False
    tail = path.d[2:]
    return all(x in (n - 1, n) for x in tail)


def is_corollary46_class(path: DyckPath) -> bool:
    """d = (d_1, n-2, ..., n-2, n-1, ..., n-1, n, ..., n) with bounce number 3."""
    n = path.n
    if bounce_data(path).bounce_number != 3:
        return False
    return all(x in (n - 2, n - 1, n) for x in path.d[1:])
