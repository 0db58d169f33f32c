"""P-tableaux of a natural unit interval order and their inversion statistic."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .dyck import UnitIntervalPoset
from .partitions import Partition
from .qpoly import QPoly, from_powers

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PTableau:
    """A filling stored row by row; equality and hashing use the rows only."""

    rows: Rows
    poset: Optional[UnitIntervalPoset] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def a(self, i: int, j: int) -> int:
        """Entry in row i, column j (1-indexed)."""
        return self.rows[i - 1][j - 1]

    def has(self, i: int, j: int) -> bool:
        return 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1])

    def column(self, j: int) -> list[int]:
        return [r[j - 1] for r in self.rows if len(r) >= j]

    @property
    def inv(self) -> int:
        return inversions(self, self.poset)

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], poset=None) -> "PTableau":
        height = len(columns[0]) if columns else 0
        rows = []
        for i in range(height):
            rows.append(tuple(col[i] for col in columns if len(col) > i))
        return cls(tuple(rows), poset)


def is_valid_ptableau(rows, P: UnitIntervalPoset) -> bool:
    """Each element once, rows increase in P, no entry precedes the one above it."""
    rows = rows.rows if isinstance(rows, PTableau) else rows
    lengths = [len(r) for r in rows]
    if any(x <= 0 for x in lengths) or any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    entries = [x for r in rows for x in r]
    if sorted(entries) != list(range(1, P.n + 1)):
        return False
    for r in rows:
        for x, y in zip(r, r[1:]):
            if not P.precedes(x, y):
                return False
    for upper, lower in zip(rows, rows[1:]):
        for x, y in zip(upper, lower):
            if P.precedes(y, x):
                return False
    return True


def inversions(T, P: UnitIntervalPoset) -> int:
    """Incomparable pairs (i, j), i > j, with i in a strictly higher row than j."""
    rows = T.rows if isinstance(T, PTableau) else T
    row_of = {x: r for r, row in enumerate(rows) for x in row}
    count = 0
    for i, ri in row_of.items():
        for j, rj in row_of.items():
            if i > j and ri < rj and not P.comparable(i, j):
                count += 1
    return count


class _Kernel:
    """Bitmask tables shared by the enumerator and the polynomial DP."""

    def __init__(self, P: UnitIntervalPoset):
        n = P.n
        self.n = n
        self.above = P.above
        self.below = P.below
        self.full = sum(1 << x for x in range(1, n + 1))
        # larger incomparable elements of x, used to count inversions
        self.inc_greater = [0] * (n + 1)
        for x in range(1, n + 1):
            for y in range(x + 1, n + 1):
                if not P.comparable(x, y):
                    self.inc_greater[x] |= 1 << y

        self._chains: dict[int, list[tuple[tuple[int, ...], int]]] = {}

    def chains(self, length: int) -> list[tuple[tuple[int, ...], int]]:
        """All chains of the given length with their bitmasks, in lex order."""
        if length not in self._chains:
            out = []

            def rec(acc: tuple[int, ...], mask: int, cand: int):
                if len(acc) == length:
                    out.append((acc, mask))
                    return
                while cand:
                    low = cand & -cand
                    x = low.bit_length() - 1
                    cand ^= low
                    rec(acc + (x,), mask | low, self.above[x])

            rec((), 0, self.full)
            self._chains[length] = out
        return self._chains[length]

    def rows(self, unused: int, length: int, prev: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], int]]:
        """(row, mask) for chains inside ``unused`` that may sit under ``prev``, in lex order."""
        below = self.below
        blocked = [below[p] for p in prev[:length]]
        for row, mask in self.chains(length):
            if mask & ~unused:
                continue
            if any(b >> x & 1 for b, x in zip(blocked, row)):
                continue
            yield row, mask


@lru_cache(maxsize=256)
def _kernel(P: UnitIntervalPoset) -> _Kernel:
    return _Kernel(P)


def enumerate_ptableaux(P: UnitIntervalPoset, shape: Iterable[int]) -> list[PTableau]:
    """All P-tableaux of the given shape, in row-major lexicographic order."""
    return list(iter_ptableaux(P, shape))


def iter_ptableaux(P: UnitIntervalPoset, shape: Iterable[int]) -> Iterator[PTableau]:
    shape = Partition(shape)
    if shape.size != P.n:
        raise ValueError(f"shape {shape} has size {shape.size}, poset has {P.n} elements")
    K = _kernel(P)

    def rec(r: int, unused: int, prev: tuple[int, ...], acc: list):
        if r == len(shape):
            yield PTableau(tuple(acc), P)
            return
        for row, mask in K.rows(unused, shape[r], prev):
            acc.append(row)
            yield from rec(r + 1, unused & ~mask, row, acc)
            acc.pop()

    yield from rec(0, K.full, (), [])


def b_poly(P: UnitIntervalPoset, shape) -> QPoly:
    """B_shape(q): sum of q^inv over P-tableaux of the shape.

    ``shape`` of None (an invalid exponent shape) gives 0.
    """
    if shape is None:
        return QPoly()
    shape = Partition(shape)
    if shape.size != P.n:
        raise ValueError(f"shape {shape} has size {shape.size}, poset has {P.n} elements")
    if shape and shape[0] > P.bounce.bounce_number:
        return QPoly()
    return _b_poly_cached(P, tuple(shape))


# Coefficient vectors are packed into one integer, _SLOT bits per power of q,
# so that summing over branches is a single big-integer addition. Counts stay
# far below 2**_SLOT at the sizes this module is used for.
_SLOT = 64


def _unpack(packed: int) -> QPoly:
    mask = (1 << _SLOT) - 1
    coeffs = []
    while packed:
        coeffs.append(packed & mask)
        packed >>= _SLOT
    return QPoly(coeffs)


@lru_cache(maxsize=65536)
def _b_poly_cached(P: UnitIntervalPoset, shape: tuple[int, ...]) -> QPoly:
    K = _kernel(P)
    inc_greater = K.inc_greater
    nrows = len(shape)
    # row r only sees the first shape[r] entries of the row above
    widths = shape[1:] + (0,)

    @lru_cache(maxsize=None)
    def rec(r: int, unused: int, prev: tuple[int, ...]) -> int:
        if r == nrows:
            return 1
        used = K.full & ~unused
        total = 0
        for row, mask in K.rows(unused, shape[r], prev):
            shift = 0
            for x in row:
                shift += bin(used & inc_greater[x]).count("1")
            total += rec(r + 1, unused & ~mask, row[: widths[r]]) << (_SLOT * shift)
        return total

    return _unpack(rec(0, K.full, ()))


def b_poly_by_enumeration(P: UnitIntervalPoset, shape) -> QPoly:
    """Same polynomial as ``b_poly`` computed from the explicit tableau list."""
    if shape is None:
        return QPoly()
    return from_powers(inversions(T, P) for T in iter_ptableaux(P, shape))
