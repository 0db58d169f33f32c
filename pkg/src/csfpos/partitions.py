"""Integer partitions, Kostka numbers and special rim hook tabloids.

Cells of a Young diagram are ``(row, col)`` pairs, 1-indexed, English
convention (row 1 on top).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

Cell = tuple[int, int]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort and drop zeros; raises on negative parts."""
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def cells(self) -> list[Cell]:
        return [(i + 1, j + 1) for i, p in enumerate(self) for j in range(p)]

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def partitions_of(n: int, max_part: Optional[int] = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order (``(n)`` first)."""
    if max_part is None:
        max_part = n
    return [Partition(p) for p in _partitions(n, max_part)]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


_EXP_TOKEN = re.compile(r"(\d+)\^(\d+)")


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,3,3"`` or exponent notation such as ``"3^2 2^1 1^3"``.

    Exponent tokens may be separated by spaces, commas, or nothing at all
    (``"3^22^11^3"`` reads as 3^2 2^1 1^3 only when separated; unseparated
    multi-digit ambiguity is rejected). A zero multiplicity contributes
    nothing.
    """
    s = text.strip().strip("()")
    if not s:
        return Partition()
    if "^" in s:
        tokens = re.split(r"[\s,]+", s)
        parts: list[int] = []
        for tok in tokens:
            if not tok:
                continue
            m = _EXP_TOKEN.fullmatch(tok)
            if m:
                parts.extend([int(m.group(1))] * int(m.group(2)))
            elif tok.isdigit():
                parts.append(int(tok))
            else:
                raise ValueError(f"cannot parse partition token {tok!r} in {text!r}")
        return Partition.from_parts(parts)
    try:
        parts = [int(x) for x in re.split(r"[\s,]+", s) if x]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def hook_shape(threes: int, twos: int, n: int) -> Optional[Partition]:
    """The shape 3^threes 2^twos 1^(n - 3*threes - 2*twos), or None if invalid."""
    ones = n - 3 * threes - 2 * twos
    if threes < 0 or twos < 0 or ones < 0:
        return None
    return Partition([3] * threes + [2] * twos + [1] * ones)


# ---------------------------------------------------------------------------
# Kostka numbers


def _horizontal_strips(inner: tuple[int, ...], outer: tuple[int, ...], k: int):
    """Shapes nu with inner <= nu <= outer and nu/inner a horizontal k-strip."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))

    def rec(i, remaining, acc):
        if i == rows:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        # row i may grow up to the outer bound and, for a horizontal strip,
        # no further than the previous row of inner
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for new in range(inner[i], min(cap, inner[i] + remaining) + 1):
            yield from rec(i + 1, remaining - (new - inner[i]), acc + [new])

    yield from rec(0, k, [])


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    level: dict[tuple[int, ...], int] = {(): 1}
    for k in content:
        nxt: dict[tuple[int, ...], int] = {}
        for inner, cnt in level.items():
            for nu in _horizontal_strips(inner, shape, k):
                nxt[nu] = nxt.get(nu, 0) + cnt
        level = nxt
    return level.get(tuple(shape), 0)


def enumerate_ssyt_count(lam: Iterable[int], mu: Iterable[int]) -> int:
    """K_{lam,mu}: semistandard tableaux of shape lam and content mu."""
    lam, mu = Partition(lam), tuple(mu)
    if sum(lam) != sum(mu) or any(m < 0 for m in mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    return _kostka(tuple(lam), tuple(m for m in mu if m))


kostka = enumerate_ssyt_count


# ---------------------------------------------------------------------------
# Special rim hook tabloids


@dataclass(frozen=True)
class SpecialRimHookTabloid:
    shape: Partition
    hooks: tuple[frozenset, ...]
    type: Partition
    sign: int
    splits: tuple[int, ...] = ()

    def __str__(self):
        grid = {}
        for idx, hook in enumerate(self.hooks):
            for cell in hook:
                grid[cell] = idx
        rows = []
        for i, p in enumerate(self.shape, start=1):
            rows.append(" ".join(chr(ord("a") + grid[(i, j)]) for j in range(1, p + 1)))
        return "\n".join(rows)


def hook_height(hook: Iterable[Cell]) -> int:
    return len({r for r, _ in hook})


def _rim_path(shape: tuple[int, ...]) -> list[Cell]:
    """Outer rim of the diagram, from the bottom-left cell to the top-right cell."""
    path = []
    rows = len(shape)
    for i in range(rows, 0, -1):
        below = shape[i] if i < rows else 0
        start = max(below, 1)
        # a cell (i, j) is on the rim iff (i+1, j+1) is outside the diagram
        for j in range(start, shape[i - 1] + 1):
            path.append((i, j))
    return path


def _remove_cells(shape: tuple[int, ...], cells: Iterable[Cell]) -> Optional[tuple[int, ...]]:
    rows = list(shape)
    removed: dict[int, int] = {}
    for r, _ in cells:
        removed[r] = removed.get(r, 0) + 1
    for r, cnt in removed.items():
        rows[r - 1] -= cnt
    result = tuple(rows)
    if any(result[i] < result[i + 1] for i in range(len(result) - 1)):
        return None
    return tuple(p for p in result if p)


def _special_hooks(shape: tuple[int, ...]) -> Iterator[tuple[list[Cell], tuple[int, ...]]]:
    """Every special rim hook of ``shape`` with the shape left after removing it.

    A special rim hook always contains the bottom cell of the first column, so
    it is an initial segment of the rim path; its size fixes it.
    """
    path = _rim_path(shape)
    for size in range(1, len(path) + 1):
        hook = path[:size]
        rest = _remove_cells(shape, hook)
        if rest is not None and _is_cell_set_left_justified(shape, hook):
            yield hook, rest


def _is_cell_set_left_justified(shape, hook) -> bool:
    # removal must take cells from the right end of each row
    by_row: dict[int, list[int]] = {}
    for r, c in hook:
        by_row.setdefault(r, []).append(c)
    for r, cols in by_row.items():
        if max(cols) != shape[r - 1] or sorted(cols) != list(range(min(cols), max(cols) + 1)):
            return False
    return True


@lru_cache(maxsize=None)
def _srht_all(shape: tuple[int, ...]) -> tuple[tuple[tuple[tuple[Cell, ...], ...], tuple[int, ...]], ...]:
    """All special rim hook tilings of ``shape`` (any type), as (hooks, first-column splits)."""
    if not shape:
        return (((), ()),)
    out = []
    for hook, rest in _special_hooks(shape):
        first_col = sum(1 for _, c in hook if c == 1)
        for hooks, splits in _srht_all(rest):
            out.append(((tuple(hook),) + hooks, (first_col,) + splits))
    return tuple(out)


def _make_tabloid(shape, hooks, splits) -> SpecialRimHookTabloid:
    sign = 1
    for h in hooks:
        if (hook_height(h) - 1) % 2:
            sign = -sign
    return SpecialRimHookTabloid(
        shape=Partition(shape),
        hooks=tuple(frozenset(h) for h in hooks),
        type=Partition.from_parts(len(h) for h in hooks),
        sign=sign,
        splits=tuple(splits),
    )


def enumerate_srht(lam: Iterable[int], mu: Iterable[int]) -> list[SpecialRimHookTabloid]:
    """Special rim hook tabloids of shape mu and type lam, ordered by first-column splits."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    out = []
    target = tuple(sorted(lam))
    for hooks, splits in _srht_all(tuple(mu)):
        if tuple(sorted(len(h) for h in hooks)) == target:
            out.append(_make_tabloid(mu, hooks, splits))
    out.sort(key=lambda t: t.splits)
    return out


@lru_cache(maxsize=None)
def inverse_kostka_column(mu: tuple[int, ...]) -> dict[Partition, int]:
    """The map lam -> K^{-1}_{lam,mu}, nonzero entries only."""
    col: dict[Partition, int] = {}
    for hooks, splits in _srht_all(tuple(mu)):
        t = _make_tabloid(mu, hooks, splits)
        col[t.type] = col.get(t.type, 0) + t.sign
    return {lam: v for lam, v in col.items() if v}


def inverse_kostka(lam: Iterable[int], mu: Iterable[int]) -> int:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    return inverse_kostka_column(tuple(mu)).get(lam, 0)


def validate_tabloid(t: SpecialRimHookTabloid) -> list[str]:
    """Check a tabloid against the definition without reusing the generator.

    Returns a list of violated conditions (empty when valid).
    """
    problems = []
    cells = set(t.shape.cells())
    seen: set[Cell] = set()
    for h in t.hooks:
        if seen & h:
            problems.append("hooks overlap")
        seen |= h
    if seen != cells:
        problems.append("hooks do not cover the shape")
    if Partition.from_parts(len(h) for h in t.hooks) != t.type:
        problems.append("type does not match hook sizes")
    current = set(cells)
    for h in t.hooks:
        if not any(c == 1 for _, c in h):
            problems.append("hook misses the first column")
        if not _connected_strip(h):
            problems.append("hook is not an edge-connected strip without 2x2 blocks")
        current -= h
        if not _is_diagram(current):
            problems.append("removing a hook leaves a non-diagram")
    sign = 1
    for h in t.hooks:
        sign *= (-1) ** (hook_height(h) - 1)
    if sign != t.sign:
        problems.append("sign mismatch")
    return problems


def _connected_strip(cells: frozenset) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    stack, seen = [start], {start}
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if seen != set(cells):
        return False
    return not any(
        (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells for r, c in cells
    )


def _is_diagram(cells: set) -> bool:
    for r, c in cells:
        if r > 1 and (r - 1, c) not in cells:
            return False
        if c > 1 and (r, c - 1) not in cells:
            return False
    return True


@dataclass
class KostkaInverseReport:
    n: int
    passed: bool
    counterexample: Optional[tuple[Partition, Partition, int]] = None


def verify_kostka_inverse(n: int) -> KostkaInverseReport:
    """Check sum_nu K_{lam,nu} K^{-1}_{nu,mu} == delta_{lam,mu} for all lam, mu of n."""
    parts = partitions_of(n)
    for lam in parts:
        for mu in parts:
            col = inverse_kostka_column(tuple(mu))
            total = sum(kostka(lam, nu) * v for nu, v in col.items())
            if total != (1 if lam == mu else 0):
                return KostkaInverseReport(n, False, (lam, mu, total))
    return KostkaInverseReport(n, True)
