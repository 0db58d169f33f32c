"""Inversion-preserving injections between sets of P-tableaux.

Each map takes a tableau of a fixed shape and returns a tableau of another
shape with the same inversion count. Injectivity of such a map shows that a
signed combination of B-polynomials is a generating function of the tableaux
missed by the map, and so has nonnegative coefficients. The maps are run on
explicit tableaux; ``harness.verify_injection`` certifies them per poset.

Tableaux are handled column by column: inserting an entry into the first
column pushes the first-column entries below it down one row and leaves the
other columns alone. Rows and columns are 1-indexed as a_{i,j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .dyck import UnitIntervalPoset, is_theorem41_class
from .partitions import Partition, hook_shape
from .ptableaux import PTableau, is_valid_ptableau


class MapFailure(RuntimeError):
    """A map could not be applied: no case fired, or a claimed unique index was not unique."""


@dataclass(frozen=True)
class MapResult:
    tableau: PTableau
    case: str


class _Cols:
    """Column view of a tableau with 1-indexed access."""

    def __init__(self, T: PTableau):
        self.cols = [list(T.column(j)) for j in range(1, (len(T.rows[0]) if T.rows else 0) + 1)]
        while len(self.cols) < 3:
            self.cols.append([])

    def a(self, i: int, j: int) -> int:
        return self.cols[j - 1][i - 1]

    def has(self, i: int, j: int) -> bool:
        return 1 <= i <= len(self.cols[j - 1])

    @property
    def c1(self) -> list[int]:
        return self.cols[0]

    @property
    def height(self) -> int:
        return len(self.cols[0])


def _build(P: UnitIntervalPoset, *cols: list[int]) -> PTableau:
    return PTableau.from_columns([c for c in cols if c], P)


def _insert_first_column(
    P: UnitIntervalPoset, col: list[int], x: int, lo: int, hi: Optional[int] = None
) -> tuple[list[int], int]:
    """Insert x above the first a_{s,1}, s >= lo, with a_{s,1} not below x; else at the bottom.

    Returns the new column and the row where x landed.
    """
    hi = len(col) if hi is None else min(hi, len(col))
    for s in range(lo, hi + 1):
        if not P.precedes(col[s - 1], x):
            return col[: s - 1] + [x] + col[s - 1 :], s
    return col + [x], len(col) + 1


def _chain_into(P: UnitIntervalPoset, col: list[int], start: int, r: int) -> bool:
    """a_{start,1}, ..., a_{r-1,1} all precede a_{r,1}."""
    target = col[r - 1]
    return all(P.precedes(col[t - 1], target) for t in range(start, r))


def _below_incomparable(P: UnitIntervalPoset, x: int, y: int) -> bool:
    """x < y as integers with x and y incomparable in P."""
    return x < y and not P.comparable(x, y)


def _require_bounce3(P: UnitIntervalPoset, l: int) -> None:
    bd = P.bounce
    if bd.bounce_number != 3:
        raise ValueError(f"bounce number is {bd.bounce_number}, not 3")
    if not 0 <= l <= min(bd.a, bd.b, bd.c):
        raise ValueError(f"l={l} outside [0, {min(bd.a, bd.b, bd.c)}]")


def _require_shape(T: PTableau, shape: Optional[Partition], what: str) -> None:
    if shape is None or T.shape != shape:
        raise ValueError(f"{what} expects shape {shape}, got {T.shape}")


def _require_class(P: UnitIntervalPoset) -> None:
    if not is_theorem41_class(P.path):
        raise ValueError(f"{P.path} is not in the (d1, d2, n-1.., n..) class with bounce number 3")


# ---------------------------------------------------------------------------
# shapes


def alpha_shapes(n: int, l: int):
    return hook_shape(l, 1, n), (hook_shape(l, 0, n), hook_shape(l + 1, 0, n))


def f_shapes(n: int, l: int):
    return hook_shape(l + 1, 0, n), hook_shape(l, 1, n)


def g_shapes(n: int, l: int):
    return hook_shape(l + 1, 1, n), hook_shape(l, 2, n)


def phi_shapes(n: int, l: int):
    return hook_shape(l, 2, n), hook_shape(l, 1, n)


def psi_shapes(n: int):
    return hook_shape(1, 1, n), hook_shape(0, 3, n)


def sigma1_shapes(n: int):
    return hook_shape(0, 3, n), hook_shape(0, 2, n)


def sigma2_shapes(n: int):
    return hook_shape(1, 0, n), hook_shape(0, 2, n)


# ---------------------------------------------------------------------------
# single-entry promotion and its companions


def alpha_chain_indices(T: PTableau, P: UnitIntervalPoset, l: int) -> list[int]:
    """Rows s >= l+2 with a_{l+1,1}, ..., a_{s-1,1} < a_{s,1} < a_{l+1,2}."""
    C = _Cols(T)
    x = C.a(l + 1, 2)
    return [
        s
        for s in range(l + 2, C.height + 1)
        if _chain_into(P, C.c1, l + 1, s) and P.precedes(C.a(s, 1), x)
    ]


def map_alpha(T: PTableau, P: UnitIntervalPoset, l: int) -> MapResult:
    """3^l 2 1^r  ->  3^{l+1} 1^{r-1} (promotion) or 3^l 1^{r+2} (insertion)."""
    _require_bounce3(P, l)
    _require_shape(T, alpha_shapes(P.n, l)[0], "alpha")
    C = _Cols(T)
    c1, c2, c3 = C.cols
    x = C.a(l + 1, 2)
    hits = alpha_chain_indices(T, P, l)
    if len(hits) > 1:
        raise MapFailure(f"rows {hits} all qualify for promotion")
    if hits:
        s = hits[0]
        new1 = c1[: s - 1] + c1[s:]
        return MapResult(_build(P, new1, c2[:l] + [c1[s - 1]], c3 + [x]), "i")
    new1, _ = _insert_first_column(P, c1, x, l + 2)
    return MapResult(_build(P, new1, c2[:l], c3), "ii")


def map_f(T: PTableau, P: UnitIntervalPoset, l: int) -> MapResult:
    """3^{l+1} 1^r  ->  3^l 2 1^{r+1}: drop a_{l+1,2} into the first column."""
    _require_bounce3(P, l)
    _require_shape(T, f_shapes(P.n, l)[0], "f")
    C = _Cols(T)
    c1, c2, c3 = C.cols
    x, y = C.a(l + 1, 2), C.a(l + 1, 3)
    new1, s = _insert_first_column(P, c1, x, l + 2)
    case = "insert" if s <= len(c1) else "bottom"
    return MapResult(_build(P, new1, c2[:l] + [y], c3[:l]), case)


def _g_base_case(T: PTableau, P: UnitIntervalPoset, l: int) -> list[str]:
    C = _Cols(T)
    a12, a13 = C.a(l + 1, 2), C.a(l + 1, 3)
    a21, a22 = C.a(l + 2, 1), C.a(l + 2, 2)
    fired = []
    if P.precedes(a22, a13):
        fired.append("1")
    else:
        if not P.precedes(a12, a22) and not P.precedes(a21, a12):
            fired.append("2a")
        if not P.precedes(a12, a22) and P.precedes(a21, a12):
            fired.append("2b")
        if P.precedes(a12, a22):
            fired.append("2c")
    return fired


def _g_image(T: PTableau, P: UnitIntervalPoset, l: int, case: str) -> PTableau:
    C = _Cols(T)
    c1, c2, c3 = C.cols
    a11, a12, a13 = C.a(l + 1, 1), C.a(l + 1, 2), C.a(l + 1, 3)
    a21, a22 = C.a(l + 2, 1), C.a(l + 2, 2)
    if case == "1":
        new1, _ = _insert_first_column(P, c1, a22, l + 3)
        return _build(P, new1, c2[:l] + [a12, a13], c3[:l])
    if case == "2d":
        new1 = c1[:l] + [a12, a21, a11] + c1[l + 2 :]
        return _build(P, new1, c2[:l] + [a22, a13], c3[:l])
    new1, _ = _insert_first_column(P, c1, a12, l + 2 if case == "2c" else l + 3)
    second = [a22, a13] if case == "2b" else [a13, a22]
    return _build(P, new1, c2[:l] + second, c3[:l])


def _g_candidates(U: PTableau, P: UnitIntervalPoset, l: int, case: str) -> list[PTableau]:
    """Valid tableaux of the domain shape that ``case`` could have sent to U."""
    shape = g_shapes(P.n, l)[0]
    C = _Cols(U)
    u1, u2, u3 = C.cols
    out = []
    if case == "2d":
        if len(u1) < l + 3:
            return out
        a12, a21, a11 = u1[l : l + 3]
        a22, a13 = u2[l], u2[l + 1]
        rebuilt = [(u1[:l] + [a11, a21] + u1[l + 3 :], a12, a22, a13)]
    else:
        top, bottom = u2[l], u2[l + 1]
        a13, other = {"1": (bottom, top), "2b": (bottom, top)}.get(case, (top, bottom))
        lo = l + 2 if case == "2c" else l + 3
        rebuilt = []
        for p in range(lo, len(u1) + 1):
            col = u1[: p - 1] + u1[p:]
            moved = u1[p - 1]
            # case 1 moves a_{l+2,2}; the others move a_{l+1,2}
            a12, a22 = (other, moved) if case == "1" else (moved, other)
            rebuilt.append((col, a12, a22, a13))
    for col, a12, a22, a13 in rebuilt:
        T = _build(P, col, u2[:l] + [a12, a22], u3[:l] + [a13])
        if T.shape == shape and is_valid_ptableau(T, P):
            out.append(T)
    return out


def _g_shadowed(T: PTableau, P: UnitIntervalPoset, l: int) -> bool:
    """The case 2c image of T is also the case 2a image of another tableau."""
    U = _g_image(T, P, l, "2c")
    return any(
        _g_base_case(S, P, l) == ["2a"] and _g_image(S, P, l, "2a") == U
        for S in _g_candidates(U, P, l, "2a")
    )


def g_case(T: PTableau, P: UnitIntervalPoset, l: int) -> list[str]:
    """All case labels of g whose defining conditions hold (exactly one for a sound dispatch).

    Case 2d takes the case 2c tableaux whose 2c image would coincide with a
    2a image; without it g is not injective.
    """
    fired = _g_base_case(T, P, l)
    if fired == ["2c"] and _g_shadowed(T, P, l):
        return ["2d"]
    return fired


def map_g(T: PTableau, P: UnitIntervalPoset, l: int) -> MapResult:
    """3^{l+1} 2 1^r  ->  3^l 2^2 1^{r+1}."""
    _require_bounce3(P, l)
    _require_shape(T, g_shapes(P.n, l)[0], "g")
    fired = g_case(T, P, l)
    if len(fired) != 1:
        raise MapFailure(f"g cases fired: {fired}")
    return MapResult(_g_image(T, P, l, fired[0]), fired[0])


def g_preimages(U: PTableau, P: UnitIntervalPoset, l: int) -> list[PTableau]:
    """Every T with g(T) = U, found by undoing each case."""
    out = []
    for case in G_CASES:
        for T in _g_candidates(U, P, l, case):
            if g_case(T, P, l) == [case] and _g_image(T, P, l, case) == U:
                out.append(T)
    return out


G_CASES = ("1", "2a", "2b", "2c", "2d")


def membership_A(T: PTableau, P: UnitIntervalPoset, l: int) -> bool:
    """Shape 3^l 2 1^r with no first-column chain from row l+1 into a_{l+1,2}."""
    _require_shape(T, alpha_shapes(P.n, l)[0], "membership_A")
    return not alpha_chain_indices(T, P, l)


def _b_witnesses(T: PTableau, P: UnitIntervalPoset, l: int) -> list[str]:
    """Patterns in T that a tableau in im(g) exhibits; T is in B when none occur."""
    C = _Cols(T)
    col = C.c1
    prec = P.precedes
    a11, a12 = C.a(l + 1, 1), C.a(l + 1, 2)
    a21, a22 = C.a(l + 2, 1), C.a(l + 2, 2)
    rows = range(l + 3, C.height + 1)
    found = []
    if prec(a12, a22):
        if any(_chain_into(P, col, l + 2, r) and prec(col[r - 1], a22) for r in rows):
            found.append("1")
        return found
    for r in rows:
        ar = col[r - 1]
        if (
            _chain_into(P, col, l + 3, r)
            and prec(a11, ar)
            and prec(ar, a12)
            and _below_incomparable(P, ar, a22)
            and not prec(a21, ar)
        ):
            found.append("2a")
        if _chain_into(P, col, l + 2, r) and prec(a11, ar) and prec(ar, a22) and not prec(ar, a12):
            found.append("2b")
        if _chain_into(P, col, l + 1, r) and prec(ar, a22) and prec(ar, a12):
            found.append("2c")
    a31_below = C.has(l + 3, 1) and prec(C.a(l + 3, 1), a22)
    if prec(a11, a21) and prec(a21, a22) and prec(a21, a12) and a31_below:
        found.append("2c'")
    if any(g_case(S, P, l) == ["2d"] for S in _g_candidates(T, P, l, "2d")):
        found.append("2d")
    return found


def membership_B(T: PTableau, P: UnitIntervalPoset, l: int) -> bool:
    """Shape 3^l 2^2 1^r avoiding every chain pattern that marks an image of g."""
    _require_shape(T, g_shapes(P.n, l)[1], "membership_B")
    return not _b_witnesses(T, P, l)


def phi_case(T: PTableau, P: UnitIntervalPoset, l: int) -> str:
    """'adjusted', 'swap' or 'insert'.

    'swap' covers a_{l+1,2} not below a_{l+2,2} with a chain from row l+2 into
    some a_{r,1} below a_{l+2,2} but not below a_{l+1,2}; in B this forces
    a_{l+1,1} not below a_{r,1}.
    """
    C = _Cols(T)
    prec = P.precedes
    a11, a12 = C.a(l + 1, 1), C.a(l + 1, 2)
    a21, a22 = C.a(l + 2, 1), C.a(l + 2, 2)
    a31_below = C.has(l + 3, 1) and prec(C.a(l + 3, 1), a22)
    if prec(a11, a21) and prec(a21, a22) and prec(a21, a12) and not a31_below:
        return "adjusted"
    if not prec(a12, a22):
        col = C.c1
        for r in range(l + 3, C.height + 1):
            ar = col[r - 1]
            if _chain_into(P, col, l + 2, r) and prec(ar, a22) and not prec(ar, a12):
                return "swap"
    return "insert"


def map_phi(T: PTableau, P: UnitIntervalPoset, l: int) -> MapResult:
    """B (shape 3^l 2^2 1^r)  ->  A (shape 3^l 2 1^{r+2})."""
    _require_bounce3(P, l)
    if not membership_B(T, P, l):
        raise ValueError(f"{T} is not in B")
    C = _Cols(T)
    c1, c2, c3 = C.cols
    a11, a12, a21, a22 = C.a(l + 1, 1), C.a(l + 1, 2), C.a(l + 2, 1), C.a(l + 2, 2)
    case = phi_case(T, P, l)
    if case == "adjusted":
        new1 = c1[: l + 1] + [a12, a22] + c1[l + 2 :]
        return MapResult(_build(P, new1, c2[:l] + [a21], c3), case)
    if case == "swap":
        new1, _ = _insert_first_column(P, c1[:l] + [a21, a11] + c1[l + 2 :], a12, l + 3)
        return MapResult(_build(P, new1, c2[:l] + [a22], c3), case)
    new1, _ = _insert_first_column(P, c1, a22, l + 3)
    return MapResult(_build(P, new1, c2[: l + 1], c3), case)


# ---------------------------------------------------------------------------
# the (d1, d2, n-1.., n..) class


def psi_case(T: PTableau, P: UnitIntervalPoset) -> list[str]:
    C = _Cols(T)
    prec = P.precedes
    n = P.n
    a12, a13 = C.a(1, 2), C.a(1, 3)
    a21, a22 = C.a(2, 1), C.a(2, 2)
    if not C.has(3, 1):
        return []
    a31 = C.a(3, 1)
    up22, up31 = prec(a22, a13), prec(a31, a13)
    fired = []
    if up22 and up31:
        fired.append("1")
    if not up22 and up31:
        if not prec(a21, a31):
            fired.append("2a")
        if prec(a21, a31) and not prec(a21, a12):
            fired.append("2b")
        if prec(a21, a31) and prec(a21, a12):
            fired.append("2c")
    if up22 and not up31:
        fired.append("3")
    if not up22 and not up31:
        if prec(a21, a31) and prec(a21, a12):
            fired.append("4a")
        if prec(a21, a31) and not prec(a21, a12):
            fired.append("4b")
        if not prec(a21, a31) and a13 == n:
            fired.append("4c")
        if not prec(a21, a31) and a22 == n and prec(a31, n):
            fired.append("4d")
        if not prec(a21, a31) and a22 == n and not prec(a31, n):
            fired.append("4d'")
    return fired


def map_psi(T: PTableau, P: UnitIntervalPoset) -> MapResult:
    """(3, 2, 1^{n-5})  ->  (2, 2, 2, 1^{n-6})."""
    _require_class(P)
    _require_shape(T, psi_shapes(P.n)[0], "psi")
    fired = psi_case(T, P)
    if len(fired) != 1:
        raise MapFailure(f"psi cases fired: {fired}")
    case = fired[0]
    C = _Cols(T)
    a11, a12, a13 = C.a(1, 1), C.a(1, 2), C.a(1, 3)
    a21, a22, a31 = C.a(2, 1), C.a(2, 2), C.a(3, 1)
    if case == "4d'":
        rows = [[a11, a13], [a12, a31], [a21, a22]] if P.precedes(a12, a31) else [[a11, a31], [a12, a13], [a21, a22]]
    else:
        rows = {
            "1": [[a11, a12], [a21, a22], [a31, a13]],
            "2a": [[a11, a12], [a31, a13], [a21, a22]],
            "2b": [[a11, a22], [a21, a31], [a12, a13]],
            "2c": [[a11, a22], [a21, a12], [a31, a13]],
            "3": [[a11, a12], [a21, a31], [a22, a13]],
            "4a": [[a11, a22], [a21, a31], [a12, a13]],
            "4b": [[a11, a22], [a12, a13], [a21, a31]],
            "4c": [[a11, a31], [a12, a13], [a21, a22]],
            "4d": [[a11, a21], [a12, a13], [a31, a22]],
        }[case]
    new1 = [r[0] for r in rows] + C.c1[3:]
    return MapResult(_build(P, new1, [r[1] for r in rows]), case)


def map_sigma1(T: PTableau, P: UnitIntervalPoset) -> MapResult:
    """(2, 2, 2, 1^{n-6})  ->  (2, 2, 1^{n-4}): drop a_{3,2} into the first column."""
    _require_class(P)
    _require_shape(T, sigma1_shapes(P.n)[0], "sigma1")
    C = _Cols(T)
    c1, c2 = C.cols[0], C.cols[1]
    new1, s = _insert_first_column(P, c1, C.a(3, 2), 4)
    return MapResult(_build(P, new1, c2[:2]), "insert" if s <= len(c1) else "bottom")


def sigma2_indices(T: PTableau, P: UnitIntervalPoset) -> list[int]:
    """Rows s >= 4 with a_{3,1}, ..., a_{s-1,1} < a_{s,1} and a_{s,1} not below a_{1,3}."""
    C = _Cols(T)
    a13 = C.a(1, 3)
    return [
        s
        for s in range(4, C.height + 1)
        if _chain_into(P, C.c1, 3, s) and not P.precedes(C.a(s, 1), a13)
    ]


def sigma2_case(T: PTableau, P: UnitIntervalPoset) -> list[str]:
    C = _Cols(T)
    prec = P.precedes
    if not C.has(2, 1):
        return []
    if not C.has(3, 1):
        # shape (3, 1): only Case 1 applies
        hits: list[int] = []
    else:
        hits = sigma2_indices(T, P)
    a12, a13, a21 = C.a(1, 2), C.a(1, 3), C.a(2, 1)
    fired = []
    if not hits:
        if prec(a21, a13):
            fired.append("1a")
        if not prec(a21, a13) and not prec(a12, a21):
            fired.append("1b")
        if not prec(a21, a13) and prec(a12, a21):
            fired.append("1b'")
        return fired
    a_s = C.a(hits[0], 1)
    a31 = C.a(3, 1)
    if a13 == P.n:
        fired.append("2a" if prec(a31, a12) else "2a'")
    else:
        fired.append("2b" if prec(a21, a_s) else "2b'")
    return fired


def map_sigma2(T: PTableau, P: UnitIntervalPoset) -> MapResult:
    """(3, 1^{n-3})  ->  (2, 2, 1^{n-4})."""
    _require_class(P)
    _require_shape(T, sigma2_shapes(P.n)[0], "sigma2")
    fired = sigma2_case(T, P)
    if len(fired) != 1:
        raise MapFailure(f"sigma2 cases fired: {fired}")
    case = fired[0]
    C = _Cols(T)
    c1 = C.c1
    a11, a12, a13, a21 = C.a(1, 1), C.a(1, 2), C.a(1, 3), C.a(2, 1)
    if case == "1a":
        return MapResult(_build(P, [a11, a21] + c1[2:], [a12, a13]), case)
    if case == "1b":
        return MapResult(_build(P, [a11, a12] + c1[2:], [a21, a13]), case)
    if case == "1b'":
        return MapResult(_build(P, [a11, a12] + c1[2:], [a13, a21]), case)
    hits = sigma2_indices(T, P)
    if len(hits) > 1:
        raise MapFailure(f"rows {hits} all qualify in sigma2 case 2")
    s = hits[0]
    a31, a_s = C.a(3, 1), C.a(s, 1)
    rest = [c1[t - 1] for t in range(4, C.height + 1) if t != s]
    heads, second = {
        "2a": ([a11, a31, a21, a12], [a13, a_s]),
        "2a'": ([a11, a12, a31, a21], [a_s, a13]),
        "2b": ([a11, a12, a21, a31], [a13, a_s]),
        "2b'": ([a11, a12, a31, a21], [a13, a_s]),
    }[case]
    return MapResult(_build(P, heads + rest, second), case)


MAPS: dict[str, Callable] = {
    "alpha": map_alpha,
    "f": map_f,
    "g": map_g,
    "phi": map_phi,
    "psi": map_psi,
    "sigma1": map_sigma1,
    "sigma2": map_sigma2,
}
LEVELED = ("alpha", "f", "g", "phi")
CLASS_MAPS = ("psi", "sigma1", "sigma2")
