"""Expansions of X_G(x, q) in the Schur and elementary bases.

The Schur coefficients are the tableau polynomials B_mu(q). The elementary
coefficients come from the inverse Kostka numbers,

    [e_lam] X = sum_mu B_mu(q) * Kinv[lam, conj(mu)],

with closed forms for bounce number three indexed by (l, j) through the
shape 3^l 2^j 1^(n-3l-2j).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .dyck import UnitIntervalPoset, is_theorem41_class
from .partitions import Partition, conjugate, hook_shape, inverse_kostka_column, partitions_of
from .ptableaux import b_poly
from .qpoly import QPoly

BASES = ("m", "s", "e")
BASIS_NAMES = {"monomial": "m", "schur": "s", "elementary": "e", "m": "m", "s": "s", "e": "e"}


class BasisError(ValueError):
    pass


@dataclass
class SymExpansion:
    basis: str
    n: int
    terms: dict[Partition, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASIS_NAMES:
            raise BasisError(f"unknown basis {self.basis!r}")
        self.basis = BASIS_NAMES[self.basis]
        clean = {}
        for lam, poly in self.terms.items():
            lam = Partition(lam)
            if lam.size != self.n:
                raise ValueError(f"partition {lam} is not a partition of {self.n}")
            if not isinstance(poly, QPoly):
                poly = QPoly(poly) if not isinstance(poly, int) else QPoly([poly])
            if poly:
                clean[lam] = clean.get(lam, QPoly()) + poly
        self.terms = {lam: p for lam, p in clean.items() if p}

    def __getitem__(self, lam) -> QPoly:
        return self.terms.get(Partition(lam), QPoly())

    def add(self, lam, poly: QPoly) -> None:
        lam = Partition(lam)
        total = self.terms.get(lam, QPoly()) + poly
        if total:
            self.terms[lam] = total
        else:
            self.terms.pop(lam, None)

    def sorted_items(self) -> list[tuple[Partition, QPoly]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return self.basis == other.basis and self.n == other.n and self.terms == other.terms

    def first_difference(self, other: "SymExpansion"):
        """A partition where the two expansions differ, with both coefficients."""
        for lam in sorted(set(self.terms) | set(other.terms), reverse=True):
            if self[lam] != other[lam]:
                return lam, self[lam], other[lam]
        return None

    def at_q(self, value: int) -> dict[Partition, int]:
        return {lam: p(value) for lam, p in self.terms.items()}

    # serialization -----------------------------------------------------

    def to_records(self) -> list[dict]:
        return [{"partition": list(lam), "poly": list(p.coeffs)} for lam, p in self.sorted_items()]

    def to_dict(self) -> dict:
        return {"basis": self.basis, "n": self.n, "terms": self.to_records()}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "SymExpansion":
        terms = {Partition(r["partition"]): QPoly(r["poly"]) for r in data["terms"]}
        return cls(data["basis"], int(data["n"]), terms)

    @classmethod
    def from_json(cls, text: str) -> "SymExpansion":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{self.basis}{lam}: {p}" for lam, p in self.sorted_items())


def schur_expansion(P: UnitIntervalPoset) -> SymExpansion:
    """X_G = sum_lam B_lam(q) s_lam, over shapes whose first row fits a chain."""
    top = P.bounce.bounce_number
    terms = {lam: b_poly(P, lam) for lam in partitions_of(P.n, max_part=top)}
    return SymExpansion("s", P.n, terms)


def schur_to_e(X: SymExpansion) -> SymExpansion:
    """Rewrite a Schur expansion in the elementary basis with s_mu = sum Kinv[lam, mu'] e_lam."""
    if X.basis != "s":
        raise BasisError(f"expected a Schur expansion, got basis {X.basis!r}")
    out = SymExpansion("e", X.n)
    for mu, coeff in X.terms.items():
        for lam, k in inverse_kostka_column(tuple(conjugate(mu))).items():
            out.add(lam, coeff * k)
    return out


def e_expansion(P: UnitIntervalPoset) -> SymExpansion:
    return schur_to_e(schur_expansion(P))


# ---------------------------------------------------------------------------
# bounce number three


def B(P: UnitIntervalPoset, threes: int, twos: int) -> QPoly:
    """B of the shape 3^threes 2^twos 1^rest; zero when the shape is invalid."""
    return b_poly(P, hook_shape(threes, twos, P.n))


def bounce3_ranges(P: UnitIntervalPoset) -> tuple[int, int]:
    """(max l, k) for a bounce-3 poset."""
    bd = P.bounce
    if bd.bounce_number != 3:
        raise ValueError(f"bounce number is {bd.bounce_number}, not 3")
    return min(bd.a, bd.b, bd.c), bd.k


def e_coeff_bounce3(P: UnitIntervalPoset, l: int, j: int) -> QPoly:
    """Closed-form coefficient attached to e_(n-2l-j, l+j, l)."""
    lmax, k = bounce3_ranges(P)
    if not (0 <= l <= lmax) or not (0 <= j <= k - 2 * l):
        raise ValueError(f"(l, j) = ({l}, {j}) outside 0 <= l <= {lmax}, 0 <= j <= {k - 2 * l}")
    return closed_form_coefficient(P, l, j)


def closed_form_coefficient(P: UnitIntervalPoset, l: int, j: int) -> QPoly:
    """The grouped B-combination for index (l, j), without range checks."""
    if j == 0:
        return B(P, l, 0) - B(P, l, 1) + B(P, l + 1, 0)
    if j == 1:
        return B(P, l, 1) - B(P, l, 2) + B(P, l + 1, 1) - B(P, l + 1, 0)
    return (
        B(P, l, j)
        - B(P, l, j + 1)
        + B(P, l + 1, j)
        - B(P, l + 1, j - 2)
        + B(P, l + 2, j - 3)
        - B(P, l + 2, j - 2)
    )


def e_index(n: int, l: int, j: int) -> Partition:
    """The partition obtained by sorting (n-2l-j, l+j, l)."""
    return Partition.from_parts((n - 2 * l - j, l + j, l))


def closed_form_e_expansion(P: UnitIntervalPoset) -> SymExpansion:
    """Sum of all closed-form terms, each attached to its sorted e-index."""
    lmax, k = bounce3_ranges(P)
    out = SymExpansion("e", P.n)
    for l in range(lmax + 1):
        for j in range(0, k - 2 * l + 1):
            out.add(e_index(P.n, l, j), closed_form_coefficient(P, l, j))
    return out


def reduced_expansion_thm41(P: UnitIntervalPoset) -> SymExpansion:
    """The four-group e-expansion available for d = (d1, d2, n-1, ..., n-1, n, ..., n)."""
    if not is_theorem41_class(P.path):
        raise ValueError(f"{P.path} is not in the (d1, d2, n-1.., n..) class with bounce number 3")
    n = P.n
    out = SymExpansion("e", n)
    for l in (0, 1):
        for idx, coeff in reduced_terms_thm41(P, l).items():
            parts = idx
            if min(parts) < 0:
                continue
            out.add(Partition.from_parts(parts), coeff)
    for parts, coeff in reduced_tail_thm41(P).items():
        if min(parts) >= 0:
            out.add(Partition.from_parts(parts), coeff)
    return out


def reduced_terms_thm41(P, l: int) -> dict[tuple[int, ...], QPoly]:
    n = P.n
    return {
        (n - 2 * l, l, l): closed_form_coefficient(P, l, 0),
        (n - 2 * l - 1, l + 1, l): closed_form_coefficient(P, l, 1),
    }


def reduced_tail_thm41(P) -> dict[tuple[int, ...], QPoly]:
    n = P.n
    return {
        (n - 2, 2): B(P, 0, 2) - B(P, 0, 3) - B(P, 1, 0),
        (n - 3, 3): B(P, 0, 3) - B(P, 1, 1),
    }


@dataclass
class PositivityResult:
    positive: bool
    witness: Optional[tuple[Partition, int, int]] = None

    def __bool__(self):
        return self.positive


def is_e_positive(X: SymExpansion) -> PositivityResult:
    """All coefficients of every e-coefficient are nonnegative; else the first violation."""
    if X.basis != "e":
        raise BasisError(f"e-positivity needs the elementary basis, got {X.basis!r}")
    for lam, poly in X.sorted_items():
        bad = poly.first_negative()
        if bad is not None:
            return PositivityResult(False, (lam, bad[0], bad[1]))
    return PositivityResult(True)


def sum_by_length(X: SymExpansion) -> dict[int, QPoly]:
    out: dict[int, QPoly] = {}
    for lam, poly in X.terms.items():
        out[len(lam)] = out.get(len(lam), QPoly()) + poly
    return out
