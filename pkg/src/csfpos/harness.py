"""Per-poset certification of the injections in ``involutions``.

For one map and one poset the harness enumerates the whole domain, applies
the map, and checks output shape, validity, inversion preservation,
injectivity and the case dispatch. It then compares two independent routes to
the same polynomial: the signed combination of B-polynomials from the
dynamic program, and the inversion generating function of the codomain
tableaux the map misses, enumerated one by one.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import involutions as inv
from .dyck import DyckPath, UnitIntervalPoset, enumerate_dyck_paths, is_theorem41_class
from .expansions import B, closed_form_coefficient, e_coeff_bounce3
from .ptableaux import PTableau, enumerate_ptableaux, inversions, is_valid_ptableau
from .qpoly import QPoly, from_powers


@dataclass
class InjectionReport:
    map: str
    dyck: tuple[int, ...]
    n: int
    l: Optional[int]
    domain: int = 0
    image: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    cases: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.image == self.domain

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def fail(self, tableau, message: str) -> None:
        self.failures.append((str(tableau) if tableau is not None else "", message))

    def to_dict(self) -> dict:
        return {
            "map": self.map,
            "dyck": list(self.dyck),
            "n": self.n,
            "l": self.l,
            "domain": self.domain,
            "image": self.image,
            "status": self.status,
            "cases": dict(sorted(self.cases.items())),
            "failures": [{"tableau": t, "reason": r} for t, r in self.failures],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InjectionReport":
        return cls(
            map=data["map"],
            dyck=tuple(data["dyck"]),
            n=data["n"],
            l=data["l"],
            domain=data["domain"],
            image=data["image"],
            failures=[(f["tableau"], f["reason"]) for f in data["failures"]],
            cases=dict(data.get("cases", {})),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        lpart = "" if self.l is None else f" l={self.l}"
        head = f"{self.map} d=({','.join(map(str, self.dyck))}){lpart}: {self.status} domain={self.domain} image={self.image}"
        if self.failures:
            t, r = self.failures[0]
            head += f" first failure: {r} [{t}]"
        return head


def _tableaux(P, shape) -> list[PTableau]:
    return [] if shape is None else enumerate_ptableaux(P, shape)


def _gen(tableaux: Iterable[PTableau], P) -> QPoly:
    return from_powers(inversions(T, P) for T in tableaux)


def _apply(report: InjectionReport, fn, T, P, args, out_shapes, case_fn=None) -> Optional[PTableau]:
    """Run one map on one tableau, recording every violated property."""
    if case_fn is not None:
        fired = case_fn(T, P, *args)
        if len(fired) != 1:
            report.fail(T, f"case dispatch fired {fired or 'nothing'}")
    try:
        result = fn(T, P, *args)
    except inv.MapFailure as exc:
        report.fail(T, f"map undefined: {exc}")
        return None
    U = result.tableau
    report.cases[result.case] = report.cases.get(result.case, 0) + 1
    if U.shape not in out_shapes:
        report.fail(T, f"output shape {U.shape} not in {[str(s) for s in out_shapes]}")
    if not is_valid_ptableau(U, P):
        report.fail(T, f"output {U} is not a P-tableau")
    if inversions(U, P) != inversions(T, P):
        report.fail(T, f"inversions {inversions(T, P)} -> {inversions(U, P)} for output {U}")
    return U


def _run(report, fn, domain, P, args, out_shapes, case_fn=None) -> dict:
    """Apply a map to a whole domain; return image -> preimage and check injectivity."""
    images: dict[PTableau, PTableau] = {}
    report.domain = len(domain)
    for T in domain:
        U = _apply(report, fn, T, P, args, out_shapes, case_fn)
        if U is None:
            continue
        if U in images:
            report.fail(T, f"collides with {images[U]} at {U}")
        else:
            images[U] = T
    report.image = len(images)
    return images


def _check_identity(report, expected: QPoly, missed: QPoly, label: str) -> None:
    if expected != missed:
        report.fail(None, f"{label}: B-combination {expected} != unmatched codomain sum {missed}")


def verify_injection(name: str, P: UnitIntervalPoset, l: Optional[int] = None) -> InjectionReport:
    """Certify one named map on one poset (and one l for the leveled maps)."""
    if name not in inv.MAPS:
        raise ValueError(f"unknown map {name!r}; choose from {sorted(inv.MAPS)}")
    if name in inv.LEVELED and l is None:
        raise ValueError(f"map {name} needs a value of l")
    report = InjectionReport(name, P.path.d, P.n, l if name in inv.LEVELED else None)
    n = P.n
    fn = inv.MAPS[name]

    if name == "alpha":
        dom_shape, cod_shapes = inv.alpha_shapes(n, l)
        domain = _tableaux(P, dom_shape)
        images = _run(report, fn, domain, P, (l,), [s for s in cod_shapes if s is not None])
        for T in domain:
            if len(inv.alpha_chain_indices(T, P, l)) > 1:
                report.fail(T, "promotion row is not unique")
        codomain = [U for s in cod_shapes for U in _tableaux(P, s)]
        expected = B(P, l, 0) - B(P, l, 1) + B(P, l + 1, 0)
        _check_identity(report, expected, _gen((U for U in codomain if U not in images), P), "alpha")
        if expected != e_coeff_bounce3(P, l, 0):
            report.fail(None, "closed-form coefficient for j=0 disagrees with the B-combination")

    elif name == "f":
        dom_shape, cod_shape = inv.f_shapes(n, l)
        domain = _tableaux(P, dom_shape)
        images = _run(report, fn, domain, P, (l,), [cod_shape])
        codomain = _tableaux(P, cod_shape)
        for U in codomain:
            if inv.membership_A(U, P, l) == (U in images):
                report.fail(U, "membership_A disagrees with the complement of im(f)")
        missed = _gen((U for U in codomain if U not in images), P)
        _check_identity(report, B(P, l, 1) - B(P, l + 1, 0), missed, "f")

    elif name == "g":
        dom_shape, cod_shape = inv.g_shapes(n, l)
        domain = _tableaux(P, dom_shape)
        images = _run(report, fn, domain, P, (l,), [cod_shape], inv.g_case)
        codomain = _tableaux(P, cod_shape)
        for U in codomain:
            if inv.membership_B(U, P, l) == (U in images):
                report.fail(U, "membership_B disagrees with the complement of im(g)")
        missed = _gen((U for U in codomain if U not in images), P)
        _check_identity(report, B(P, l, 2) - B(P, l + 1, 1), missed, "g")

    elif name == "phi":
        dom_shape, cod_shape = inv.phi_shapes(n, l)
        domain = [T for T in _tableaux(P, dom_shape) if inv.membership_B(T, P, l)]
        images = _run(report, fn, domain, P, (l,), [cod_shape])
        for U, T in images.items():
            if not inv.membership_A(U, P, l):
                report.fail(T, f"image {U} is not in A")
        setA = [U for U in _tableaux(P, cod_shape) if inv.membership_A(U, P, l)]
        missed = _gen((U for U in setA if U not in images), P)
        _check_identity(report, closed_form_coefficient(P, l, 1), missed, "phi")

    elif name == "psi":
        dom_shape, cod_shape = inv.psi_shapes(n)
        domain = _tableaux(P, dom_shape)
        images = _run(report, lambda T, P: fn(T, P), domain, P, (), [cod_shape], inv.psi_case)
        missed = _gen((U for U in _tableaux(P, cod_shape) if U not in images), P)
        _check_identity(report, B(P, 0, 3) - B(P, 1, 1), missed, "psi")

    else:  # sigma1 / sigma2 are certified as a pair
        other = "sigma2" if name == "sigma1" else "sigma1"
        shapes = {"sigma1": inv.sigma1_shapes(n), "sigma2": inv.sigma2_shapes(n)}
        cod_shape = shapes[name][1]
        domain = _tableaux(P, shapes[name][0])
        case_fn = inv.sigma2_case if name == "sigma2" else None
        images = _run(report, fn, domain, P, (), [cod_shape], case_fn)
        shadow = InjectionReport(other, P.path.d, n, None)
        other_images = _run(shadow, inv.MAPS[other], _tableaux(P, shapes[other][0]), P, (), [cod_shape])
        for t, r in shadow.failures:
            report.fail(t, f"{other}: {r}")
        for U in set(images) & set(other_images):
            report.fail(images[U], f"image {U} also hit by {other}")
        both = set(images) | set(other_images)
        missed = _gen((U for U in _tableaux(P, cod_shape) if U not in both), P)
        expected = B(P, 0, 2) - B(P, 0, 3) - B(P, 1, 0)
        _check_identity(report, expected, missed, "sigma pair")

    return report


def levels(P: UnitIntervalPoset) -> range:
    bd = P.bounce
    return range(min(bd.a, bd.b, bd.c) + 1)


# The class maps need their codomain shape to exist: (2,2,2,...) for psi and
# (2,2,...) for the sigma pair. Below these sizes the coefficients they bound
# merge with other e-indices and are covered by the full expansion instead.
CLASS_MAP_MIN_N = {"psi": 6, "sigma1": 4, "sigma2": 4}


def applicable_paths(name: str, n: int, theorem41_only: bool = False) -> Iterable[DyckPath]:
    if n < CLASS_MAP_MIN_N.get(name, 0):
        return
    for path in enumerate_dyck_paths(n, 3):
        if (name in inv.CLASS_MAPS or theorem41_only) and not is_theorem41_class(path):
            continue
        yield path


def verify_all(name: str, n: int, theorem41_only: bool = False) -> Iterable[InjectionReport]:
    """Reports for every applicable path of size n (and every l for the leveled maps)."""
    for path in applicable_paths(name, n, theorem41_only):
        P = UnitIntervalPoset(path)
        if name in inv.LEVELED:
            for l in levels(P):
                yield verify_injection(name, P, l)
        else:
            yield verify_injection(name, P)
