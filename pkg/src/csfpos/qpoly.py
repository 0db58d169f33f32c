"""Polynomials in a single variable q with exact integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Union

IntLike = Union[int, "QPoly"]

_TERM_RE = re.compile(r"([+-]?)(\d*)(q(?:\^(\d+))?)?")


class QPoly:
    """An element of Z[q], stored as ascending coefficients with no trailing zeros.

    Instances are immutable and hashable, so they can be used as dictionary
    values in expansions and compared by value.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPoly":
        if power < 0:
            raise ValueError("negative power of q")
        return cls([0] * power + [coeff])

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Parse the human form produced by ``str``, e.g. ``"1+2q+q^2"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        out: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign, digits, qpart, exp = m.groups()
            if not digits and not qpart:
                raise ValueError(f"cannot parse polynomial {text!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            power = (int(exp) if exp else 1) if qpart else 0
            out[power] = out.get(power, 0) + c
            pos = m.end()
        top = max(out) if out else -1
        return cls(out.get(i, 0) for i in range(top + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def first_negative(self):
        """Return ``(power, coefficient)`` of the lowest negative coefficient, or None."""
        for i, c in enumerate(self.coeffs):
            if c < 0:
                return i, c
        return None

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = QPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return QPoly([0] * k + list(self.coeffs))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(sign + body)
        return "".join(parts)


ZERO = QPoly()
ONE = QPoly([1])
q = QPoly([0, 1])


def qsum(polys: Iterable[QPoly]) -> QPoly:
    """Sum an iterable of polynomials by accumulating coefficient lists."""
    acc: list[int] = []
    for p in polys:
        cs = p.coeffs
        if len(cs) > len(acc):
            acc.extend([0] * (len(cs) - len(acc)))
        for i, c in enumerate(cs):
            acc[i] += c
    return QPoly(acc)


def from_powers(powers: Iterable[int]) -> QPoly:
    """The generating polynomial sum(q**p for p in powers)."""
    acc: list[int] = []
    for p in powers:
        if p >= len(acc):
            acc.extend([0] * (p + 1 - len(acc)))
        acc[p] += 1
    return QPoly(acc)
