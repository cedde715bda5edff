"""Exact numbers of the form ``q + c1*sqrt(m1) + c2*sqrt(m2) + ...``.

Every eigenvalue that appears here is an integer or ``±sqrt(ab)`` (from a
complete bipartite component), and every Weyl bound is a sum of at most one
integer and two such roots.  Ordering is decided exactly: a float comparison
is trusted only when the gap is far above rounding error, otherwise the sign
is settled by squaring.
"""

from __future__ import annotations

import decimal
import math
from functools import total_ordering
from typing import Iterable


def squarefree_split(m: int) -> tuple[int, int]:
    """``m = k*k*r`` with ``r`` squarefree; returns ``(k, r)``."""
    if m < 0:
        raise ValueError("radicand must be non-negative")
    if m == 0:
        return 0, 1
    k, r, p = 1, m, 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            k *= p
        p += 1
    return k, r


def _sign_int(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_one_root(a: int, b: int, m: int) -> int:
    """Sign of ``a + b*sqrt(m)`` (``m`` squarefree, > 1)."""
    sa, sb = _sign_int(a), _sign_int(b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 m
    return sa * _sign_int(a * a - b * b * m)


@total_ordering
class SurdValue:
    """Immutable ``const + sum(coef * sqrt(radicand))`` with squarefree radicands > 1."""

    __slots__ = ("const", "terms", "_approx")

    def __init__(self, const: int = 0, terms: Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        c = int(const)
        for radicand, coef in terms:
            k, r = squarefree_split(int(radicand))
            if k == 0 or coef == 0:
                continue
            if r == 1:
                c += coef * k
            else:
                acc[r] = acc.get(r, 0) + coef * k
        self.const = c
        self.terms = tuple(sorted((r, a) for r, a in acc.items() if a != 0))
        self._approx = c + math.fsum(a * math.sqrt(r) for r, a in self.terms)

    @classmethod
    def sqrt(cls, m: int, scale: int = 1) -> "SurdValue":
        return cls(0, [(m, scale)])

    @property
    def is_integer(self) -> bool:
        return not self.terms

    def __int__(self) -> int:
        if self.terms:
            raise ValueError(f"{self} is not an integer")
        return self.const

    def __float__(self) -> float:
        return self._approx

    def __hash__(self) -> int:
        return hash((self.const, self.terms))

    def __repr__(self) -> str:
        return f"SurdValue({self})"

    def __str__(self) -> str:
        parts = []
        if self.const or not self.terms:
            parts.append(str(self.const))
        for r, a in self.terms:
            mag = f"sqrt({r})" if abs(a) == 1 else f"{abs(a)}*sqrt({r})"
            if not parts:
                parts.append(mag if a > 0 else f"-{mag}")
            else:
                parts.append(("+ " if a > 0 else "- ") + mag)
        return " ".join(parts)

    @staticmethod
    def _coerce(other) -> "SurdValue":
        if isinstance(other, SurdValue):
            return other
        if isinstance(other, int):
            return SurdValue(other)
        return NotImplemented

    def __add__(self, other) -> "SurdValue":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SurdValue(self.const + other.const, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "SurdValue":
        return SurdValue(-self.const, [(r, -a) for r, a in self.terms])

    def __sub__(self, other) -> "SurdValue":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SurdValue":
        return (-self) + other

    def sign(self) -> int:
        x = self._approx
        scale = abs(self.const) + sum(abs(a) * math.sqrt(r) for r, a in self.terms)
        if abs(x) > 1e-9 * (1.0 + scale):
            return 1 if x > 0 else -1
        return self.exact_sign()

    def exact_sign(self) -> int:
        """Sign without floating point: squaring for up to two radicals, growing decimal precision beyond."""
        t = self.terms
        if not t:
            return _sign_int(self.const)
        if len(t) == 1:
            return _sign_one_root(self.const, t[0][1], t[0][0])
        if len(t) == 2:
            (m1, b), (m2, c) = t
            a = self.const
            # X = a + b sqrt(m1), Y = c sqrt(m2); sign(X + Y)
            sx = _sign_one_root(a, b, m1)
            sy = _sign_int(c)
            if sx == 0 or sx == sy:
                return sy if sx == 0 else sx
            # opposite signs: compare X^2 = a^2 + b^2 m1 + 2ab sqrt(m1) with Y^2 = c^2 m2
            d = _sign_one_root(a * a + b * b * m1 - c * c * m2, 2 * a * b, m1)
            return sx * d
        return self._sign_by_precision()

    def _sign_by_precision(self) -> int:
        # Square roots of distinct squarefree integers > 1 are linearly
        # independent over Q together with 1, so a value with any radical
        # term is nonzero and enough digits always expose its sign.
        digits = 40
        while True:
            with decimal.localcontext() as ctx:
                ctx.prec = digits + 10
                x = decimal.Decimal(self.const) + sum(
                    (decimal.Decimal(a) * decimal.Decimal(r).sqrt() for r, a in self.terms),
                    decimal.Decimal(0),
                )
                size = abs(self.const) + sum(abs(a) * r for r, a in self.terms) + 1
                if abs(x) > decimal.Decimal(size) * decimal.Decimal(10) ** (-digits):
                    return 1 if x > 0 else -1
            digits *= 2

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.const == other.const and self.terms == other.terms

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def to_json(self) -> dict:
        if not self.terms:
            return {"int": self.const}
        if self.const == 0 and len(self.terms) == 1:
            r, a = self.terms[0]
            return {"surd": {"scale": a, "radicand": r}}
        return {
            "sum": {
                "int": self.const,
                "surds": [{"scale": a, "radicand": r} for r, a in self.terms],
            }
        }

    @classmethod
    def from_json(cls, data: dict) -> "SurdValue":
        if "int" in data:
            return cls(int(data["int"]))
        if "surd" in data:
            s = data["surd"]
            return cls(0, [(int(s["radicand"]), int(s["scale"]))])
        body = data["sum"]
        return cls(int(body["int"]), [(int(s["radicand"]), int(s["scale"])) for s in body["surds"]])


def as_surd(x) -> SurdValue:
    return x if isinstance(x, SurdValue) else SurdValue(int(x))
