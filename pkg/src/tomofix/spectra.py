"""Characteristic Laurent polynomials of windows and torus zero loci of
punctured square windows."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .core import Window, puncture, square_window
from .cyclotomic import CycElem, RootOfUnity, check_conductor


@dataclass(frozen=True)
class LaurentPoly2:
    """Integer Laurent polynomial in x, y; ``terms`` maps (e1, e2) -> coefficient."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[tuple[int, int], int] = {}
        for e, c in items:
            e = (int(e[0]), int(e[1]))
            merged[e] = merged.get(e, 0) + c
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def __add__(self, other: LaurentPoly2) -> LaurentPoly2:
        return LaurentPoly2(list(self.terms) + list(other.terms))

    def __sub__(self, other: LaurentPoly2) -> LaurentPoly2:
        return LaurentPoly2(list(self.terms) + [(e, -c) for e, c in other.terms])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.terms:
            mono = "*".join(
                s for s in (_pow_str("x", a), _pow_str("y", b)) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _pow_str(v: str, e: int) -> str:
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


def char_poly(w: Window) -> LaurentPoly2:
    return LaurentPoly2({p: 1 for p in w.points})


def star(f: LaurentPoly2) -> LaurentPoly2:
    """f(1/x, 1/y)."""
    return LaurentPoly2({(-a, -b): c for (a, b), c in f.terms})


@dataclass(frozen=True)
class TorusPoint:
    x: RootOfUnity
    y: RootOfUnity

    @classmethod
    def of(cls, n: int, a: int, b: int) -> TorusPoint:
        return cls(RootOfUnity.of(n, a), RootOfUnity.of(n, b))

    @property
    def conductor(self) -> int:
        return math.lcm(self.x.order, self.y.order)

    def sort_key(self) -> tuple:
        return (self.x.order, self.x.k, self.y.angle())

    def conjugate(self) -> TorusPoint:
        return TorusPoint(self.x.conjugate(), self.y.conjugate())

    def swap(self) -> TorusPoint:
        return TorusPoint(self.y, self.x)

    def galois(self, sigma: int) -> TorusPoint:
        return TorusPoint(self.x.galois(sigma), self.y.galois(sigma))

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def evaluate(f: LaurentPoly2, p: TorusPoint, conductor: int | None = None) -> CycElem:
    """Exact value f(p.x, p.y) in Q(zeta_M), M the common conductor of p."""
    m = conductor or p.conductor
    ex, ey = p.x.exponent_in(m), p.y.exponent_in(m)
    counts: dict[int, int] = {}
    for (a, b), c in f.terms:
        e = (a * ex + b * ey) % m
        counts[e] = counts.get(e, 0) + c
    return CycElem.from_power_counts(m, counts)


def punctured_square_poly(n: int) -> LaurentPoly2:
    return char_poly(puncture(square_window(n)))


def sorted_points(points: Iterable[TorusPoint]) -> list[TorusPoint]:
    return sorted(set(points), key=TorusPoint.sort_key)


def square_zero_locus(n: int) -> list[TorusPoint]:
    """Closed-form torus zero locus of the punctured square window S(n)*.

    Union over c in mu_{n-1} of S1(c) = {x, y in mu*_{n-1} : xy = c} and
    S2(c) = {x, y in mu*_{(n-1)(n+1)} : xy = c, x^(n+1) = c}.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    m = (n - 1) * (n + 1)
    check_conductor(m)
    step = n + 1  # mu_{n-1} sits in mu_m as multiples of n+1
    found: set[TorusPoint] = set()
    for a in range(n - 1):
        c = a * step
        # S1(c): x = zeta_{n-1}^u, u != 0, y = c / x != 1
        for u in range(1, n - 1):
            ex = u * step
            ey = (c - ex) % m
            if ey != 0:
                found.add(TorusPoint.of(m, ex, ey))
        # S2(c)
        for ex in range(1, m):
            if (ex * (n + 1) - c) % m == 0:
                ey = (c - ex) % m
                if ey != 0:
                    found.add(TorusPoint.of(m, ex, ey))
    poly = punctured_square_poly(n)
    for p in found:
        if not evaluate(poly, p).is_zero():
            raise AssertionError(f"{p} is not a zero of m_S({n})*")
    return sorted_points(found)


def zero_locus_oracle(n: int, threads: int = 1) -> list[TorusPoint]:
    """Exhaustive search over mu_M x mu_M, M = (n-1)(n+1), by exact evaluation."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    m = (n - 1) * (n + 1)
    check_conductor(m)
    poly = punctured_square_poly(n)

    def scan(a: int) -> list[TorusPoint]:
        out = []
        for b in range(m):
            p = TorusPoint.of(m, a, b)
            if evaluate(poly, p, m).is_zero():
                out.append(p)
        return out

    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            chunks = list(ex.map(scan, range(m)))
    else:
        chunks = [scan(a) for a in range(m)]
    return sorted_points(p for chunk in chunks for p in chunk)


def numeric_scan(n: int, grid: int = 2000, tol: float = 1e-6) -> list[tuple[float, float]]:
    """Angles (as turns) of grid minima of |m_S(n)*| below ``tol``.

    Floating point; a non-gating sanity check of the exact locus.
    """
    import numpy as np

    t = np.arange(grid) / grid
    z = np.exp(2j * np.pi * t)
    s = np.zeros_like(z)
    for e in range(n):
        s = s + z**e
    vals = np.abs(np.outer(s, s) - 1.0)
    hits = np.argwhere(vals < tol)
    return [(float(t[i]), float(t[j])) for i, j in hits]


def locus_angles(points: Iterable[TorusPoint]) -> list[tuple[Fraction, Fraction]]:
    return [(p.x.angle(), p.y.angle()) for p in points]
