"""Bounded fixed arrays of punctured square windows: character arrays, their
periods, and rational bases built from Galois orbits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import LatticePoint, TorusArray, delta, puncture, square_window
from .cyclotomic import CycElem
from .linalg import rank
from .spectra import TorusPoint, square_zero_locus


class RankDeficiencyError(RuntimeError):
    """Orbit averages and their translates failed to span the bounded solutions."""


@dataclass(frozen=True)
class CharacterArray:
    point: TorusPoint
    array: TorusArray

    @property
    def dims(self) -> tuple[int, int]:
        return self.array.dims


def fundamental_dims(p: TorusPoint) -> tuple[int, int]:
    return (p.x.order, p.y.order)


def character_array(p: TorusPoint, dims: tuple[int, int] | None = None) -> CharacterArray:
    """The array (i, j) -> x^i y^j on a torus whose dims are multiples of the orders."""
    base = fundamental_dims(p)
    dims = dims or base
    if dims[0] % base[0] or dims[1] % base[1]:
        raise ValueError(f"dims {dims} are not multiples of the point's orders {base}")
    m = p.conductor
    ex, ey = p.x.exponent_in(m), p.y.exponent_in(m)
    # one CycElem per residue, shared across cells
    powers = [CycElem.from_power_counts(m, {e: 1}) for e in range(m)]
    arr = TorusArray.from_function(dims, lambda i, j: powers[(i * ex + j * ey) % m])
    return CharacterArray(p, arr)


def period_lattice(a: CharacterArray) -> tuple[LatticePoint, LatticePoint]:
    p, q = (a.point.x.order, 0), (0, a.point.y.order)
    if not (a.array.has_period(p) and a.array.has_period(q)):
        raise AssertionError("character array is not periodic with its orders")
    return p, q


def bounded_basis(n: int) -> list[CharacterArray]:
    return [character_array(p) for p in square_zero_locus(n)]


def galois_orbits(points: list[TorusPoint]) -> list[list[TorusPoint]]:
    """Orbits under simultaneous zeta -> zeta^sigma, in first-appearance order."""
    if not points:
        return []
    m = math.lcm(*(p.conductor for p in points))
    units = [s for s in range(1, m + 1) if math.gcd(s, m) == 1]
    seen: set[TorusPoint] = set()
    orbits = []
    for p in points:
        if p in seen:
            continue
        orbit = []
        for s in units:
            q = p.galois(s)
            if q not in seen:
                seen.add(q)
                orbit.append(q)
        orbits.append(sorted(orbit, key=TorusPoint.sort_key))
    return orbits


@dataclass(frozen=True)
class RationalBasis:
    n: int
    dims: tuple[int, int]
    arrays: tuple[TorusArray, ...]
    periods: tuple[tuple[LatticePoint, LatticePoint], ...]
    orbit_sizes: tuple[int, ...]


def orbit_average(orbit: list[TorusPoint], dims: tuple[int, int]) -> TorusArray:
    """(1/|orbit|) * sum of the character arrays of the orbit; rational valued."""
    m = math.lcm(*(p.conductor for p in orbit))
    exps = [(p.x.exponent_in(m), p.y.exponent_in(m)) for p in orbit]
    size = len(orbit)

    def value(i: int, j: int) -> Fraction:
        counts: dict[int, int] = {}
        for ex, ey in exps:
            e = (i * ex + j * ey) % m
            counts[e] = counts.get(e, 0) + 1
        return CycElem.from_power_counts(m, counts).to_rational() / size

    return TorusArray.from_function(dims, value)


def rational_basis(n: int) -> RationalBasis:
    """Orbit averages of the zero locus plus horizontal translates T_(t,0),
    t = 0..|orbit|-1, on the fundamental torus (lcm of x-orders, lcm of y-orders)."""
    points = square_zero_locus(n)
    dims = (
        math.lcm(*(p.x.order for p in points)),
        math.lcm(*(p.y.order for p in points)),
    )
    orbits = galois_orbits(points)
    window = puncture(square_window(n))
    arrays, periods = [], []
    for orbit in orbits:
        avg = orbit_average(orbit, dims)
        per = (
            (math.lcm(*(p.x.order for p in orbit)), 0),
            (0, math.lcm(*(p.y.order for p in orbit))),
        )
        for t in range(len(orbit)):
            arr = avg.translate((t, 0))
            if not delta(window, arr).is_zero():
                raise AssertionError("rational basis array is not in the kernel")
            arrays.append(arr)
            periods.append(per)
    r = rank([list(a.values) for a in arrays])
    if r != len(points):
        raise RankDeficiencyError(f"n={n}: rank {r} but the zero locus has {len(points)} points")
    return RationalBasis(n, dims, tuple(arrays), tuple(periods), tuple(len(o) for o in orbits))
