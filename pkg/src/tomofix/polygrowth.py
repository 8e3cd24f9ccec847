"""Polynomial-growth fixed arrays.

For a zero ``p`` of the characteristic polynomial of a window, the shifted
polynomial m(w + p) is turned into a constant-coefficient differential
operator D_p by w_i -> -d_i. Polynomial solutions g of D_p g = 0 then give
kernel arrays k -> sum_s c_s (-k)^(rising s) p^(k - s), where c_s are the
coefficients of g read as an operator (w_i -> d_i).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .core import PatchArray, Window, delta_on_interior
from .cyclotomic import CycElem
from .linalg import nullspace, rank
from .spectra import TorusPoint

Exp = tuple[int, int]


def _as_cyc(c: Any) -> CycElem:
    if isinstance(c, CycElem):
        return c
    return CycElem.from_rational(Fraction(c), 1)


class _Sparse2:
    """Sparse map from exponent pairs to CycElem coefficients, zeros dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, Any] | Iterable[tuple[Exp, Any]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Exp, CycElem] = {}
        for e, c in items:
            e = (int(e[0]), int(e[1]))
            if e[0] < 0 or e[1] < 0:
                raise ValueError(f"negative exponent {e}")
            merged[e] = merged[e] + _as_cyc(c) if e in merged else _as_cyc(c)
        self.terms = {e: c for e, c in sorted(merged.items()) if not c.is_zero()}

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.terms.keys() == other.terms.keys() and all(
            self.terms[e] == other.terms[e] for e in self.terms
        )

    def __hash__(self) -> int:
        return hash(tuple((e, hash(c)) for e, c in self.terms.items()))

    def __add__(self, other):
        return type(self)(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return type(self)(list(self.terms.items()) + [(e, -c) for e, c in other.terms.items()])

    def scale(self, c: Any):
        return type(self)({e: v * c for e, v in self.terms.items()})

    def support(self) -> set[Exp]:
        return set(self.terms)

    def coefficient(self, e: Exp) -> CycElem:
        return self.terms.get(e, CycElem.zero())

    def conductor(self) -> int:
        return math.lcm(1, *(c.conductor for c in self.terms.values()))

    def is_zero(self) -> bool:
        return not self.terms

    def _str(self, names: tuple[str, str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                s for s in (_pw(names[0], a), _pw(names[1], b)) if s
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _pw(v: str, e: int) -> str:
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


class Poly2(_Sparse2):
    """Polynomial in local coordinates w1, w2 (printed as x, y)."""

    __slots__ = ()

    @property
    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def __mul__(self, other: Poly2) -> Poly2:
        out: list[tuple[Exp, CycElem]] = []
        for (a, b), c in self.terms.items():
            for (u, v), d in other.terms.items():
                out.append(((a + u, b + v), c * d))
        return Poly2(out)

    def __pow__(self, e: int) -> Poly2:
        r = Poly2({(0, 0): 1})
        for _ in range(e):
            r = r * self
        return r

    def __str__(self) -> str:
        return self._str(("x", "y"))

    def __repr__(self) -> str:
        return f"Poly2({self})"


class DiffOp2(_Sparse2):
    """Constant-coefficient operator sum c_s d1^s1 d2^s2."""

    __slots__ = ()

    def __mul__(self, other: DiffOp2) -> DiffOp2:
        return DiffOp2((Poly2(self.terms) * Poly2(other.terms)).terms)

    def __str__(self) -> str:
        return self._str(("d1", "d2"))

    def __repr__(self) -> str:
        return f"DiffOp2({self})"


X = Poly2({(1, 0): 1})
Y = Poly2({(0, 1): 1})
D1 = DiffOp2({(1, 0): 1})
D2 = DiffOp2({(0, 1): 1})


def const(c: Any) -> Poly2:
    return Poly2({(0, 0): c})


def shift_char_poly(window: Window, p: TorusPoint) -> Poly2:
    """m_W(w + p) expanded in w; the constant term is m_W(p)."""
    if any(a < 0 or b < 0 for a, b in window.points):
        raise ValueError("shift_char_poly needs a window with nonnegative coordinates")
    m = p.conductor
    ex, ey = p.x.exponent_in(m), p.y.exponent_in(m)
    counts: dict[Exp, dict[int, int]] = {}
    for e1, e2 in window.points:
        for s1 in range(e1 + 1):
            for s2 in range(e2 + 1):
                mult = math.comb(e1, s1) * math.comb(e2, s2)
                power = ((e1 - s1) * ex + (e2 - s2) * ey) % m
                bucket = counts.setdefault((s1, s2), {})
                bucket[power] = bucket.get(power, 0) + mult
    g = Poly2({s: CycElem.from_power_counts(m, c) for s, c in counts.items()})
    if not g.coefficient((0, 0)).is_zero():
        warnings.warn(f"{p} is not a zero of the window polynomial", stacklevel=2)
    return g


def f_minus(g: Poly2) -> DiffOp2:
    """w^s -> (-1)^(s1+s2) d^s."""
    return DiffOp2({s: c if (s[0] + s[1]) % 2 == 0 else -c for s, c in g.terms.items()})


def f_minus_inv(g: Poly2) -> DiffOp2:
    """w^s -> d^s, coefficients unchanged."""
    return DiffOp2(g.terms)


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


def apply(d: DiffOp2, g: Poly2) -> Poly2:
    out: list[tuple[Exp, CycElem]] = []
    for (s1, s2), c in d.terms.items():
        for (t1, t2), a in g.terms.items():
            if t1 >= s1 and t2 >= s2:
                f = _falling(t1, s1) * _falling(t2, s2)
                out.append(((t1 - s1, t2 - s2), c * a * f))
    return Poly2(out)


def monomials(n: int) -> list[Exp]:
    """Exponents of degree <= n in graded lexicographic order."""
    return [(d - b, b) for d in range(n + 1) for b in range(d + 1)]


def simplex(n: int) -> set[Exp]:
    return set(monomials(n)) if n >= 0 else set()


@dataclass(frozen=True)
class SolutionSpace:
    degree_bound: int
    basis: tuple[Poly2, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _operator_matrix(d: DiffOp2, n: int) -> tuple[list[list[CycElem]], list[Exp]]:
    mons = monomials(n)
    index = {e: i for i, e in enumerate(mons)}
    cond = d.conductor()
    zero = CycElem.zero(cond)
    rows = [[zero] * len(mons) for _ in mons]
    for col, t in enumerate(mons):
        image = apply(d, Poly2({t: 1}))
        for e, c in image.terms.items():
            rows[index[e]][col] = c.embed(math.lcm(cond, c.conductor)) if c.conductor != cond else c
    return rows, mons


def sol_space(d: DiffOp2, n: int) -> SolutionSpace:
    """Kernel of D acting on polynomials of degree <= n."""
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    rows, mons = _operator_matrix(d, n)
    cond = d.conductor()
    rows = [r for r in rows if any(not c.is_zero() for c in r)]
    vecs = nullspace(rows, len(mons), CycElem.zero(cond), CycElem.one(cond))
    basis = tuple(Poly2(zip(mons, v)) for v in vecs)
    for g in basis:
        if not apply(d, g).is_zero():
            raise AssertionError("kernel vector is not a solution")
    return SolutionSpace(n, basis)


def poly_vector(g: Poly2, n: int) -> list[CycElem]:
    cond = max(1, g.conductor())
    return [g.coefficient(e).embed(cond) if e in g.terms else CycElem.zero(cond) for e in monomials(n)]


def _vectors(polys: Iterable[Poly2], n: int, cond: int) -> list[list[CycElem]]:
    zero = CycElem.zero(cond)
    return [[g.terms[e].embed(cond) if e in g.terms else zero for e in monomials(n)] for g in polys]


def in_solution_span(space: SolutionSpace, g: Poly2) -> bool:
    cond = math.lcm(g.conductor(), *(b.conductor() for b in space.basis)) if space.basis else g.conductor()
    n = max(space.degree_bound, g.degree)
    base = _vectors(space.basis, n, cond)
    return rank(base + _vectors([g], n, cond)) == rank(base) if base else g.is_zero()


def graded_representatives(d: DiffOp2, n: int) -> list[list[Poly2]]:
    """For each degree t <= n, solutions completing Sol_{<=t-1} to Sol_{<=t}."""
    out: list[list[Poly2]] = []
    chosen: list[Poly2] = []
    cond = d.conductor()
    for t in range(n + 1):
        space = sol_space(d, t)
        new = []
        for g in space.basis:
            trial = chosen + [g]
            if rank(_vectors(trial, n, cond)) == len(trial):
                chosen.append(g)
                new.append(g)
        out.append(new)
    return out


def dim_formula(d: DiffOp2, n: int) -> int:
    """max{(n+1)(n+2)/2 - #((simplex_n - supp D) cap Z^2_{>=0}), 0}."""
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    diffs = {
        (i[0] - s[0], i[1] - s[1])
        for i in simplex(n)
        for s in d.support()
    }
    nonneg = {e for e in diffs if e[0] >= 0 and e[1] >= 0}
    return max((n + 1) * (n + 2) // 2 - len(nonneg), 0)


def rising_factorial(k: int, s: int) -> int:
    """(k+1)(k+2)...(k+s); 1 when s = 0."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    out = 1
    for t in range(1, s + 1):
        out *= k + t
    return out


def operator_at(window: Window, p: TorusPoint) -> DiffOp2:
    return f_minus(shift_char_poly(window, p))


def array_value(p: TorusPoint, g: Poly2, k: Exp) -> CycElem:
    """sum_s c_s (-k)^(rising s) p^(k - s) at a single cell."""
    m = p.conductor
    ex, ey = p.x.exponent_in(m), p.y.exponent_in(m)
    total = CycElem.zero(m)
    for (s1, s2), c in f_minus_inv(g).terms.items():
        rf = rising_factorial(-k[0], s1) * rising_factorial(-k[1], s2)
        if rf == 0:
            continue
        power = CycElem.from_power_counts(m, {((k[0] - s1) * ex + (k[1] - s2) * ey) % m: rf})
        total = total + c * power
    return total


def array_from_solution(
    p: TorusPoint,
    g: Poly2,
    region: tuple[int, int, int, int],
    window: Window | None = None,
) -> PatchArray:
    """Step-(E) array on the rectangle (imin, imax, jmin, jmax).

    With ``window`` given, asserts Delta_window(a) = 0 on every interior cell.
    """
    imin, imax, jmin, jmax = region
    arr = PatchArray.from_function(
        imin, imax, jmin, jmax, lambda i, j: array_value(p, g, (i, j)), tag=f"{p}: {g}"
    )
    if window is not None:
        interior = delta_on_interior(window, arr)
        if not interior:
            raise ValueError("region too small to have an interior for this window")
        bad = [k for k, v in interior.items() if not v.is_zero()]
        if bad:
            raise AssertionError(f"synthesised array not in the kernel at {bad[:3]}")
    return arr
