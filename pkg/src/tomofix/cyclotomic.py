"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as an integer numerator vector over a positive common
denominator, in the power basis 1, zeta, ..., zeta^(phi(N)-1) modulo the N-th
cyclotomic polynomial. The representation is canonical, so equality within a
conductor is tuple equality.
"""

from __future__ import annotations

import cmath
import math
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Any, Iterable, Mapping

import numpy as np

DEFAULT_CONDUCTOR_CAP = 10080

_lock = threading.Lock()
_phi_polys: dict[int, tuple[int, ...]] = {1: (-1, 1)}
_power_tables: dict[int, tuple[tuple[int, ...], ...]] = {}
_power_arrays: dict[int, np.ndarray] = {}


class ConductorCapError(ValueError):
    pass


def conductor_cap() -> int:
    raw = os.environ.get("TOMOFIX_CONDUCTOR_CAP")
    return int(raw) if raw else DEFAULT_CONDUCTOR_CAP


def check_conductor(n: int) -> None:
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    cap = conductor_cap()
    if n > cap:
        raise ConductorCapError(f"conductor {n} exceeds cap {cap}")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; integer long division with zero remainder
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    check_conductor(n)
    cached = _phi_polys.get(n)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_poly(d))
    result = tuple(poly)
    with _lock:
        _phi_polys.setdefault(n, result)
    return _phi_polys[n]


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows are the reductions of x^k mod Phi_n for k = 0..n-1."""
    cached = _power_tables.get(n)
    if cached is not None:
        return cached
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1) if d > 0 else []
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1] if d else 0
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi)]
    table = tuple(rows)
    with _lock:
        _power_tables.setdefault(n, table)
        _power_arrays.setdefault(n, np.array(table, dtype=np.int64).reshape(n, d))
    return _power_tables[n]


def _reduce_mod_phi(coeffs: list[int], n: int) -> list[int]:
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            base = i - d
            for j in range(d):
                coeffs[base + j] -= c * phi[j]
    out = coeffs[:d]
    out.extend([0] * (d - len(out)))
    return out


def _normalise(num: Iterable[int], den: int) -> tuple[tuple[int, ...], int]:
    num = tuple(num)
    if den < 0:
        num, den = tuple(-c for c in num), -den
    g = reduce(math.gcd, num, den)
    if g > 1:
        num, den = tuple(c // g for c in num), den // g
    if not any(num):
        den = 1
    return num, den


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _normalised_trace_of_power(n: int, i: int) -> Fraction:
    # Tr(zeta_n^i) / phi(n) is the Ramanujan sum c_n(i) / phi(n) = mu(m)/phi(m), m = n/gcd
    m = n // math.gcd(i, n)
    return Fraction(_mobius(m), euler_phi(m))


class CycElem:
    """Element of Q(zeta_N)."""

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, num: Iterable[int], den: int = 1) -> None:
        check_conductor(conductor)
        num = list(num)
        d = euler_phi(conductor)
        if len(num) != d:
            num = _reduce_mod_phi(num + [0] * max(0, d - len(num)), conductor)
        self.num, self.den = _normalise(num, den)
        self.conductor = conductor

    @classmethod
    def _raw(cls, conductor: int, num: tuple[int, ...], den: int) -> CycElem:
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.num, obj.den = _normalise(num, den)
        return obj

    # construction

    @classmethod
    def from_rational(cls, r: int | Fraction, conductor: int = 1) -> CycElem:
        r = Fraction(r)
        d = euler_phi(conductor)
        return cls._raw(conductor, (r.numerator,) + (0,) * (d - 1), r.denominator)

    @classmethod
    def zero(cls, conductor: int = 1) -> CycElem:
        return cls.from_rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> CycElem:
        return cls.from_rational(1, conductor)

    @classmethod
    def from_power_counts(
        cls, conductor: int, counts: Mapping[int, int | Fraction] | Iterable[int]
    ) -> CycElem:
        """Build sum c_e * zeta_N^e from exponent -> coefficient data."""
        check_conductor(conductor)
        table = _power_table(conductor)
        d = euler_phi(conductor)
        if not isinstance(counts, Mapping):
            counts = {e: c for e, c in enumerate(counts) if c}
        merged: dict[int, Any] = {}
        for e, c in counts.items():
            if c:
                k = e % conductor
                merged[k] = merged.get(k, 0) + c
        if any(isinstance(c, Fraction) for c in merged.values()):
            den = reduce(math.lcm, (Fraction(c).denominator for c in merged.values()), 1)
            merged = {k: int(Fraction(c) * den) for k, c in merged.items()}
        else:
            den = 1
        if len(merged) > 8 and d > 4:
            bound = max(1, int(np.abs(_power_arrays[conductor]).max()))
            if bound * sum(abs(c) for c in merged.values()) < 2**62:
                vec = np.zeros(conductor, dtype=np.int64)
                for k, c in merged.items():
                    vec[k] = c
                acc = (vec @ _power_arrays[conductor]).tolist()
                return cls._raw(conductor, tuple(acc), den)
        acc = [0] * d
        for k, c in merged.items():
            row = table[k]
            for j in range(d):
                if row[j]:
                    acc[j] += c * row[j]
        return cls._raw(conductor, tuple(acc), den)

    # basic queries

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def normalised_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of conductor."""
        total = Fraction(0)
        for i, c in enumerate(self.num):
            if c:
                total += c * _normalised_trace_of_power(self.conductor, i)
        return total / self.den

    # embeddings

    def embed(self, conductor: int) -> CycElem:
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot embed conductor {self.conductor} into {conductor}")
        step = conductor // self.conductor
        out = CycElem.from_power_counts(
            conductor, {i * step: c for i, c in enumerate(self.num) if c}
        )
        return CycElem._raw(conductor, out.num, out.den * self.den)

    def _align(self, other: Any) -> tuple[CycElem, CycElem] | None:
        if isinstance(other, CycElem):
            if other.conductor == self.conductor:
                return self, other
            n = math.lcm(self.conductor, other.conductor)
            check_conductor(n)
            return self.embed(n), other.embed(n)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self, CycElem.from_rational(other, self.conductor)
        return None

    # arithmetic

    def __add__(self, other: Any) -> CycElem:
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return CycElem._raw(a.conductor, tuple(x + y for x, y in zip(a.num, b.num)), a.den)
        return CycElem._raw(
            a.conductor,
            tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num)),
            a.den * b.den,
        )

    __radd__ = __add__

    def __neg__(self) -> CycElem:
        return CycElem._raw(self.conductor, tuple(-x for x in self.num), self.den)

    def __sub__(self, other: Any) -> CycElem:
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        return pair[0] + (-pair[1])

    def __rsub__(self, other: Any) -> CycElem:
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        return pair[1] + (-pair[0])

    def __mul__(self, other: Any) -> CycElem:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            r = Fraction(other)
            return CycElem._raw(
                self.conductor,
                tuple(x * r.numerator for x in self.num),
                self.den * r.denominator,
            )
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = a.conductor
        d = len(a.num)
        prod = [0] * max(1, 2 * d - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        return CycElem._raw(n, tuple(_reduce_mod_phi(prod, n)), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> CycElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycElem.from_rational(1 / self.to_rational(), self.conductor)
        # extended Euclid over Q[x] against Phi_N
        n = self.conductor
        r0 = [Fraction(c) for c in cyclotomic_poly(n)]
        r1 = [Fraction(c, self.den) for c in self.num]
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        _trim(r1)
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        coeffs = [x / c for x in s1]
        den = reduce(math.lcm, (x.denominator for x in coeffs), 1)
        return CycElem(n, [int(x * den) for x in coeffs], den)

    def __truediv__(self, other: Any) -> CycElem:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        return pair[0] * pair[1].inverse()

    def __rtruediv__(self, other: Any) -> CycElem:
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        return pair[1] * pair[0].inverse()

    def __pow__(self, e: int) -> CycElem:
        if e < 0:
            return self.inverse() ** (-e)
        result = CycElem.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def galois(self, sigma: int) -> CycElem:
        """Image under zeta -> zeta^sigma, sigma a unit mod the conductor."""
        n = self.conductor
        if math.gcd(sigma, n) != 1:
            raise ValueError(f"{sigma} is not a unit mod {n}")
        out = CycElem.from_power_counts(n, {(i * sigma) % n: c for i, c in enumerate(self.num) if c})
        return CycElem._raw(n, out.num, out.den * self.den)

    def conjugate(self) -> CycElem:
        return self.galois(-1)

    # comparisons

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycElem) and other.conductor == self.conductor:
            return self.den == other.den and self.num == other.num
        try:
            pair = self._align(other)
        except ValueError:
            return False
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.den == b.den and a.num == b.num

    def __hash__(self) -> int:
        return hash(self.normalised_trace())

    def __bool__(self) -> bool:
        return not self.is_zero()

    # display / serialisation

    def approx_complex(self) -> complex:
        n = self.conductor
        return sum(
            (c * cmath.exp(2j * math.pi * i / n) for i, c in enumerate(self.num) if c), 0j
        ) / self.den

    def __repr__(self) -> str:
        return f"CycElem({self.conductor}, {list(self.num)}, {self.den})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, raw: dict) -> CycElem:
        coeffs = [Fraction(c) for c in raw["coeffs"]]
        den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
        return cls(int(raw["conductor"]), [int(c * den) for c in coeffs], den)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    _trim(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        _trim(a)
    return _trim(q), _trim(a) if a else [Fraction(0)]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def root_of_unity(n: int, k: int = 1) -> CycElem:
    """zeta_n^k in conductor n."""
    if n < 1:
        raise ValueError(f"root_of_unity needs n >= 1, got {n}")
    return CycElem.from_power_counts(n, {k % n: 1})


def order_of(u: CycElem) -> int:
    """Multiplicative order of a root of unity."""
    bound = math.lcm(2, u.conductor)
    if u.is_zero() or u ** bound != 1:
        raise ValueError(f"{u} is not a root of unity")
    for m in _divisors(bound):
        if u ** m == 1:
            return m
    raise AssertionError("unreachable")


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """zeta_order^k with gcd(k, order) = 1, i.e. exp(2*pi*i*k/order)."""

    order: int
    k: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be positive")
        if not (0 <= self.k < self.order) or math.gcd(self.k, self.order) != 1:
            raise ValueError(f"({self.order}, {self.k}) is not reduced; use RootOfUnity.of")

    @classmethod
    def of(cls, n: int, k: int) -> RootOfUnity:
        if n < 1:
            raise ValueError("n must be positive")
        k %= n
        g = math.gcd(k, n)
        return cls(n // g, k // g)

    @classmethod
    def from_elem(cls, u: CycElem) -> RootOfUnity:
        m = order_of(u)
        for k in range(m):
            if math.gcd(k, m) == 1 and root_of_unity(m, k) == u:
                return cls(m, k)
        raise AssertionError("unreachable")

    def exponent_in(self, conductor: int) -> int:
        if conductor % self.order:
            raise ValueError(f"order {self.order} does not divide {conductor}")
        return self.k * (conductor // self.order)

    def elem(self, conductor: int | None = None) -> CycElem:
        n = self.order if conductor is None else conductor
        return root_of_unity(n, self.exponent_in(n))

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        n = math.lcm(self.order, other.order)
        return RootOfUnity.of(n, self.exponent_in(n) + other.exponent_in(n))

    def __pow__(self, e: int) -> RootOfUnity:
        return RootOfUnity.of(self.order, self.k * e)

    def conjugate(self) -> RootOfUnity:
        return RootOfUnity.of(self.order, -self.k)

    def galois(self, sigma: int) -> RootOfUnity:
        return RootOfUnity.of(self.order, self.k * sigma)

    def angle(self) -> Fraction:
        return Fraction(self.k, self.order)

    def approx_complex(self) -> complex:
        return cmath.exp(2j * math.pi * self.k / self.order)

    def to_json(self) -> dict:
        return {"N": self.order, "k": self.k}

    def __str__(self) -> str:
        if self.order == 1:
            return "1"
        if self.order == 2:
            return "-1"
        return f"z{self.order}^{self.k}" if self.k != 1 else f"z{self.order}"
