"""The punctured square-window operator on the p-torus over F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import TorusArray, Window, puncture, square_window
from .rings import IntMod, require_odd_prime

Matrix = list[list[int]]


@dataclass(frozen=True)
class FpMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def as_lists(self) -> Matrix:
        return [list(r) for r in self.rows]

    def apply(self, v: list[int]) -> list[int]:
        return [sum(a * b for a, b in zip(r, v)) % self.p for r in self.rows]


def window_matrix(w: Window, p: int) -> FpMatrix:
    """Column k = i + p*j holds the coordinates of Delta_w(e_k) on the p-torus.

    Delta_w(e_k) at cell m is the number of window points q with m + q = k.
    """
    size = p * p
    rows = [[0] * size for _ in range(size)]
    for mj in range(p):
        for mi in range(p):
            m = mi + p * mj
            for qi, qj in w.points:
                k = (mi + qi) % p + p * ((mj + qj) % p)
                rows[m][k] += 1
    return FpMatrix(p, tuple(tuple(x % p for x in r) for r in rows))


def rep_matrix(n: int, p: int) -> FpMatrix:
    require_odd_prime(p)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return window_matrix(puncture(square_window(n)), p)


def rref_mod_p(m: FpMatrix) -> tuple[FpMatrix, int]:
    p = m.p
    a = m.as_lists()
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        row_r = a[r]
        for i in range(nrows):
            f = a[i][c]
            if i != r and f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], row_r)]
        r += 1
        if r == nrows:
            break
    return FpMatrix(p, tuple(tuple(row) for row in a)), r


def pivot_columns(rref: FpMatrix) -> list[int]:
    out = []
    for row in rref.rows:
        c = next((i for i, x in enumerate(row) if x), None)
        if c is not None:
            out.append(c)
    return out


def det_mod_p(m: FpMatrix) -> int:
    p = m.p
    a = m.as_lists()
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, n):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det % p


def flatten(a: TorusArray) -> list[int]:
    return [int(v) for v in a.values]


def unflatten(v: list[int], p: int) -> TorusArray:
    return TorusArray((p, p), tuple(IntMod(x, p) for x in v))


@dataclass(frozen=True)
class KernelReport:
    p: int
    n: int
    dimension: int
    basis: tuple[TorusArray, ...]
    rref: FpMatrix

    @property
    def rank(self) -> int:
        return self.p * self.p - self.dimension

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "dimension": self.dimension,
            "rank": self.rank,
            "basis": [[[int(v) for v in row] for row in b.rows()] for b in self.basis],
            "rref": [list(r) for r in self.rref.rows],
        }


def kernel(n: int, p: int) -> KernelReport:
    m = rep_matrix(n, p)
    red, r = rref_mod_p(m)
    pivots = pivot_columns(red)
    size = p * p
    basis = []
    for free in (c for c in range(size) if c not in set(pivots)):
        v = [0] * size
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-red.rows[row][free]) % p
        basis.append(unflatten(v, p))
    return KernelReport(p, n, size - r, tuple(basis), red)


def group_det_check(n: int, p: int) -> tuple[int, int, bool]:
    """Determinant of the representation matrix against (n^2 - 1) mod p."""
    direct = det_mod_p(rep_matrix(n, p))
    formula = (n * n - 1) % p
    return direct, formula, direct == formula


@dataclass(frozen=True)
class SweepRow:
    n: int
    kernel_dim: int
    det: int
    formula: int


def theorem41_sweep(p: int) -> list[SweepRow]:
    """Kernel dimension and determinant for n = 2..p-1."""
    require_odd_prime(p)
    out = []
    for n in range(2, p):
        rep = kernel(n, p)
        direct, formula, _ = group_det_check(n, p)
        out.append(SweepRow(n, rep.dimension, direct, formula))
    return out


def reduce_rational_array(a: TorusArray, p: int) -> TorusArray:
    def red(x) -> IntMod:
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"denominator of {x} is divisible by {p}")
        return IntMod(x.numerator * pow(x.denominator, -1, p), p)

    return a.map(red)


def in_span_mod_p(vectors: list[list[int]], v: list[int], p: int) -> bool:
    if not vectors:
        return all(x % p == 0 for x in v)
    base = FpMatrix(p, tuple(tuple(x % p for x in r) for r in vectors))
    aug = FpMatrix(p, base.rows + (tuple(x % p for x in v),))
    return rref_mod_p(aug)[1] == rref_mod_p(base)[1]
