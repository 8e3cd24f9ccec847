"""Balanced zero-sum arrays on the n-torus.

Cells of T_n are numbered ``k = i + n*j``; values live in Z/n^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import TorusArray, Window, degree, puncture, square_window, translate_window
from .modp import kernel
from .rings import IntMod, is_prime


@dataclass(frozen=True)
class ZnArray:
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("n must be >= 3")
        if len(self.values) != self.n * self.n:
            raise ValueError("wrong number of values")
        mod = self.n * self.n
        object.__setattr__(self, "values", tuple(v % mod for v in self.values))

    def __getitem__(self, ij: Sequence[int]) -> int:
        n = self.n
        return self.values[ij[0] % n + n * (ij[1] % n)]

    def to_torus(self) -> TorusArray:
        mod = self.n * self.n
        return TorusArray((self.n, self.n), tuple(IntMod(v, mod) for v in self.values))

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.values[n * j : n * (j + 1)]) for j in range(n)]


@dataclass(frozen=True)
class BalancedCertificate:
    array: ZnArray
    window: Window
    translate_sums: tuple[int, ...]
    balanced: bool

    @property
    def zero_sum(self) -> bool:
        return all(s == 0 for s in self.translate_sums)

    @property
    def valid(self) -> bool:
        return self.balanced and self.zero_sum

    def to_json(self) -> dict:
        n = self.array.n
        return {
            "n": n,
            "window": sorted(list(p) for p in self.window.points),
            "array": self.array.rows(),
            "balanced": self.balanced,
            "zero_sum": self.zero_sum,
            "translate_sums": [
                {"k": [k % n, k // n], "sum": s} for k, s in enumerate(self.translate_sums)
            ],
        }


def is_balanced(a: ZnArray) -> bool:
    return sorted(a.values) == list(range(a.n * a.n))


def translate_sums(a: ZnArray, w: Window) -> tuple[int, ...]:
    t = a.to_torus()
    return tuple(int(degree(w, t, (k % a.n, k // a.n))) for k in range(a.n * a.n))


def is_zero_sum(a: ZnArray, w: Window) -> BalancedCertificate:
    return BalancedCertificate(a, w, translate_sums(a, w), is_balanced(a))


def punctured_square(k: int) -> Window:
    return puncture(square_window(k))


def window_supports(n: int, w: Window) -> list[tuple[int, ...]]:
    """Cell-index supports of the n^2 translates of ``w`` on T_n, by translate index."""
    out = []
    for kj in range(n):
        for ki in range(n):
            cells = translate_window(w, (ki, kj)).points
            out.append(tuple(sorted((i % n) + n * (j % n) for i, j in cells)))
    return out


# search


@dataclass
class SearchReport:
    n: int
    k: int
    status: str  # FOUND, EXHAUSTED-NONE, BUDGET
    nodes: int
    solutions: list[ZnArray] = field(default_factory=list)
    complete: bool = False  # the whole space was searched, so solutions lists them all

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "status": self.status,
            "nodes": self.nodes,
            "solutions": [s.rows() for s in self.solutions],
            "complete": self.complete,
        }


def _echelon_mod(rows: list[list[int]], m: int) -> list[list[int]]:
    """Echelon form over Z/m with annihilator rows (Howell-style).

    For every column c, the returned rows whose first nonzero entry is at or
    after c generate all module elements that vanish before c.
    """
    work = [[x % m for x in r] for r in rows if any(x % m for x in r)]
    ncols = len(rows[0]) if rows else 0
    out: list[list[int]] = []
    for c in range(ncols):
        here = [r for r in work if r[c]]
        rest = [r for r in work if not r[c]]
        if not here:
            work = rest
            continue
        piv = here[0]
        for r in here[1:]:
            # fold r into piv with a unimodular 2x2 step on column c
            a, b = piv[c], r[c]
            g, s, t = _xgcd(a, b)
            u, v = a // g, b // g
            new_piv = [(s * x + t * y) % m for x, y in zip(piv, r)]
            new_r = [(u * y - v * x) % m for x, y in zip(piv, r)]
            piv = new_piv
            if any(new_r):
                rest.append(new_r)
        g = _gcd_mod(piv[c], m)
        if g != piv[c]:
            # scale the pivot to gcd(pivot, m) by a unit
            unit = _unit_to(piv[c], g, m)
            piv = [(unit * x) % m for x in piv]
        ann = [(m // g) * x % m for x in piv]
        if any(ann):
            rest.append(ann)
        out.append(piv)
        work = rest
    return out


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _gcd_mod(a: int, m: int) -> int:
    from math import gcd

    return gcd(a, m)


def _unit_to(a: int, g: int, m: int) -> int:
    """A unit u mod m with u*a == g (mod m), where g = gcd(a, m)."""
    from math import gcd

    mm = m // g
    base = pow(a // g, -1, mm) if mm > 1 else 0
    for t in range(g):
        u = base + t * mm
        if gcd(u, m) == 1:
            return u
    raise AssertionError("no unit found")


def _search(
    n: int,
    w: Window,
    budget: int | None,
    max_solutions: int | None,
) -> tuple[list[tuple[int, ...]], int, bool]:
    """DFS over balanced arrays with value 0 at cell 0, cells in index order.

    Translating a balanced zero-sum array keeps it balanced and zero-sum, so
    fixing 0 at the origin loses nothing. The translate-sum congruences, plus
    the total of a balanced array, are put in echelon form over Z/n^2 with the
    latest cell first; at depth r the rows led by cell r give every linear
    congruence that binds cell r to the cells already placed. Returns
    (solutions, nodes, exhausted).
    """
    size = n * n
    mod = size
    total = size * (size - 1) // 2 % mod
    # column layout: cells in reverse order, then the constant term
    rows = []
    for supp in window_supports(n, w):
        r = [0] * (size + 1)
        for c in supp:
            r[size - 1 - c] += 1
        rows.append(r)
    rows.append([1] * size + [-total])
    rows.append([0] * (size - 1) + [1] + [0])  # cell 0 holds 0
    echelon = _echelon_mod(rows, mod)
    binding: list[list[tuple[int, list[tuple[int, int]], int]]] = [[] for _ in range(size)]
    for r in echelon:
        lead = next(i for i, x in enumerate(r) if x)
        if lead == size:
            return [], 0, True  # inconsistent system
        cell = size - 1 - lead
        others = [(size - 1 - i, r[i]) for i in range(lead + 1, size) if r[i]]
        binding[cell].append((r[lead], others, r[size]))

    assign = [-1] * size
    used = [False] * size
    nodes = 0
    solutions: list[tuple[int, ...]] = []
    stop = False

    def candidates(cell: int) -> list[int]:
        rules = binding[cell]
        if not rules:
            return [v for v in range(size) if not used[v]]
        out = None
        for a, others, const in rules:
            rhs = (-const - sum(coef * assign[c] for c, coef in others)) % mod
            ok = {v for v in range(size) if (a * v - rhs) % mod == 0}
            out = ok if out is None else out & ok
            if not out:
                return []
        return sorted(v for v in out if not used[v])

    def dfs(cell: int) -> None:
        nonlocal nodes, stop
        if cell == size:
            solutions.append(tuple(assign))
            if max_solutions is not None and len(solutions) >= max_solutions:
                stop = True
            return
        for v in candidates(cell):
            if budget is not None and nodes >= budget:
                stop = True
                return
            nodes += 1
            assign[cell] = v
            used[v] = True
            dfs(cell + 1)
            used[v] = False
            assign[cell] = -1
            if stop:
                return

    dfs(0)
    return sorted(solutions), nodes, not stop


def search_balanced(
    n: int, k: int, budget: int | None = None, max_solutions: int | None = None
) -> SearchReport:
    w = punctured_square(k)
    sols, nodes, exhausted = _search(n, w, budget, max_solutions)
    arrays = [ZnArray(n, s) for s in sols]
    for a in arrays:
        if not is_zero_sum(a, w).valid:
            raise AssertionError("search produced an invalid array")
    if arrays:
        status = "FOUND"
    else:
        status = "EXHAUSTED-NONE" if exhausted else "BUDGET"
    return SearchReport(n, k, status, nodes, arrays, exhausted)


def search_balanced_3torus() -> list[ZnArray]:
    """All balanced S(2)*-zero-sum arrays on T_3 with value 0 at the origin."""
    return search_balanced(3, 2).solutions


def brute_force_3torus() -> list[ZnArray]:
    """Filter all 8! assignments by the two predicates directly."""
    w = punctured_square(2)
    out = []
    for perm in itertools.permutations(range(1, 9)):
        a = ZnArray(3, (0,) + perm)
        if is_zero_sum(a, w).zero_sum:
            out.append(a)
    return sorted(out, key=lambda a: a.values)


def support_triples() -> set[frozenset[int]]:
    return {frozenset(s) for s in window_supports(3, punctured_square(2))}


# permutation action on T_3 cells 1..8


@dataclass(frozen=True)
class CellPermutation:
    """Permutation of cells 1..8 (cell 0 fixed); ``images[i]`` = pi(i)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != 9 or self.images[0] != 0 or sorted(self.images) != list(range(9)):
            raise ValueError(f"not a permutation of 1..8 fixing 0: {self.images}")

    @classmethod
    def from_two_line(cls, bottom: Sequence[int]) -> CellPermutation:
        """``bottom`` lists pi(1), ..., pi(8)."""
        return cls((0,) + tuple(bottom))

    @classmethod
    def from_cycles(cls, *cycles: Sequence[int]) -> CellPermutation:
        img = list(range(9))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(tuple(img))

    @classmethod
    def identity(cls) -> CellPermutation:
        return cls(tuple(range(9)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: CellPermutation) -> CellPermutation:
        """(self * other)(i) = self(other(i))."""
        return CellPermutation(tuple(self.images[other.images[i]] for i in range(9)))

    def inverse(self) -> CellPermutation:
        inv = [0] * 9
        for i, v in enumerate(self.images):
            inv[v] = i
        return CellPermutation(tuple(inv))

    def __pow__(self, e: int) -> CellPermutation:
        base = self if e >= 0 else self.inverse()
        out = CellPermutation.identity()
        for _ in range(abs(e)):
            out = out * base
        return out

    def order(self) -> int:
        m, cur = 1, self
        while cur != CellPermutation.identity():
            cur = cur * self
            m += 1
        return m

    def two_line(self) -> tuple[int, ...]:
        return self.images[1:]

    def act_on_set(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[i] for i in s)


def permutation_action(pi: CellPermutation, a: ZnArray) -> ZnArray:
    """(x_0, x_1, ..., x_8) -> (x_0, x_{pi^-1(1)}, ..., x_{pi^-1(8)})."""
    if a.n != 3:
        raise ValueError("the cell permutation action is defined on T_3 only")
    inv = pi.inverse()
    return ZnArray(3, tuple(a.values[inv(i)] for i in range(9)))


P = CellPermutation.from_two_line((3, 1, 6, 8, 2, 7, 5, 4))
Q = CellPermutation.from_two_line((3, 6, 1, 4, 7, 2, 5, 8))

A1 = ZnArray(3, (0, 1, 2, 5, 3, 4, 7, 8, 6))

# the twelve arrays of Example 5.1 and the words expressing them through a^1
PRINTED_ARRAYS: tuple[tuple[int, ...], ...] = (
    (0, 1, 2, 5, 3, 4, 7, 8, 6),
    (0, 1, 5, 2, 6, 7, 4, 8, 3),
    (0, 2, 1, 4, 3, 5, 8, 7, 6),
    (0, 2, 4, 1, 6, 8, 5, 7, 3),
    (0, 4, 2, 8, 6, 1, 7, 5, 3),
    (0, 4, 8, 2, 3, 7, 1, 5, 6),
    (0, 5, 1, 7, 6, 2, 8, 4, 3),
    (0, 5, 7, 1, 3, 8, 2, 4, 6),
    (0, 7, 5, 8, 3, 1, 4, 2, 6),
    (0, 7, 8, 5, 6, 4, 1, 2, 3),
    (0, 8, 4, 7, 3, 2, 5, 1, 6),
    (0, 8, 7, 4, 6, 5, 2, 1, 3),
)

# (q exponent, p exponent): a^i = q^a p^b (a^1)
PRINTED_WORDS: tuple[tuple[int, int], ...] = (
    (0, 0), (1, 1), (1, 2), (0, 1), (1, 3), (0, 2),
    (0, 5), (1, 0), (0, 4), (1, 5), (1, 4), (0, 3),
)


def word(qe: int, pe: int) -> CellPermutation:
    return (Q ** qe) * (P ** pe)


def generate_group(gens: Sequence[CellPermutation]) -> list[CellPermutation]:
    seen = {CellPermutation.identity()}
    frontier = [CellPermutation.identity()]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = h * g
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(seen, key=lambda g: g.images)


def orbit(group: Sequence[CellPermutation], a: ZnArray) -> list[ZnArray]:
    return sorted({permutation_action(g, a) for g in group}, key=lambda x: x.values)


@dataclass(frozen=True)
class GroupReport:
    order_p: int
    order_q: int
    qpq: tuple[int, ...]
    qpq_is_p_inverse: bool
    group_order: int
    preserves_supports: bool
    orbit_size: int
    transitive: bool
    faithful: bool
    words_reproduce: bool

    @property
    def ok(self) -> bool:
        return (
            self.order_p == 6
            and self.order_q == 2
            and self.qpq_is_p_inverse
            and self.group_order == 12
            and self.preserves_supports
            and self.transitive
            and self.faithful
            and self.words_reproduce
        )


def dihedral_group_check(solutions: Sequence[ZnArray] | None = None) -> GroupReport:
    sols = list(solutions) if solutions is not None else search_balanced_3torus()
    qpq = Q * P * Q.inverse()
    group = generate_group([P, Q])
    triples = support_triples()
    preserves = all({g.act_on_set(t) for t in triples} == triples for g in group)
    orb = orbit(group, A1)
    stab = [g for g in group if permutation_action(g, A1) == A1]
    faithful = len(stab) == 1 and all(
        any(permutation_action(g, s) != s for s in sols)
        for g in group
        if g != CellPermutation.identity()
    )
    words_ok = all(
        permutation_action(word(qe, pe), A1).values == arr
        for (qe, pe), arr in zip(PRINTED_WORDS, PRINTED_ARRAYS)
    )
    return GroupReport(
        order_p=P.order(),
        order_q=Q.order(),
        qpq=qpq.two_line(),
        qpq_is_p_inverse=qpq == P.inverse(),
        group_order=len(group),
        preserves_supports=preserves,
        orbit_size=len(orb),
        transitive=[a.values for a in orb] == sorted(s.values for s in sols),
        faithful=faithful,
        words_reproduce=words_ok,
    )


def hypergraph_automorphisms() -> list[CellPermutation]:
    """All permutations fixing cell 0 that map the support triples onto themselves."""
    triples = support_triples()
    out = []
    for perm in itertools.permutations(range(1, 9)):
        g = CellPermutation((0,) + perm)
        if all(g.act_on_set(t) in triples for t in triples):
            out.append(g)
    return out


# the explicit construction for S(n-1)*


def construct_fn(n: int) -> ZnArray:
    """f_n(i, j) = g_n(i, j) + n*j, g_n(i, j) = i - j (+ n when i < j)."""
    if n < 3:
        raise ValueError("n must be >= 3")

    def f(i: int, j: int) -> int:
        g = i - j if i >= j else i - j + n
        return g + n * j

    a = ZnArray(n, tuple(f(i, j) for j in range(n) for i in range(n)))
    cert = is_zero_sum(a, punctured_square(n - 1))
    if not cert.valid:
        raise AssertionError(f"f_{n} is not a balanced zero-sum array")
    return a


def g_value(n: int, i: int, j: int) -> int:
    i, j = i % n, j % n
    return i - j if i >= j else i - j + n


@dataclass(frozen=True)
class IdentityReport:
    n: int
    horizontal: bool
    vertical: bool
    complement: bool
    window: bool
    decomposition: bool
    diagonal: bool
    rows: bool
    parity: bool

    @property
    def ok(self) -> bool:
        return all(
            (self.horizontal, self.vertical, self.complement, self.window,
             self.decomposition, self.diagonal, self.rows, self.parity)
        )


def proof_identities_check(n: int) -> IdentityReport:
    """Line, complement and window sums of f_n, and the complement decomposition."""
    a = construct_fn(n)
    mod = n * n
    cells = [(i, j) for j in range(n) for i in range(n)]
    shifted = {((i + 1) % n, (j + 1) % n) for i, j in punctured_square(n - 1).points}
    comp = [c for c in cells if c not in shifted]
    horizontal = vertical = complement = window = decomposition = True
    for i0, j0 in cells:
        h = {(i, j0) for i in range(n)}
        v = {(i0, j) for j in range(n)}
        horizontal &= sum(a[c] for c in h) % mod == (n * (n - 1) // 2) % mod
        vertical &= sum(a[c] for c in v) % mod == (n * (n - 1) // 2 + n * n * (n - 1) // 2) % mod
        translated = {((i + i0) % n, (j + j0) % n) for i, j in comp}
        extra = ((i0 + 1) % n, (j0 + 1) % n)
        decomposition &= translated == h | v | {extra} and h & v == {(i0, j0)}
        complement &= sum(a[c] for c in translated) % mod == (n * (n - 1) * (n + 2) // 2 + n) % mod
        wsum = sum(a[((i + i0) % n, (j + j0) % n)] for i, j in shifted)
        window &= wsum % mod == (n * n * (n + 1) * (n - 2) // 2) % mod == 0
    diagonal = all(g_value(n, i, j) == g_value(n, i + 1, j + 1) for i, j in cells)
    rows = all(
        {a[i, j0] for i in range(n)} == set(range(n * j0, n * j0 + n)) for j0 in range(n)
    )
    return IdentityReport(
        n, horizontal, vertical, complement, window, decomposition, diagonal, rows,
        parity=(n + 1) * (n - 2) % 2 == 0,
    )


@dataclass(frozen=True)
class NonexistenceCertificate:
    p: int
    k: int
    kernel_dimension: int
    applicable: bool
    argument: str

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "kernel_dimension": self.kernel_dimension,
            "applicable": self.applicable,
            "argument": self.argument,
        }


class CertificateNotApplicable(ValueError):
    pass


def nonexistence_certificate(p: int, k: int, strict: bool = True) -> NonexistenceCertificate:
    """Rule out balanced S(k)*-zero-sum arrays on T_p via the mod-p kernel.

    A balanced array reduced mod p takes every residue p times, so it is a
    nonzero F_p array; it would lie in the kernel, which is {0}.
    """
    if not is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    if not 2 <= k <= p - 1:
        raise ValueError("k must satisfy 2 <= k <= p - 1")
    rep = kernel(k, p)
    if rep.dimension == 0:
        arg = (
            f"kernel of the S({k})* operator on the {p}-torus over F_{p} is zero; "
            f"a balanced array reduces mod {p} to a nonzero kernel element"
        )
        return NonexistenceCertificate(p, k, 0, True, arg)
    if strict:
        raise CertificateNotApplicable(f"kernel has dimension {rep.dimension} for (p, k) = ({p}, {k})")
    return NonexistenceCertificate(p, k, rep.dimension, False, "kernel is nonzero")


@dataclass(frozen=True)
class ProbeConfig:
    n: int
    k: int
    budget: int = 200_000
    max_solutions: int | None = 1


def composite_probe(cfg: ProbeConfig) -> SearchReport:
    """Budgeted search; never claims nonexistence unless the space is exhausted."""
    if cfg.n < 4 or is_prime(cfg.n):
        raise ValueError(f"{cfg.n} is not composite")
    if not 2 <= cfg.k <= cfg.n - 1:
        raise ValueError("k must satisfy 2 <= k <= n - 1")
    return search_balanced(cfg.n, cfg.k, cfg.budget, cfg.max_solutions)

