"""Registry of worked-example checks with known printed answers.

Each check is a zero-argument callable returning ``(ok, detail)``. The
registry order is fixed, and ``run_checks`` returns results in that order
whatever the worker count, so the rendered table is byte-stable.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import balanced as bal
from .bounded import bounded_basis, character_array, period_lattice, rational_basis
from .core import (
    TorusArray,
    Window,
    delta,
    delta_on_interior,
    is_fixed,
    puncture,
    square_window,
    translate_window,
)
from .cyclotomic import CycElem, root_of_unity
from .linalg import rank
from .modp import (
    group_det_check,
    kernel,
    reduce_rational_array,
    rep_matrix,
    rref_mod_p,
    theorem41_sweep,
)
from .polygrowth import (
    D1,
    D2,
    DiffOp2,
    X,
    Y,
    apply,
    array_from_solution,
    dim_formula,
    f_minus,
    in_solution_span,
    operator_at,
    shift_char_poly,
    sol_space,
)
from .rings import IntMod
from .spectra import (
    TorusPoint,
    char_poly,
    evaluate,
    punctured_square_poly,
    square_zero_locus,
)

Result = tuple[bool, str]


@dataclass(frozen=True)
class GoldenCheck:
    name: str
    module: str
    run: Callable[[], Result]


@dataclass(frozen=True)
class CheckResult:
    name: str
    module: str
    ok: bool
    detail: str


# shared fixtures


def z3(k: int = 1) -> CycElem:
    return root_of_unity(3, k)


def s2star() -> Window:
    return puncture(square_window(2))


def s3star() -> Window:
    return puncture(square_window(3))


def b1_closed(i: int, j: int) -> int:
    return 2 if (i - j) % 3 == 0 else -1


def b2_closed(i: int, j: int) -> int:
    return (0, 1, -1)[(i - j) % 3]


def n2_character_arrays() -> tuple[TorusArray, TorusArray]:
    a1 = character_array(TorusPoint.of(3, 1, 2)).array
    a2 = character_array(TorusPoint.of(3, 2, 1)).array
    return a1, a2


def n2_rational_pair() -> tuple[TorusArray, TorusArray]:
    """b1 = a1 + a2 and b2 = (a1 - a2) / (z3 - z3^2), as rational arrays."""
    a1, a2 = n2_character_arrays()
    c = (z3(1) - z3(2)).inverse()
    b1 = (a1 + a2).map(lambda v: v.to_rational())
    b2 = (a1 - a2).map(lambda v: (c * v).to_rational())
    return b1, b2


# listing order of the seven n = 3 points used by the printed combinations
N3_POINTS = (
    TorusPoint.of(2, 1, 1),
    TorusPoint.of(4, 1, 3),
    TorusPoint.of(4, 3, 1),
    TorusPoint.of(8, 1, 3),
    TorusPoint.of(8, 3, 1),
    TorusPoint.of(8, 5, 7),
    TorusPoint.of(8, 7, 5),
)


def n3_rational_arrays() -> list[TorusArray]:
    """b1..b7 on the 8-torus from the printed combinations of a1..a7."""
    a = [character_array(p, (8, 8)).array for p in N3_POINTS]
    z8 = lambda k: root_of_unity(8, k)  # noqa: E731
    i4 = root_of_unity(4, 1)
    half, quarter = Fraction(1, 2), Fraction(1, 4)

    def comb(coeffs, arrays) -> TorusArray:
        vals = []
        for t in range(64):
            acc = CycElem.zero(8)
            for c, arr in zip(coeffs, arrays):
                acc = acc + c * arr.values[t]
            vals.append(acc)
        return TorusArray((8, 8), tuple(vals))

    inv2i = (i4 * 2).inverse()
    combos = [
        comb([1], a[:1]),
        comb([half, half], a[1:3]),
        comb([inv2i, -inv2i], a[1:3]),
        comb([quarter] * 4, a[3:]),
        comb([z8(e) * quarter for e in (1, 3, 5, 7)], a[3:]),
        comb([z8(e) * quarter for e in (2, 6, 2, 6)], a[3:]),
        comb([z8(e) * quarter for e in (3, 1, 7, 5)], a[3:]),
    ]
    return [c.map(lambda v: v.to_rational()) for c in combos]


PRINTED_REP_MATRIX = (
    (0, 1, 0, 1, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 1, 1, 0, 0, 0),
    (1, 0, 0, 1, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 1, 1, 0),
    (0, 0, 0, 0, 0, 1, 0, 1, 1),
    (0, 0, 0, 1, 0, 0, 1, 0, 1),
    (1, 1, 0, 0, 0, 0, 0, 1, 0),
    (0, 1, 1, 0, 0, 0, 0, 0, 1),
    (1, 0, 1, 0, 0, 0, 1, 0, 0),
)

PRINTED_RREF = (
    (1, 0, 0, 0, 0, 0, 2, 2, 1),
    (0, 1, 0, 0, 0, 0, 1, 2, 2),
    (0, 0, 1, 0, 0, 0, 2, 1, 2),
    (0, 0, 0, 1, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 1, 0, 1, 1, 0),
    (0, 0, 0, 0, 0, 1, 0, 1, 1),
    (0,) * 9,
    (0,) * 9,
    (0,) * 9,
)

PRINTED_TRIPLES = ("134", "245", "035", "467", "578", "368", "017", "128", "026")


def mod3_translate_generators() -> list[tuple[int, ...]]:
    """Kernel elements a of (2, 3) with b1 = 2(a + Ta + T^2a), b2 = a - Ta, T = T_(1,0)."""
    rep = kernel(2, 3)
    basis = [[int(v) for v in b.values] for b in rep.basis]
    b1, b2 = (reduce_rational_array(b, 3) for b in n2_rational_pair())
    t1 = [int(v) for v in b1.values]
    t2 = [int(v) for v in b2.values]
    found = []
    for coeffs in itertools.product(range(3), repeat=len(basis)):
        v = [sum(c * b[k] for c, b in zip(coeffs, basis)) % 3 for k in range(9)]
        arr = TorusArray((3, 3), tuple(IntMod(x, 3) for x in v))
        s1 = [int(x) for x in arr.translate((1, 0)).values]
        s2 = [int(x) for x in arr.translate((2, 0)).values]
        if [2 * (x + y + z) % 3 for x, y, z in zip(v, s1, s2)] == t1 and [
            (x - y) % 3 for x, y in zip(v, s1)
        ] == t2:
            found.append(tuple(v))
    return found


# core


def _core_square() -> Result:
    ok = square_window(2).points == frozenset({(0, 0), (1, 0), (0, 1), (1, 1)})
    return ok, "S(2) = {(0,0),(1,0),(0,1),(1,1)}"


def _core_puncture() -> Result:
    ok = s2star().points == frozenset({(1, 0), (0, 1), (1, 1)})
    return ok, "S(2)* = {(1,0),(0,1),(1,1)}"


def _core_translate() -> Result:
    ok = translate_window(s2star(), (1, 1)).points == frozenset({(2, 1), (1, 2), (2, 2)})
    return ok, "S(2)* + (1,1) = {(2,1),(1,2),(2,2)}"


def _core_all_ones() -> Result:
    bad = []
    for p in (3, 5, 7):
        ones = TorusArray.constant((p, p), IntMod(1, p))
        w = puncture(square_window(p - 1))
        if not delta(w, ones).is_zero():
            bad.append(p)
    return not bad, "all-ones on T_p is killed by S(p-1)* for p = 3, 5, 7"


def _core_b1_fixed() -> Result:
    b1 = TorusArray.from_function((3, 3), b1_closed)
    ok = delta(square_window(2), b1) == b1 and is_fixed(square_window(2), b1)
    return ok, "Delta_S(2)(b1) = b1"


# cyclotomic


def _cyc_eighth_root() -> Result:
    ok = root_of_unity(8, 1) ** 4 == CycElem.from_rational(-1, 8)
    return ok, "zeta_8^4 = -1"


# spectra


def _spec_char_polys() -> Result:
    s2 = char_poly(square_window(2)).as_dict() == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    s2s = char_poly(s2star()).as_dict() == {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    return s2 and s2s, "m_S(2) = (1+x)(1+y), m_S(2)* = x + y + xy"


def _spec_evaluations() -> Result:
    a = evaluate(punctured_square_poly(2), TorusPoint.of(3, 1, 2)).is_zero()
    b = evaluate(punctured_square_poly(3), TorusPoint.of(2, 1, 1)).is_zero()
    return a and b, "m_S(2)*(z3, z3^2) = 0 and m_S(3)*(-1, -1) = 0"


def _spec_locus_n2() -> Result:
    pts = square_zero_locus(2)
    ok = set(pts) == {TorusPoint.of(3, 1, 2), TorusPoint.of(3, 2, 1)}
    return ok, f"{len(pts)} points: " + ", ".join(str(p) for p in pts)


def _spec_locus_n3() -> Result:
    pts = square_zero_locus(3)
    ok = set(pts) == set(N3_POINTS) and len(pts) == 7
    return ok, f"{len(pts)} points"


# bounded


def _bnd_character_n2() -> Result:
    a = character_array(TorusPoint.of(3, 1, 2))
    ok = a.dims == (3, 3) and is_fixed(square_window(2), a.array)
    return ok, "a1 = (z3^(i+2j)) is fixed by S(2)"


def _bnd_checkerboard() -> Result:
    a = character_array(TorusPoint.of(2, 1, 1)).array
    ok = a.dims == (2, 2) and is_fixed(square_window(3), a)
    ok = ok and all(v.to_rational() == (-1) ** (i + j) for (i, j), v in zip(a.cells(), a.values))
    return ok, "(-1,-1) gives the +-1 checkerboard, fixed by S(3)"


def _bnd_b_closed_forms() -> Result:
    b1, b2 = n2_rational_pair()
    ok = all(
        b1[i, j] == b1_closed(i, j) and b2[i, j] == b2_closed(i, j)
        for i in range(3)
        for j in range(3)
    )
    w = square_window(2)
    ok = ok and is_fixed(w, b1) and is_fixed(w, b2)
    return ok, "b1, b2 match the closed forms at all 9 residues and are fixed"


def _bnd_counts() -> Result:
    n2, n3 = len(bounded_basis(2)), len(bounded_basis(3))
    return (n2, n3) == (2, 7), f"bounded dimensions: n=2 -> {n2}, n=3 -> {n3}"


def _bnd_periods() -> Result:
    got = [period_lattice(a)[0][0] for a in (character_array(p) for p in N3_POINTS)]
    ok = got == [2, 4, 4, 8, 8, 8, 8] and all(
        period_lattice(character_array(p))[1] == (0, period_lattice(character_array(p))[0][0])
        for p in N3_POINTS
    )
    return ok, f"periods {got}"


def _bnd_n3_rational() -> Result:
    b = n3_rational_arrays()
    w = s3star()
    in_kernel = all(delta(w, x).is_zero() for x in b)
    rel = (
        b[2] == b[1].translate((1, 0))
        and b[4] == b[3].translate((-1, 0))
        and b[5] == b[3].translate((-2, 0))
        and b[6] == b[3].translate((-3, 0))
    )
    independent = rank([list(x.values) for x in b]) == 7
    detail = f"kernel={in_kernel} translates={rel} rank7={independent}"
    return in_kernel and rel and independent, detail


def _bnd_rational_basis_span() -> Result:
    rb = rational_basis(2)
    b1, b2 = n2_rational_pair()
    base = [list(a.values) for a in rb.arrays]
    r = rank(base)
    ok = r == 2 and rank(base + [list(b1.values), list(b2.values)]) == r
    return ok, f"orbit-average basis rank {r} spans b1, b2"


# polygrowth


def _pg_shift() -> Result:
    w = s2star()
    p1 = shift_char_poly(w, TorusPoint.of(3, 1, 2))
    p2 = shift_char_poly(w, TorusPoint.of(3, 2, 1))
    e1 = X.scale(-z3(1)) - Y.scale(z3(2)) + X * Y
    e2 = X.scale(-z3(2)) - Y.scale(z3(1)) + X * Y
    return p1 == e1 and p2 == e2, f"m^p1 = {p1}; m^p2 = {p2}"


def _pg_operator() -> Result:
    d = f_minus(shift_char_poly(s2star(), TorusPoint.of(3, 1, 2)))
    want = D1.scale(z3(1)) + D2.scale(z3(2)) + D1 * D2
    return d == want, f"D_p1 = {d}"


def _pg_operator_n3() -> Result:
    d = operator_at(s3star(), TorusPoint.of(2, 1, 1))
    one = DiffOp2({(0, 0): 1})
    want = (one + D1 + D1 * D1) * (one + D2 + D2 * D2) - one
    return d == want, f"D_(-1,-1) = {d}"


def _pg_annihilate() -> Result:
    d = operator_at(s3star(), TorusPoint.of(2, 1, 1))
    g1 = X - Y
    g2 = (X - Y) ** 2 - (X + Y)
    return apply(d, g1).is_zero() and apply(d, g2).is_zero(), "x-y and (x-y)^2-(x+y) solve D_(-1,-1)"


def _pg_dims() -> Result:
    d = operator_at(s2star(), TorusPoint.of(3, 1, 2))
    kern = [sol_space(d, n).dimension for n in range(11)]
    form = [dim_formula(d, n) for n in range(11)]
    want = list(range(1, 12))
    return kern == want and form == want, f"dims {kern}"


def _pg_table() -> Result:
    p1, p2 = TorusPoint.of(3, 1, 2), TorusPoint.of(3, 2, 1)
    w = s2star()
    d1, d2 = operator_at(w, p1), operator_at(w, p2)
    g1 = X.scale(z3(2)) - Y.scale(z3(1))
    g2 = (X**2).scale(z3(1)) - (X * Y).scale(2) + (Y**2).scale(z3(2)) - X.scale(2) - Y.scale(2)
    g3 = X.scale(z3(1)) - Y.scale(z3(2))
    g4 = (X**2).scale(z3(2)) - (X * Y).scale(2) + (Y**2).scale(z3(1)) - X.scale(2) - Y.scale(2)
    ok = (
        in_solution_span(sol_space(d1, 1), g1)
        and in_solution_span(sol_space(d1, 2), g2)
        and in_solution_span(sol_space(d2, 1), g3)
        and in_solution_span(sol_space(d2, 2), g4)
        and not in_solution_span(sol_space(d1, 0), g1)
        and not in_solution_span(sol_space(d1, 1), g2)
    )
    return ok, "the four tabulated degree-1 and degree-2 representatives are solutions"


def _pg_integer_array() -> Result:
    p = TorusPoint.of(2, 1, 1)
    w = s3star()
    out = []
    for g in (X - Y, (X - Y) ** 2 - (X + Y)):
        a = array_from_solution(p, g, (0, 11, 0, 11), w)
        out.append(all(v.is_rational() and v.to_rational().denominator == 1 for v in a.values))
    return all(out), "step-(E) arrays at (-1,-1) are integer valued and killed by S(3)* on 12x12"


def _pg_recombinations() -> Result:
    p1, p2 = TorusPoint.of(3, 1, 2), TorusPoint.of(3, 2, 1)
    w = s2star()
    reg = (0, 7, 0, 7)
    g = [
        (p1, X.scale(z3(2)) - Y.scale(z3(1))),
        (p1, (X**2).scale(z3(1)) - (X * Y).scale(2) + (Y**2).scale(z3(2)) - X.scale(2) - Y.scale(2)),
        (p2, X.scale(z3(1)) - Y.scale(z3(2))),
        (p2, (X**2).scale(z3(2)) - (X * Y).scale(2) + (Y**2).scale(z3(1)) - X.scale(2) - Y.scale(2)),
    ]
    a = [array_from_solution(p, s, reg, w) for p, s in g]
    k = (z3(1) * 2 + 1).inverse() * Fraction(1, 6)
    coeffs = [(1, 1, 0, 0), (1, -1, 0, 0), (0, 0, Fraction(1, 2), Fraction(1, 2)), (0, 0, k, -k)]
    ok = True
    for cs in coeffs:
        vals = []
        for t in range(len(a[0].values)):
            acc = CycElem.zero(3)
            for c, arr in zip(cs, a):
                acc = acc + c * arr.values[t]
            vals.append(acc)
        comb = type(a[0])(*reg, tuple(vals))
        ok = ok and all(v.is_zero() for v in delta_on_interior(w, comb).values())
    return ok, "b1..b4 recombinations of the step-(E) arrays stay in the kernel"


# modp


def _mp_matrix() -> Result:
    m = rep_matrix(2, 3)
    return m.rows == PRINTED_REP_MATRIX, "9x9 representation matrix matches entrywise"


def _mp_rref() -> Result:
    red, r = rref_mod_p(rep_matrix(2, 3))
    return red.rows == PRINTED_RREF and r == 6, f"RREF matches, rank {r}"


def _mp_kernel23() -> Result:
    rep = kernel(2, 3)
    basis = [[int(v) for v in b.values] for b in rep.basis]
    closed = all(
        rank_mod3(basis + [[int(v) for v in b.translate(t).values]]) == rep.dimension
        for b in rep.basis
        for t in ((1, 0), (0, 1))
    )
    gens = mod3_translate_generators()
    ok = rep.dimension == 3 and closed and bool(gens)
    return ok, f"dim {rep.dimension}; {len(gens)} generators a with b1 = 2(a+Ta+T^2a), b2 = a-Ta"


def rank_mod3(rows: list[list[int]]) -> int:
    from .modp import FpMatrix

    return rref_mod_p(FpMatrix(3, tuple(tuple(x % 3 for x in r) for r in rows)))[1]


def _mp_kernel25() -> Result:
    d = kernel(2, 5).dimension
    return d == 0, f"dim {d}"


def _mp_kernel45() -> Result:
    rep = kernel(4, 5)
    ones = TorusArray.constant((5, 5), IntMod(1, 5))
    w = puncture(square_window(4))
    ok = rep.dimension >= 1 and delta(w, ones).is_zero()
    return ok, f"dim {rep.dimension}, all-ones in kernel"


def _mp_det() -> Result:
    a = group_det_check(2, 5)
    b = group_det_check(4, 5)
    ok = a == (3, 3, True) and b == (0, 0, True)
    return ok, f"(2,5) -> {a[:2]}, (4,5) -> {b[:2]}"


def _mp_sweeps() -> Result:
    s3 = [(r.n, r.kernel_dim) for r in theorem41_sweep(3)]
    s5 = [(r.n, r.kernel_dim) for r in theorem41_sweep(5)]
    ok = s3 == [(2, 3)] and s5[0][1] == 0 and s5[1][1] == 0 and s5[2][1] > 0
    return ok, f"p=3 {s3}; p=5 {s5}"


# balanced


def _bal_a1() -> Result:
    a1 = bal.A1
    cert = bal.is_zero_sum(a1, s2star())
    ok = bal.is_balanced(a1) and cert.valid and all(s % 9 == 0 for s in cert.translate_sums)
    return ok, "a1 is balanced and zero-sum for S(2)*"


def _bal_fn_small() -> Result:
    f4, f5 = bal.construct_fn(4), bal.construct_fn(5)
    ok = bal.is_balanced(f4) and bal.is_zero_sum(f5, puncture(square_window(4))).valid
    return ok, "f4 balanced; f5 zero-sum for S(4)*"


def _bal_search() -> Result:
    sols = bal.search_balanced_3torus()
    ok = [a.values for a in sols] == sorted(bal.PRINTED_ARRAYS) and sols[0].values == bal.A1.values
    return ok, f"{len(sols)} arrays, first {sols[0].values}"


def _bal_triples() -> Result:
    want = {frozenset(int(c) for c in t) for t in PRINTED_TRIPLES}
    got = bal.support_triples()
    counts = [sum(k in t for t in got) for k in range(9)]
    return got == want and counts == [3] * 9, "support triples 134 245 035 467 578 368 017 128 026"


def _bal_action() -> Result:
    a = bal.PRINTED_ARRAYS
    ok = (
        bal.permutation_action(bal.P, bal.A1).values == a[3]
        and bal.permutation_action(bal.Q, bal.A1).values == a[7]
    )
    return ok, "p.a1 = a4 and q.a1 = a8"


def _bal_dihedral() -> Result:
    rep = bal.dihedral_group_check()
    return rep.ok, f"|G| = {rep.group_order}, orders {rep.order_p}/{rep.order_q}, orbit {rep.orbit_size}"


def _bal_autos() -> Result:
    autos = bal.hypergraph_automorphisms()
    ok = bal.P in autos and bal.Q in autos
    return ok, f"{len(autos)} automorphisms fixing cell 0, p and q among them"


def _bal_f3() -> Result:
    f3 = bal.construct_fn(3)
    return f3.values == bal.A1.values, f"f3 = {f3.values}"


def _bal_identities() -> Result:
    r3 = bal.proof_identities_check(3)
    r4 = bal.proof_identities_check(4)
    r5 = bal.proof_identities_check(5)
    f3 = bal.construct_fn(3)
    horiz = all(sum(f3[i, j] for i in range(3)) % 9 == 3 for j in range(3))
    window80 = 16 * 5 * 2 // 2 == 80 and 80 % 16 == 0
    return r3.ok and r4.ok and r5.ok and horiz and window80, "line, complement and window sums for n = 3, 4, 5"


def _bal_certificates() -> Result:
    issued = [bal.nonexistence_certificate(5, k).applicable for k in (2, 3)]
    try:
        bal.nonexistence_certificate(5, 4)
        refused = False
    except bal.CertificateNotApplicable:
        refused = True
    return all(issued) and refused, "(5,2), (5,3) certified; (5,4) not applicable"


def _bal_probe() -> Result:
    r4 = bal.composite_probe(bal.ProbeConfig(4, 3))
    r6 = bal.composite_probe(bal.ProbeConfig(6, 5))
    ok = (
        r4.status == "FOUND"
        and r4.solutions[0] == bal.construct_fn(4)
        and r6.status == "FOUND"
        and r6.solutions[0] == bal.construct_fn(6)
    )
    return ok, f"(4,3) {r4.status} in {r4.nodes} nodes; (6,5) {r6.status} in {r6.nodes} nodes"


CHECKS: tuple[GoldenCheck, ...] = (
    GoldenCheck("square-window-2", "core", _core_square),
    GoldenCheck("puncture-s2", "core", _core_puncture),
    GoldenCheck("translate-s2star", "core", _core_translate),
    GoldenCheck("all-ones-killed-mod-p", "core", _core_all_ones),
    GoldenCheck("b1-fixed-by-s2", "core", _core_b1_fixed),
    GoldenCheck("zeta8-fourth-power", "cyclotomic", _cyc_eighth_root),
    GoldenCheck("char-polys", "spectra", _spec_char_polys),
    GoldenCheck("exact-evaluations", "spectra", _spec_evaluations),
    GoldenCheck("zero-locus-n2", "spectra", _spec_locus_n2),
    GoldenCheck("zero-locus-n3", "spectra", _spec_locus_n3),
    GoldenCheck("character-array-n2", "bounded", _bnd_character_n2),
    GoldenCheck("checkerboard-n3", "bounded", _bnd_checkerboard),
    GoldenCheck("b1-b2-closed-forms", "bounded", _bnd_b_closed_forms),
    GoldenCheck("bounded-dimensions", "bounded", _bnd_counts),
    GoldenCheck("n3-periods", "bounded", _bnd_periods),
    GoldenCheck("n3-rational-combinations", "bounded", _bnd_n3_rational),
    GoldenCheck("orbit-basis-spans-b1-b2", "bounded", _bnd_rational_basis_span),
    GoldenCheck("shifted-char-polys", "polygrowth", _pg_shift),
    GoldenCheck("operator-p1", "polygrowth", _pg_operator),
    GoldenCheck("operator-minus-one", "polygrowth", _pg_operator_n3),
    GoldenCheck("solutions-minus-one", "polygrowth", _pg_annihilate),
    GoldenCheck("dims-n-plus-one", "polygrowth", _pg_dims),
    GoldenCheck("graded-table", "polygrowth", _pg_table),
    GoldenCheck("integer-step-e-arrays", "polygrowth", _pg_integer_array),
    GoldenCheck("step-e-recombinations", "polygrowth", _pg_recombinations),
    GoldenCheck("rep-matrix-2-3", "modp", _mp_matrix),
    GoldenCheck("rref-2-3", "modp", _mp_rref),
    GoldenCheck("kernel-2-3", "modp", _mp_kernel23),
    GoldenCheck("kernel-2-5", "modp", _mp_kernel25),
    GoldenCheck("kernel-4-5", "modp", _mp_kernel45),
    GoldenCheck("determinants", "modp", _mp_det),
    GoldenCheck("sweeps-3-5", "modp", _mp_sweeps),
    GoldenCheck("a1-balanced-zero-sum", "balanced", _bal_a1),
    GoldenCheck("f4-f5", "balanced", _bal_fn_small),
    GoldenCheck("twelve-solutions", "balanced", _bal_search),
    GoldenCheck("support-triples", "balanced", _bal_triples),
    GoldenCheck("p-q-action", "balanced", _bal_action),
    GoldenCheck("dihedral-group", "balanced", _bal_dihedral),
    GoldenCheck("hypergraph-automorphisms", "balanced", _bal_autos),
    GoldenCheck("f3-equals-a1", "balanced", _bal_f3),
    GoldenCheck("construction-identities", "balanced", _bal_identities),
    GoldenCheck("nonexistence-certificates", "balanced", _bal_certificates),
    GoldenCheck("composite-probe", "balanced", _bal_probe),
)


def _run_one(check: GoldenCheck) -> CheckResult:
    try:
        ok, detail = check.run()
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(check.name, check.module, bool(ok), detail)


def run_checks(threads: int = 1, names: list[str] | None = None) -> list[CheckResult]:
    checks = [c for c in CHECKS if names is None or c.name in names]
    if threads <= 1:
        return [_run_one(c) for c in checks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_one, checks))


def render_table(results: list[CheckResult]) -> str:
    wname = max(len(r.name) for r in results)
    wmod = max(len(r.module) for r in results)
    lines = [f"{'check'.ljust(wname)}  {'module'.ljust(wmod)}  status  detail"]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{r.name.ljust(wname)}  {r.module.ljust(wmod)}  {status}    {r.detail}")
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)

