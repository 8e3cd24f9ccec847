import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tomofix.cyclotomic import (
    ConductorCapError,
    CycElem,
    RootOfUnity,
    conductor_cap,
    cyclotomic_poly,
    euler_phi,
    order_of,
    root_of_unity,
)

z = root_of_unity


def test_cyclotomic_polys_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_phi_degree_matches_totient():
    for n in range(1, 80):
        tot = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert euler_phi(n) == tot


def test_third_roots_sum_to_zero():
    assert (z(3, 1) + z(3, 2) + 1).is_zero()


def test_i_squared():
    i = z(4, 1)
    assert i * i == -1


def test_eighth_root_fourth_power():
    assert z(8, 1) ** 4 == -1
    assert z(8, 1) * z(8, 3) == z(8, 4) == -1


def test_root_of_unity_reduces_k():
    assert z(5, 7) == z(5, 2) and z(5, 0) == 1 and z(5, -1) == z(5, 4)


def test_root_of_unity_rejects_zero_conductor():
    with pytest.raises(ValueError):
        z(0, 1)


def test_inverse_and_division():
    assert z(3, 1).inverse() == z(3, 2)
    x = z(7, 2) + 3
    assert x * x.inverse() == 1
    assert (x / x) == 1
    with pytest.raises(ZeroDivisionError):
        CycElem.zero(5).inverse()


def test_embedding_into_24():
    assert z(3, 1).embed(24) == z(24, 8)
    assert z(24, 8) == z(3, 1)
    assert z(24, 1) ** 8 == z(3, 1)


def test_mixed_conductors_auto_embed():
    s = z(3, 1) + z(4, 1)
    assert s.conductor == 12
    assert s - z(4, 1) == z(3, 1)


def test_conjugate_examples():
    assert z(3, 1).conjugate() == z(3, 2)
    assert CycElem.one(7).conjugate() == 1
    assert z(8, 3).conjugate() == z(8, 5)
    for n in range(1, 30):
        for k in range(n):
            u = z(n, k)
            assert u * u.conjugate() == 1


def test_order_of_examples():
    assert order_of(z(3, 1)) == 3
    assert order_of(CycElem.from_rational(-1, 8)) == 2
    assert order_of(z(8, 6)) == 4
    assert order_of(z(15, 5)) == 3
    with pytest.raises(ValueError):
        order_of(z(3, 1) + 1 + 1)


def test_approx_complex():
    assert abs(z(4, 1).approx_complex() - 1j) < 1e-12
    assert abs((z(3, 1) + z(3, 2) + 1).approx_complex()) < 1e-12
    assert abs(z(8, 1).approx_complex() - (math.sqrt(2) / 2) * (1 + 1j)) < 1e-12
    for n in (5, 12, 60):
        for k in range(n):
            assert abs(z(n, k).approx_complex() - cmath.exp(2j * math.pi * k / n)) < 1e-12


def test_full_root_sums_vanish():
    for n in range(2, 61):
        total = CycElem.zero(n)
        for k in range(n):
            total = total + z(n, k)
        assert total.is_zero(), n


def test_geometric_sums_over_nontrivial_roots():
    for n in range(3, 21):
        m = n - 1
        for e in range(1, m):
            c = z(m, e)
            total = CycElem.zero(m)
            for k in range(n - 1):
                total = total + c**k
            assert total.is_zero(), (n, e)


def test_json_round_trip():
    x = z(12, 5) * Fraction(3, 7) - 2
    raw = x.to_json()
    assert raw["conductor"] == 12 and all(isinstance(c, str) for c in raw["coeffs"])
    assert CycElem.from_json(raw) == x


def test_equality_and_hash_across_conductors():
    a, b = z(3, 1), z(3, 1).embed(12)
    assert a == b and hash(a) == hash(b)
    assert CycElem.from_rational(5, 1) == CycElem.from_rational(5, 30)


def test_conductor_cap(monkeypatch):
    assert conductor_cap() == 10080
    with pytest.raises(ConductorCapError):
        z(10081, 1)
    monkeypatch.setenv("TOMOFIX_CONDUCTOR_CAP", "20")
    assert conductor_cap() == 20
    with pytest.raises(ConductorCapError):
        z(21, 1)
    with pytest.raises(ConductorCapError):
        z(5, 1) + z(7, 1)  # lcm 35 exceeds the lowered cap


def test_root_of_unity_record():
    u = RootOfUnity.of(8, 6)
    assert (u.order, u.k) == (4, 3)
    assert u.elem() == z(8, 6)
    assert u.conjugate() == RootOfUnity.of(4, 1)
    assert u.to_json() == {"N": 4, "k": 3}
    assert RootOfUnity.from_elem(z(12, 9)) == RootOfUnity.of(4, 3)


# canonical zero detection on random expression trees

CONDUCTORS = (1, 2, 3, 4, 5, 6, 8, 9, 12, 15)


@st.composite
def leaves(draw):
    if draw(st.booleans()):
        n = draw(st.sampled_from(CONDUCTORS))
        return z(n, draw(st.integers(0, n - 1)))
    return CycElem.from_rational(draw(st.fractions(min_value=-4, max_value=4, max_denominator=5)))


def trees():
    return st.recursive(
        leaves(),
        lambda kids: st.one_of(
            st.tuples(st.just("+"), kids, kids),
            st.tuples(st.just("-"), kids, kids),
            st.tuples(st.just("*"), kids, kids),
            st.tuples(st.just("conj"), kids),
            st.tuples(st.just("pow"), kids, st.integers(0, 3)),
        ),
        max_leaves=8,
    )


def evaluate(t):
    if isinstance(t, CycElem):
        return t
    op = t[0]
    if op == "conj":
        return evaluate(t[1]).conjugate()
    if op == "pow":
        return evaluate(t[1]) ** t[2]
    a, b = evaluate(t[1]), evaluate(t[2])
    return {"+": a + b, "-": a - b, "*": a * b}[op]


def rewritten(t):
    """Same value, different route: a - b as a + (-1) * b, a * b as b * a."""
    if isinstance(t, CycElem):
        return t
    op = t[0]
    if op == "conj":
        return rewritten(t[1]).conjugate()
    if op == "pow":
        out = CycElem.one()
        for _ in range(t[2]):
            out = out * rewritten(t[1])
        return out
    a, b = rewritten(t[1]), rewritten(t[2])
    if op == "+":
        return b + a
    if op == "-":
        return a + b * (-1)
    return b * a


@settings(max_examples=1000)
@given(trees())
def test_canonical_zero_on_expression_trees(t):
    x = evaluate(t)
    assert (x - x).is_zero()
    assert (x - rewritten(t)).is_zero()
    assert x == rewritten(t) and hash(x) == hash(rewritten(t))
    if not x.is_zero():
        assert (x * x.inverse()) == 1
    assert abs((x - rewritten(t)).approx_complex()) < 1e-9


@settings(max_examples=300)
@given(leaves(), leaves(), leaves())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@settings(max_examples=200)
@given(st.sampled_from(CONDUCTORS[2:]), st.integers(0, 50), st.integers(0, 50))
def test_galois_is_a_ring_map(n, j, k):
    units = [s for s in range(1, n) if math.gcd(s, n) == 1]
    s = units[(j + k) % len(units)]
    a, b = z(n, j) + 2, z(n, k) - Fraction(1, 3)
    assert (a * b).galois(s) == a.galois(s) * b.galois(s)
    assert (a + b).galois(s) == a.galois(s) + b.galois(s)
