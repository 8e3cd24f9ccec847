import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tomofix.core import Window, delta_on_interior, puncture, square_window
from tomofix.cyclotomic import CycElem, root_of_unity
from tomofix.polygrowth import (
    D1,
    D2,
    DiffOp2,
    Poly2,
    X,
    Y,
    apply,
    array_from_solution,
    array_value,
    const,
    dim_formula,
    f_minus,
    f_minus_inv,
    graded_representatives,
    in_solution_span,
    monomials,
    operator_at,
    rising_factorial,
    shift_char_poly,
    simplex,
    sol_space,
)
from tomofix.spectra import TorusPoint, square_zero_locus

Z3 = root_of_unity(3, 1)
P1, P2 = TorusPoint.of(3, 1, 2), TorusPoint.of(3, 2, 1)
MINUS = TorusPoint.of(2, 1, 1)
S2S, S3S = puncture(square_window(2)), puncture(square_window(3))
ONE = DiffOp2({(0, 0): 1})


def test_shift_examples():
    assert shift_char_poly(S2S, P1) == X.scale(-Z3) - Y.scale(Z3**2) + X * Y
    assert shift_char_poly(S2S, P2) == X.scale(-(Z3**2)) - Y.scale(Z3) + X * Y


def test_shift_constant_term_vanishes_on_locus():
    for n in (2, 3, 4):
        w = puncture(square_window(n))
        for p in square_zero_locus(n):
            assert shift_char_poly(w, p).coefficient((0, 0)).is_zero()


def test_shift_flags_non_zero_points():
    with pytest.warns(UserWarning):
        g = shift_char_poly(S2S, TorusPoint.of(1, 0, 0))
    assert g.coefficient((0, 0)) == 3


def test_shift_rejects_negative_exponents():
    with pytest.raises(ValueError):
        shift_char_poly(Window([(0, 0), (-1, 0)]), P1)


def test_f_minus_examples():
    d = f_minus(shift_char_poly(S2S, P1))
    assert d == D1.scale(Z3) + D2.scale(Z3**2) + D1 * D2
    assert f_minus(const(5)) == DiffOp2({(0, 0): 5})
    assert operator_at(S3S, MINUS) == (ONE + D1 + D1 * D1) * (ONE + D2 + D2 * D2) - ONE


def test_f_minus_inv_examples():
    assert f_minus_inv(X - Y) == D1 - D2
    g = (X - Y) ** 2 - (X + Y)
    assert f_minus_inv(g) == D1 * D1 - (D1 * D2).scale(2) + D2 * D2 - D1 - D2
    assert f_minus_inv(const(1)) == ONE


def test_apply_examples():
    d = operator_at(S3S, MINUS)
    assert apply(d, X - Y).is_zero()
    assert apply(d, (X - Y) ** 2 - (X + Y)).is_zero()
    assert apply(D1, Y**3).is_zero()


def test_sol_space_dims_n_plus_one():
    d = operator_at(S2S, P1)
    for n in range(11):
        assert sol_space(d, n).dimension == n + 1 == dim_formula(d, n)


def test_sol_space_degree_one_table_entry():
    d = operator_at(S2S, P1)
    space = sol_space(d, 1)
    assert in_solution_span(space, X.scale(Z3**2) - Y.scale(Z3))
    assert in_solution_span(space, const(1))


def test_graded_representatives_one_per_degree():
    d = operator_at(S2S, P1)
    reps = graded_representatives(d, 4)
    assert [len(layer) for layer in reps] == [1] * 5
    assert all(g.degree == t for t, layer in enumerate(reps) for g in layer)


def test_zero_operator_gives_full_space():
    for n in range(5):
        assert sol_space(DiffOp2({}), n).dimension == (n + 1) * (n + 2) // 2


def test_dim_formula_examples():
    d = DiffOp2({(1, 0): 1, (0, 1): 1, (1, 1): 1})
    assert [dim_formula(d, n) for n in range(8)] == list(range(1, 9))
    with_const = DiffOp2({(0, 0): 1, (2, 1): 3})
    assert all(dim_formula(with_const, n) == 0 for n in range(8))
    dm = operator_at(S3S, MINUS)
    assert dim_formula(dm, 1) == sol_space(dm, 1).dimension


def test_simplex_cardinality():
    for n in range(8):
        assert len(simplex(n)) == (n + 1) * (n + 2) // 2 == len(monomials(n))
    assert monomials(2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_rising_factorial_examples():
    assert rising_factorial(2, 3) == 60
    assert rising_factorial(7, 0) == 1
    assert rising_factorial(-3, 2) == 2
    with pytest.raises(ValueError):
        rising_factorial(1, -1)


def test_integer_arrays_at_minus_one():
    for g in (X - Y, (X - Y) ** 2 - (X + Y)):
        a = array_from_solution(MINUS, g, (0, 11, 0, 11), S3S)
        assert all(v.is_rational() and v.to_rational().denominator == 1 for v in a.values)


def test_constant_solution_recovers_character_array():
    a = array_from_solution(P1, const(1), (0, 5, 0, 5), S2S)
    assert all(a[i, j] == Z3 ** (i + 2 * j) for i in range(6) for j in range(6))


def test_table_recombinations_stay_in_kernel():
    g1 = X.scale(Z3**2) - Y.scale(Z3)
    g2 = (X**2).scale(Z3) - (X * Y).scale(2) + (Y**2).scale(Z3**2) - X.scale(2) - Y.scale(2)
    reg = (0, 6, 0, 6)
    a1 = array_from_solution(P1, g1, reg, S2S)
    a2 = array_from_solution(P1, g2, reg, S2S)
    from tomofix.core import PatchArray

    b = PatchArray(*reg, tuple(x + y for x, y in zip(a1.values, a2.values)))
    assert all(v.is_zero() for v in delta_on_interior(S2S, b).values())


def test_region_without_interior_rejected():
    with pytest.raises(ValueError):
        array_from_solution(MINUS, X - Y, (0, 1, 0, 1), S3S)


# properties


@st.composite
def polys(draw):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            st.integers(-3, 3).map(lambda k: Z3**k if k >= 0 else -(Z3 ** (-k))),
            max_size=5,
        )
    )
    return Poly2(terms)


def _negate_vars(g: Poly2) -> Poly2:
    return Poly2({s: c if (s[0] + s[1]) % 2 == 0 else -c for s, c in g.terms.items()})


@settings(max_examples=200)
@given(polys(), polys(), st.integers(-3, 3))
def test_f_minus_round_trip_and_linearity(g, h, k):
    assert f_minus_inv(g).terms == g.terms
    assert f_minus(g) == f_minus_inv(_negate_vars(g))
    assert f_minus(g + h.scale(k)) == f_minus(g) + f_minus(h).scale(k)
    assert f_minus_inv(g - h) == f_minus_inv(g) - f_minus_inv(h)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kernel_formula_agreement(n):
    w = puncture(square_window(n))
    for p in square_zero_locus(n):
        d = operator_at(w, p)
        for deg in range(7):
            assert sol_space(d, deg).dimension == dim_formula(d, deg), (n, str(p), deg)


def test_step_e_soundness_random_pairs():
    rng = random.Random(20240611)
    cases = []
    for n in (2, 3):
        w = puncture(square_window(n))
        for p in square_zero_locus(n):
            d = operator_at(w, p)
            cases.append((w, p, sol_space(d, 2)))
    for _ in range(20):
        w, p, space = rng.choice(cases)
        coeffs = [rng.randint(-3, 3) for _ in space.basis]
        g = Poly2({})
        for c, b in zip(coeffs, space.basis):
            g = g + b.scale(c)
        a = array_from_solution(p, g, (0, 11, 0, 11))
        interior = delta_on_interior(w, a)
        assert interior and all(v.is_zero() for v in interior.values())


@pytest.mark.parametrize("g,deg", [(X - Y, 1), ((X - Y) ** 2 - (X + Y), 2)])
def test_growth_is_polynomial_of_degree(g, deg):
    # along k = (t, 0) the entry over the character value is a polynomial in t
    vals = []
    for t in range(deg + 4):
        v = array_value(MINUS, g, (t, 0))
        char = CycElem.from_rational((-1) ** t)
        vals.append((v * char.inverse()).to_rational())
    diffs = vals
    for _ in range(deg):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    assert len(set(diffs)) == 1 and diffs[0] != 0  # degree exactly deg
    diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    assert all(x == 0 for x in diffs)
