import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tomofix.core import Window, puncture, square_window
from tomofix.cyclotomic import CycElem
from tomofix.spectra import (
    LaurentPoly2,
    TorusPoint,
    char_poly,
    evaluate,
    locus_angles,
    numeric_scan,
    punctured_square_poly,
    square_zero_locus,
    star,
    zero_locus_oracle,
)

N3 = {
    TorusPoint.of(2, 1, 1),
    TorusPoint.of(4, 1, 3),
    TorusPoint.of(4, 3, 1),
    TorusPoint.of(8, 1, 3),
    TorusPoint.of(8, 3, 1),
    TorusPoint.of(8, 5, 7),
    TorusPoint.of(8, 7, 5),
}


def test_char_poly_examples():
    assert char_poly(square_window(2)).as_dict() == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    assert char_poly(puncture(square_window(2))).as_dict() == {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    assert char_poly(Window([(0, 0)])).as_dict() == {(0, 0): 1}


def test_square_char_poly_factorises():
    # m_S(n) = (1 + x + ... + x^(n-1)) (1 + y + ... + y^(n-1)), one term per cell
    for n in range(2, 6):
        assert char_poly(square_window(n)).as_dict() == {(i, j): 1 for i in range(n) for j in range(n)}


def test_star_examples():
    f = char_poly(puncture(square_window(2)))
    assert star(f).as_dict() == {(-1, 0): 1, (0, -1): 1, (-1, -1): 1}
    one = LaurentPoly2({(0, 0): 1})
    assert star(one) == one


@settings(max_examples=100)
@given(st.dictionaries(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(-5, 5), max_size=6))
def test_star_is_an_involution(terms):
    f = LaurentPoly2(terms)
    assert star(star(f)) == f


def test_evaluate_examples():
    assert evaluate(punctured_square_poly(2), TorusPoint.of(3, 1, 2)).is_zero()
    assert evaluate(punctured_square_poly(3), TorusPoint.of(2, 1, 1)).is_zero()
    assert evaluate(punctured_square_poly(2), TorusPoint.of(1, 0, 0)) == 3


def test_zero_locus_n2():
    assert square_zero_locus(2) == [TorusPoint.of(3, 1, 2), TorusPoint.of(3, 2, 1)]


def test_zero_locus_n3():
    pts = square_zero_locus(3)
    assert len(pts) == 7 and set(pts) == N3


def test_zero_locus_n4_size():
    n = 4
    pts = square_zero_locus(n)
    assert len(pts) == 16 == (n - 2) ** 2 + n * n - n
    assert pts == zero_locus_oracle(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_oracle_agreement(n):
    assert square_zero_locus(n) == zero_locus_oracle(n)


def test_oracle_threads_do_not_change_order():
    assert zero_locus_oracle(5, threads=1) == zero_locus_oracle(5, threads=4)


def test_zero_locus_rejects_small_n():
    with pytest.raises(ValueError):
        square_zero_locus(1)


def test_ordering_is_by_x_order_then_exponent():
    pts = square_zero_locus(4)
    assert pts == sorted(pts, key=TorusPoint.sort_key)
    assert [p.x.order for p in pts] == sorted(p.x.order for p in pts)


@pytest.mark.parametrize("n", range(2, 9))
def test_locus_symmetries_and_constraint(n):
    pts = set(square_zero_locus(n))
    for p in pts:
        assert p.conjugate() in pts
        assert p.swap() in pts
        one = CycElem.one()
        assert (p.x.elem() * p.y.elem()) ** (n - 1) == one


def test_json_encoding():
    assert TorusPoint.of(8, 1, 3).to_json() == {"x": {"N": 8, "k": 1}, "y": {"N": 8, "k": 3}}


@pytest.mark.parametrize("n", [2, 3])
def test_numeric_scan_hits_are_near_exact_locus(n):
    exact = [(float(a), float(b)) for a, b in locus_angles(square_zero_locus(n))]

    def dist(u, v):
        d = abs(u - v) % 1.0
        return min(d, 1.0 - d)

    for hx, hy in numeric_scan(n):
        assert min(max(dist(hx, ex), dist(hy, ey)) for ex, ey in exact) < 1e-3
