import math
from fractions import Fraction

import pytest

from tomofix.bounded import (
    RankDeficiencyError,
    bounded_basis,
    character_array,
    galois_orbits,
    period_lattice,
    rational_basis,
)
from tomofix.core import delta, is_fixed, puncture, square_window
from tomofix.cyclotomic import CycElem, root_of_unity
from tomofix.linalg import rank
from tomofix.spectra import TorusPoint, square_zero_locus


def test_character_array_n2():
    a = character_array(TorusPoint.of(3, 1, 2))
    assert a.dims == (3, 3)
    z3 = root_of_unity(3, 1)
    assert all(a.array[i, j] == z3 ** (i + 2 * j) for i in range(3) for j in range(3))
    assert delta(square_window(2), a.array) == a.array


def test_checkerboard_n3():
    a = character_array(TorusPoint.of(2, 1, 1))
    assert a.dims == (2, 2)
    assert [v.to_rational() for v in a.array.values] == [1, -1, -1, 1]
    assert is_fixed(square_window(3), a.array)


def test_all_ones_is_not_fixed():
    a = character_array(TorusPoint.of(1, 0, 0))
    assert not is_fixed(square_window(2), a.array)
    assert delta(puncture(square_window(2)), a.array).values == (CycElem.from_rational(3),)


def test_incompatible_dims_rejected():
    with pytest.raises(ValueError):
        character_array(TorusPoint.of(3, 1, 2), (4, 3))


def test_bounded_counts():
    assert len(bounded_basis(2)) == 2
    assert len(bounded_basis(3)) == 7
    assert len(bounded_basis(4)) == 16


def test_periods_n3():
    got = sorted(period_lattice(a) for a in bounded_basis(3))
    want = sorted([((2, 0), (0, 2))] + [((4, 0), (0, 4))] * 2 + [((8, 0), (0, 8))] * 4)
    assert got == want
    assert period_lattice(character_array(TorusPoint.of(8, 1, 3))) == ((8, 0), (0, 8))
    assert period_lattice(character_array(TorusPoint.of(4, 1, 3))) == ((4, 0), (0, 4))
    assert period_lattice(character_array(TorusPoint.of(1, 0, 0))) == ((1, 0), (0, 1))


@pytest.mark.parametrize("n", range(2, 7))
def test_character_arrays_fixed(n):
    w = square_window(n)
    for a in bounded_basis(n):
        assert delta(w, a.array) == a.array


def test_rational_basis_n2_closed_forms():
    rb = rational_basis(2)
    assert rb.dims == (3, 3) and rb.orbit_sizes == (2,)
    first, second = rb.arrays
    # orbit average of (z3, z3^2) and (z3^2, z3) is b1 / 2
    assert all(first[i, j] == (1 if (i - j) % 3 == 0 else Fraction(-1, 2)) for i in range(3) for j in range(3))
    assert second == first.translate((1, 0))


def test_rational_basis_n3_translates_and_rank():
    rb = rational_basis(3)
    assert rb.dims == (8, 8) and sorted(rb.orbit_sizes) == [1, 2, 4]
    assert rank([list(a.values) for a in rb.arrays]) == 7
    start = 0
    for size in rb.orbit_sizes:
        block = rb.arrays[start : start + size]
        for t, arr in enumerate(block):
            assert arr == block[0].translate((t, 0))
        start += size


def test_scaled_rational_array_stays_in_kernel():
    b = rational_basis(2).arrays[0]
    assert delta(puncture(square_window(2)), b.scale(5)).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rational_span_contains_coefficient_slices(n):
    # a = sum_t c_t zeta^t with rational arrays c_t; over Q(i) the two
    # slices are exactly the real and imaginary parts
    rb = rational_basis(n)
    base = [list(a.values) for a in rb.arrays]
    r = rank(base)
    for p in square_zero_locus(n):
        arr = character_array(p, rb.dims).array
        m = math.lcm(*(v.conductor for v in arr.values))
        coeffs = [v.embed(m).coeffs for v in arr.values]
        for t in range(len(coeffs[0])):
            assert rank(base + [[c[t] for c in coeffs]]) == r, (p, t)


def test_real_and_imaginary_parts_for_gaussian_points():
    rb = rational_basis(3)
    base = [list(a.values) for a in rb.arrays]
    i = root_of_unity(4, 1)
    for p in (TorusPoint.of(4, 1, 3), TorusPoint.of(4, 3, 1)):
        arr = character_array(p, rb.dims).array
        conj = arr.map(lambda v: v.conjugate())
        re = (arr + conj).map(lambda v: (v * Fraction(1, 2)).to_rational())
        im = (arr - conj).map(lambda v: (v * (i * 2).inverse()).to_rational())
        assert rank(base + [list(re.values), list(im.values)]) == 7


def test_rank_deficiency_reported_n5():
    # the orbit {(-1, i), (-1, -i)} shares its x value, so horizontal
    # translates cannot separate its two characters
    with pytest.raises(RankDeficiencyError):
        rational_basis(5)
    orbit = next(o for o in galois_orbits(square_zero_locus(5)) if len({p.x for p in o}) < len(o))
    assert {p.x.order for p in orbit} == {2} and {p.y.order for p in orbit} == {4}
