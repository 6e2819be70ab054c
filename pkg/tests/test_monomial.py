import pytest
from hypothesis import given, strategies as st

from wheelcoh.monomial import (DimensionError, DivisibilityError, Monomial, MonomialIdeal,
                               Polynomial, brute_force_minimal_primes, gcd_all,
                               ideal_minimal_generators, is_vertex_cover, lcm_all)

from conftest import E, monomials


def test_parse_and_print_round_trip():
    m = Monomial.parse("x_1*x_6", 7)
    assert m == E(1, 6)
    assert str(m) == "x_1*x_6"
    assert str(Monomial.parse("x_3^2*x_4", 4)) == "x_3^2*x_4"
    assert Monomial.parse("1", 3).is_one()


def test_parse_rejects_garbage_and_out_of_range():
    with pytest.raises(ValueError):
        Monomial.parse("y_1", 3)
    with pytest.raises(DimensionError):
        Monomial.parse("x_4", 3)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Monomial([1, -1])


def test_divisor_notation():
    assert E(1, 5, 6, 7).divisor_str() == "E_1+E_5+E_6+E_7"
    assert Monomial([0, 0, 2]).divisor_str() == "2E_3"
    assert Monomial.one(3).divisor_str() == "0"


def test_division_names_failing_coordinate():
    with pytest.raises(DivisibilityError, match="x_2"):
        Monomial([1, 0]) / Monomial([0, 1])
    assert Monomial([2, 1]) / Monomial([1, 1]) == Monomial([1, 0])


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        Monomial([1]) * Monomial([1, 2])


@given(monomials(4), monomials(4))
def test_gcd_lcm_product(a, b):
    assert a.gcd(b) * a.lcm(b) == a * b
    assert a.gcd(b).divides(a) and a.divides(a.lcm(b))


@given(st.lists(monomials(3), min_size=1, max_size=5))
def test_lcm_all_is_least_common_multiple(ms):
    top = lcm_all(ms)
    assert all(m.divides(top) for m in ms)
    low = gcd_all(ms)
    assert all(low.divides(m) for m in ms)


def test_ideal_minimalization_and_equality():
    I = MonomialIdeal([Monomial([1, 1]), Monomial([1, 0]), Monomial([0, 2])], 2)
    assert list(I) == [Monomial([1, 0]), Monomial([0, 2])]
    assert I == ideal_minimal_generators([Monomial([0, 2]), Monomial([1, 0])])
    assert Monomial([3, 0]) in I and Monomial([0, 1]) not in I


def test_unit_and_zero_ideals():
    assert MonomialIdeal([Monomial.one(2)], 2).is_unit()
    zero = MonomialIdeal([], 2)
    assert zero.is_zero()
    assert zero.minimal_primes() == [frozenset()]
    assert MonomialIdeal([Monomial.one(2)], 2).minimal_primes() == []


def test_minimal_primes_example():
    # <x1 x2, x2 x3> has primes (x2) and (x1, x3)
    I = MonomialIdeal([Monomial([1, 1, 0]), Monomial([0, 1, 1])], 3)
    assert I.minimal_primes() == [frozenset({1}), frozenset({0, 2})]


@given(st.lists(monomials(5, 2), min_size=1, max_size=5))
def test_minimal_primes_match_brute_force(gens):
    I = MonomialIdeal(gens, 5)
    primes = I.minimal_primes()
    assert primes == brute_force_minimal_primes(I)
    assert all(is_vertex_cover(p, I) for p in primes)


def test_polynomial_arithmetic():
    x = Polynomial.monomial(Monomial([1, 0]))
    y = Polynomial.monomial(Monomial([0, 1]))
    p = (x + y) * (x - y)
    assert p == Polynomial.monomial(Monomial([2, 0])) - Polynomial.monomial(Monomial([0, 2]))
    assert (x - x).is_zero()
    assert y.single_term() == (1, Monomial([0, 1]))
    with pytest.raises(ValueError):
        (x + y).single_term()
