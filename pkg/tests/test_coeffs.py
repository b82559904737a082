import pytest
from hypothesis import given, strategies as st

from dsring.coeffs import (IntPoly, LaurentPoly, coef_substitute,
                           coeff_from_json, coeff_to_json)


def int_polys():
    return st.dictionaries(st.integers(0, 6), st.integers(-9, 9), max_size=5).map(IntPoly)


def laurent_polys(min_exp=-4):
    return st.dictionaries(st.integers(min_exp, 6), st.integers(-9, 9),
                           max_size=5).map(LaurentPoly)


# -- frozen arithmetic examples ---------------------------------------

def test_negate_one_minus_q():
    assert (LaurentPoly.ONE_MINUS_Q * -1) == LaurentPoly({0: -1, 1: 1})


def test_one_minus_q_times_q():
    assert LaurentPoly.ONE_MINUS_Q * LaurentPoly.Q == LaurentPoly({1: 1, 2: -1})


def test_additive_identity():
    t2 = IntPoly({2: 1})
    assert t2 + 0 == t2
    assert 0 + t2 == t2


def test_substitute_q_one():
    assert coef_substitute(LaurentPoly.ONE_MINUS_Q, "q_to_one") == 0
    assert coef_substitute(LaurentPoly({0: 1, 1: -1, 2: 1}), "q_to_one") == 1


def test_substitute_q_one_minus_t():
    assert coef_substitute(LaurentPoly.ONE_MINUS_Q, "q_to_one_minus_t") == IntPoly.T
    # (1-q)^2 -> t^2, and a constant stays put
    sq = LaurentPoly.ONE_MINUS_Q ** 2
    assert sq.at_q_one_minus_t() == IntPoly({2: 1})
    assert LaurentPoly(5).at_q_one_minus_t() == 5


def test_substitute_rejects_negative_exponents():
    with pytest.raises(ValueError):
        LaurentPoly({-1: 1}).at_q_one_minus_t()


def test_substitute_bad_target():
    with pytest.raises(ValueError):
        coef_substitute(LaurentPoly.Q, "q_to_zero")
    with pytest.raises(TypeError):
        coef_substitute(IntPoly.T, "q_to_one")


# -- normalization and basic behavior ---------------------------------

def test_no_zero_terms_stored():
    p = IntPoly({0: 3, 2: 0, 5: -1})
    assert set(p.terms) == {0, 5}
    assert not LaurentPoly({3: 0})
    assert LaurentPoly({3: 0}) == 0


def test_intpoly_rejects_negative_exponent():
    with pytest.raises(ValueError):
        IntPoly({-1: 2})


def test_rejects_non_integer_pieces():
    with pytest.raises(TypeError):
        IntPoly({0: 1.5})
    with pytest.raises(TypeError):
        LaurentPoly({0.5: 1})


def test_constant_comparison_with_int():
    assert IntPoly(7) == 7
    assert LaurentPoly(-2) == -2
    assert IntPoly.T != 1
    assert hash(IntPoly(7)) == hash(7)


def test_power():
    assert LaurentPoly.Q ** 0 == 1
    assert (IntPoly.T ** 3).terms == {3: 1}
    with pytest.raises(ValueError):
        IntPoly.T ** -1


def test_str_rendering():
    assert str(IntPoly(0)) == "0"
    assert str(IntPoly.T) == "t"
    assert str(IntPoly({0: 1, 1: -1, 2: 1})) == "1 - t + t^2"
    assert str(LaurentPoly({-1: 2, 1: 1})) == "2q^-1 + q"
    assert str(IntPoly({1: -3})) == "-3t"
    assert IntPoly({2: 1}).latex() == "t^{2}"


def test_json_roundtrip():
    for x in (42, IntPoly({0: 1, 3: -2}), LaurentPoly({-2: 5, 0: 1}),
              IntPoly(0), LaurentPoly.Q):
        assert coeff_from_json(coeff_to_json(x)) == x
    assert coeff_to_json(IntPoly({1: 1, 0: 2})) == {"var": "t", "terms": [[0, 2], [1, 1]]}
    assert coeff_from_json("12") == 12


def test_cross_variable_mixing_is_rejected():
    with pytest.raises(TypeError):
        IntPoly.T + LaurentPoly.Q


# -- ring axioms, property style --------------------------------------

@given(int_polys(), int_polys(), int_polys())
def test_intpoly_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + 0 == x
    assert x * 1 == x
    assert x + (-x) == 0


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_laurent_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(laurent_polys(), laurent_polys())
def test_q_one_substitution_is_a_homomorphism(x, y):
    assert (x * y).at_q_one() == x.at_q_one() * y.at_q_one()
    assert (x + y).at_q_one() == x.at_q_one() + y.at_q_one()


@given(laurent_polys(min_exp=0), laurent_polys(min_exp=0))
def test_q_one_minus_t_substitution_is_a_homomorphism(x, y):
    assert (x * y).at_q_one_minus_t() == x.at_q_one_minus_t() * y.at_q_one_minus_t()
    assert (x + y).at_q_one_minus_t() == x.at_q_one_minus_t() + y.at_q_one_minus_t()
