import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystalkit import frobmono
from crystalkit.binfty import apply_e_string, b_rs
from crystalkit.frobmono import (CASES, ZERO, estring_of_case, eta_p,
                                 format_monomial, fr, fr_split,
                                 parse_monomial, weight, xi_p)
from crystalkit.rootsys import cartan_data

monomials = st.lists(
    st.tuples(st.integers(1, 5), st.integers(1, 6)), max_size=8).map(tuple)


def test_fr_examples():
    assert fr(2, ((1, 2), (2, 4))) == ((1, 1), (2, 2))
    assert fr(2, ((1, 2), (2, 3))) is ZERO
    assert fr(1, ((1, 3),)) == ((1, 3),)


def test_fr_split_examples():
    assert fr_split(3, ((1, 2),)) == ((1, 6),)
    assert fr_split(2, ()) == ()


def test_frobenius_validation():
    with pytest.raises(ValueError):
        fr(0, ((1, 2),))
    with pytest.raises(ValueError):
        fr_split(-1, ())


@given(monomials, st.integers(1, 4))
def test_round_trip(m, ell):
    assert fr(ell, fr_split(ell, m)) == m


@given(monomials, monomials, st.integers(1, 4))
def test_concatenation_homomorphism(m1, m2, ell):
    assert fr_split(ell, m1 + m2) == fr_split(ell, m1) + fr_split(ell, m2)
    both = fr(ell, m1 + m2)
    parts = (fr(ell, m1), fr(ell, m2))
    if ZERO in parts:
        assert both is ZERO
    else:
        assert both == parts[0] + parts[1]


@given(monomials, st.integers(1, 4))
def test_weight_equivariance(m, ell):
    a5 = cartan_data("A5")
    scaled = weight(a5, fr_split(ell, m))
    assert scaled == tuple(ell * x for x in weight(a5, m))


def test_case_tables_spot_checks():
    assert xi_p("I", 1) == ((2, 1), (4, 1), (1, 1), (3, 2), (5, 1), (2, 1), (4, 1))
    assert eta_p("III", 1) == ((2, 1), (1, 1), (3, 1), (4, 1), (2, 2),
                               (1, 1), (3, 1), (4, 1), (2, 1))
    assert xi_p("I", 0) == ()
    with pytest.raises(ValueError):
        xi_p("V", 1)
    with pytest.raises(ValueError):
        xi_p("I", -1)


def test_case_weights():
    for case in CASES:
        cartan = frobmono.case_cartan(case)
        for p in (1, 2, 3):
            wx = weight(cartan, xi_p(case, p))
            we = weight(cartan, eta_p(case, p))
            assert we == tuple(2 * x for x in wx)
            assert wx == tuple(p * x for x in weight(cartan, xi_p(case, 1)))


def test_estrings_rebuild_the_distinguished_elements():
    for case in CASES:
        cartan = frobmono.case_cartan(case)
        for r in range(3):
            for s in range(2):
                if r + 2 * s > 4:
                    continue
                via_strings = apply_e_string(
                    cartan,
                    estring_of_case(case, r + s) + estring_of_case(case, s))
                assert via_strings == b_rs(case, r, s)


def test_parse_and_format():
    assert parse_monomial("t2^3 t4 t1^2") == ((2, 3), (4, 1), (1, 2))
    assert format_monomial(((2, 3), (4, 1))) == "t2^3 t4"
    assert format_monomial(ZERO) == "0"
    assert format_monomial(()) == "1"
    with pytest.raises(ValueError):
        parse_monomial("x2")
    with pytest.raises(ValueError):
        parse_monomial("t2^0")
