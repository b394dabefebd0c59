import itertools

import pytest
from hypothesis import given, strategies as st

from p2census.finite_field import dlog, element_order, frobenius, make_field

SMALL = [2, 3, 5, 7]


def test_f4_modulus_and_generator():
    F = make_field(2, 2)
    # x^2 + x + 1 over F_2, low degree first
    assert F.modulus == (1, 1, 1)
    g = F.generator
    assert g * g * g == F.one
    assert g * g != F.one


def test_prime_field_generator():
    F = make_field(3, 1)
    assert F.generator == F(2)
    assert F.order == 2


def test_f9_size():
    F = make_field(3, 2)
    assert F.order == 8
    assert len(F.units()) == 8


def test_generator_is_least_primitive():
    for p in SMALL:
        F = make_field(p, 2)
        for x in F.units():
            if x == F.generator:
                break
            assert element_order(x) < F.order


def test_rejects_composite():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(5, 3)


@pytest.mark.parametrize("p", SMALL)
def test_modulus_is_irreducible(p):
    F = make_field(p, 2)
    k0, k1, _ = F.modulus
    assert all((x * x + k1 * x + k0) % p for x in range(p))


@pytest.mark.parametrize("p", SMALL)
def test_inverse_and_frobenius_square(p):
    F = make_field(p, 2)
    for x in F.units():
        assert x * x.inverse() == F.one
    for x in F.elements():
        assert frobenius(frobenius(x)) == x


@pytest.mark.parametrize("p", SMALL)
def test_frobenius_is_automorphism(p):
    F = make_field(p, 2)
    for x, y in itertools.product(F.elements(), repeat=2):
        assert frobenius(x + y) == frobenius(x) + frobenius(y)
        assert frobenius(x * y) == frobenius(x) * frobenius(y)


def test_frobenius_examples():
    F = make_field(3, 2)
    assert frobenius(F.generator) == F.generator ** 3
    assert frobenius(F.zero) == F.zero
    for x in F.prime_field_units():
        assert frobenius(x) == x


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_log_table_bijection(p):
    F = make_field(p, 2)
    images = {F.gen_pow(k) for k in range(F.order)}
    assert len(images) == F.order
    for k in range(F.order):
        assert dlog(F.gen_pow(k)) == k


def test_dlog_examples():
    F = make_field(5, 2)
    assert dlog(F.one) == 0
    assert dlog(F.generator) == 1
    with pytest.raises(ValueError):
        dlog(F.zero)


def test_element_order_examples():
    F = make_field(3, 2)
    assert element_order(F.one) == 1
    assert element_order(F.generator) == 8
    assert element_order(F.generator ** 2) == 4
    with pytest.raises(ValueError):
        element_order(F.zero)


def test_element_order_by_repeated_multiplication():
    for p in SMALL:
        F = make_field(p, 2)
        for x in F.units():
            k, y = 1, x
            while y != F.one:
                y = y * x
                k += 1
            assert element_order(x) == k


@given(st.sampled_from(SMALL), st.integers(0, 10**6), st.integers(0, 200))
def test_order_of_power(p, k, j):
    F = make_field(p, 2)
    x = F.gen_pow(k)
    n = element_order(x)
    from math import gcd

    assert element_order(x**j) == n // gcd(j, n)


def test_inverse_of_zero_rejected():
    F = make_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        make_field(3, 2).one + make_field(5, 2).one


def test_code_tables_match_operators():
    F = make_field(5, 2)
    for x, y in itertools.product(F.elements(), repeat=2):
        assert F.add_table[x.code][y.code] == (x + y).code
        assert F.mul_table[x.code][y.code] == (x * y).code
