from math import gcd

import pytest

from p2census.finite_field import dlog, element_order, make_field
from p2census.matrix_groups import (
    GroupTooLarge,
    Mat2,
    canonical_subgroup,
    canonicalize,
    closure,
    find_isomorphism,
    is_isomorphic,
    make_M,
    make_T,
    make_U,
    make_V,
    multiplication_matrix,
)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_group_relations(p):
    F = make_field(p, 2)
    for b in F.prime_field_units():
        U = make_U(b)
        assert U @ U == make_T(b)
        Ui = U.inverse()
        for a in F.units():
            assert U @ make_T(a) @ Ui == make_T(a**p)


def test_matrix_basics():
    F = make_field(3, 2)
    g = F.generator
    A = Mat2.of(g, F.one, F.zero, g)
    assert A @ A.inverse() == Mat2.identity(F)
    assert A.det() == g * g
    assert A.apply((F.zero, F.one)) == (F.one, g)
    with pytest.raises(ValueError):
        make_T(F.zero)


def test_closure_orders():
    F = make_field(3, 2)
    assert closure([Mat2.identity(F)]).order == 1
    assert closure([make_T(F.generator)]).order == 8
    assert closure([make_T(F.generator), make_U(F.one)]).order == 16


@pytest.mark.parametrize("p", [2, 3, 5])
def test_closure_is_twice_the_diagonal_part(p):
    F = make_field(p, 2)
    for a in F.units():
        if a.in_prime_field():
            continue
        for b in F.prime_field_units():
            G = closure([make_T(a), make_U(b)])
            c = element_order(a) * element_order(b) // gcd(element_order(a), element_order(b))
            assert G.order == 2 * c
            assert not G.is_abelian()


def test_closure_cap():
    F = make_field(5, 2)
    with pytest.raises(GroupTooLarge):
        closure([make_T(F.generator), make_U(F.one)], cap=10)
    with pytest.raises(ValueError):
        closure([])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_conjugation_to_canonical_form(p):
    F = make_field(p, 2)
    for b in F.prime_field_units():
        j = dlog(b) // (p + 1)
        M = make_M(j, F)
        assert M @ make_U(b) @ M.inverse() == make_V(j, F)
        for a in F.units():
            assert M @ make_T(a) @ M.inverse() == make_T(a)


@pytest.mark.parametrize("p", [3, 5])
def test_isomorphism_classes_of_canonical_groups(p):
    F = make_field(p, 2)
    n = F.order
    for c in [c for c in range(1, n + 1) if n % c == 0 and (p - 1) % c]:
        m = n // c
        gamma = F.gen_pow(m)
        # V_j^2 = T_{g^(j(p+1))} must lie in <T_gamma>
        js = [j for j in range(p - 1) if j * (p + 1) % m == 0]
        groups = {j: closure([make_T(gamma), make_V(j, F)]) for j in js}
        d = gcd(m, p - 1)
        for j1 in groups:
            for j2 in groups:
                same = (j1 - j2) % d == 0
                assert is_isomorphic(groups[j1], groups[j2]) == same, (c, j1, j2)


def test_canonicalize_examples():
    F = make_field(3, 2)
    g = F.generator
    assert canonicalize(g, F.one) == (8, 0)
    assert canonicalize(g**2, F.one) == (4, 0)
    # gamma = g^2 has gamma^(p+1) = 1, so beta = -1 is outside: quaternion case
    assert canonicalize(g**2, F(2)) == (4, 1)
    # c = 8 leaves m = 1: a single class
    assert canonicalize(g**3, F(2)) == (8, 0)
    with pytest.raises(ValueError):
        canonicalize(F.one, g)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_canonical_subgroup_is_conjugate(p):
    F = make_field(p, 2)
    for a in F.units()[:: max(1, F.order // 6)]:
        if a.in_prime_field():
            continue
        for b in F.prime_field_units():
            G = closure([make_T(a), make_U(b)])
            assert canonical_subgroup(a, b).order == G.order


def test_is_isomorphic_examples():
    F = make_field(3, 2)
    g = F.generator
    cyc8 = closure([multiplication_matrix(g)])
    diag8 = closure([make_T(g)])
    assert is_isomorphic(cyc8, diag8)
    semi = closure([make_T(g**2), make_U(F.one)])
    q8 = closure([make_T(g**2), make_U(F(2))])
    assert semi.order == q8.order == 8
    assert not is_isomorphic(semi, cyc8)
    assert not is_isomorphic(semi, q8)
    phi = find_isomorphism(cyc8, diag8)
    t1, t2 = cyc8.table, diag8.table
    assert all(phi[t1[x][y]] == t2[phi[x]][phi[y]] for x in range(8) for y in range(8))


def test_multiplication_matrix_is_a_homomorphism():
    F = make_field(5, 2)
    for x in F.units()[:6]:
        for y in F.units()[:6]:
            assert multiplication_matrix(x) @ multiplication_matrix(y) == multiplication_matrix(x * y)
    for x in F.units():
        v = (F.one, F.zero)
        col = multiplication_matrix(x).apply(v)
        assert col == (F(x.coeffs[0]), F(x.coeffs[1]))
