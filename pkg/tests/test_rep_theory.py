from collections import Counter
from math import gcd

import pytest

from p2census.numtheory import divisors
from p2census.rep_theory import (
    MetacyclicGroup,
    enumerate_irreducibles,
    galois_orbits,
    module_inventory,
    multiplicity_in_Y,
    rep_dimension,
    submodule_count,
)


def test_trivial_group():
    H = MetacyclicGroup.from_field(3, 1, 1, 1)
    classes = enumerate_irreducibles(H)
    assert len(classes) == 1
    assert rep_dimension(classes[0]) == 1


def test_small_example_dims_and_multiplicities():
    H = MetacyclicGroup.from_field(5, 3, 2, 1)
    classes = enumerate_irreducibles(H)
    assert sorted(c.s for c in classes) == [1, 1, 2]
    assert sorted(multiplicity_in_Y(c, 1) for c in classes) == [1, 1, 2]


def test_beta_drops_p_torsion():
    # f = 2 at p = 2: beta has no room for order 2 in characteristic 2
    H = MetacyclicGroup.from_field(2, 3, 2, 1)
    assert [c.s for c in enumerate_irreducibles(H)] == [1, 2]


@pytest.mark.parametrize(
    "p, e, f, fk",
    [(2, 7, 3, 1), (3, 8, 2, 1), (3, 8, 4, 2), (5, 12, 2, 1), (5, 24, 4, 1), (7, 16, 4, 1)],
)
def test_orbit_partition(p, e, f, fk):
    H = MetacyclicGroup.from_field(p, e, f, fk)
    for t in divisors(e):
        seen = set()
        for c in enumerate_irreducibles(H):
            if c.t != t or c.b:
                continue
            orbit = set(c.orbit())
            assert len(orbit) == c.s
            assert not orbit & seen
            seen |= orbit
        # every unit of Z/t lies in exactly one orbit
        assert seen == {a for a in range(t) if gcd(a, t) == 1} | ({0} if t == 1 else set())


@pytest.mark.parametrize("p, e, f, fk", [(5, 3, 2, 1), (3, 8, 2, 1), (7, 8, 2, 1), (5, 24, 2, 1), (2, 7, 3, 1), (3, 4, 2, 1), (7, 48, 2, 1)])
def test_sum_of_squares(p, e, f, fk):
    H = MetacyclicGroup.from_field(p, e, f, fk)
    assert (e * f) % p
    assert sum(c.s**2 for c in enumerate_irreducibles(H)) == e * f


def test_dimension_two_characterisation():
    # with f_K odd, F_p-dimension 2 means (r, w) is (1, 2) or (2, 1)
    for p in (3, 5, 7):
        H = MetacyclicGroup.from_field(p, p * p - 1, 2 * (p * p - 1), 1)
        for c in enumerate_irreducibles(H):
            dim = rep_dimension(c)
            if (c.r, c.w) in ((1, 2), (2, 1)):
                assert dim == 2
            if dim == 2:
                assert c.r <= 2 and c.w <= 2 and (c.r, c.w) != (1, 1)


def test_dimension_two_even_fk():
    p = 3
    H = MetacyclicGroup.from_field(p, 8, 8, 2)
    for c in enumerate_irreducibles(H):
        assert c.s == 1
        assert rep_dimension(c) == max(c.r, c.w)


def test_submodule_count():
    assert submodule_count(2, 2, 3) == 10
    assert submodule_count(1, 1, 7) == 1
    assert submodule_count(1, 4, 2) == 15
    with pytest.raises(ValueError):
        submodule_count(0, 1, 2)


def test_inventory_dimensions_add_up():
    p, n = 5, 2
    H = MetacyclicGroup.from_field(p, 24, 2, 1)
    inv = module_inventory(H, n)
    assert inv.trivial_summand == 1 and inv.cyclotomic_summand == 1
    for row in inv.rows:
        assert row.dim_fp % row.dim_fpbar == 0
        assert row.multiplicity_in_Y == n * row.dim_fpbar
        assert row.def_field_degree * row.dim_fpbar == row.dim_fp


def test_galois_orbits_dim2_count():
    H = MetacyclicGroup.from_field(3, 8, 8, 1)
    dim2 = [c for c in enumerate_irreducibles(H) if rep_dimension(c) == 2]
    assert len(dim2) == 18
    orbits = [o for o in galois_orbits(H) if rep_dimension(o[0]) == 2]
    assert len(orbits) == 12
    assert Counter(len(o) for o in orbits) == Counter({1: 6, 2: 6})
    for o in orbits:
        assert len(o) * o[0].s == 2


def test_invalid_groups():
    with pytest.raises(ValueError):
        MetacyclicGroup.from_field(3, 3, 2, 1)
    with pytest.raises(ValueError):
        MetacyclicGroup.from_field(5, 7, 1, 1)
    with pytest.raises(ValueError):
        MetacyclicGroup(3, 2, 6)
