"""Brute-force recomputation of every counted quantity.

These routines deliberately avoid the closed formulas and the discrete-log
shortcuts used by the census: orders come from repeated multiplication,
subgroups from explicit element sets, group types from abstract
isomorphism against reference groups.  Only field arithmetic and the matrix
constructors are shared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

import numpy as np

from .census import (
    CYCLIC,
    METACYCLIC,
    CensusReport,
    GroupDescriptor,
    LocalFieldParams,
    census_from_invariants,
    classify_pair,
    enumerate_dim2_orbits,
)
from .finite_field import FieldCtx, FqElem, make_field
from .matrix_groups import MatrixGroup, closure, is_isomorphic, make_T, make_U, multiplication_matrix


@dataclass
class VerifyOutcome:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, inputs, expected, got):
        self.cases += 1
        if expected != got:
            self.failures.append((inputs, expected, got))

    def summary(self) -> str:
        return f"{self.suite}: {self.cases} cases, {len(self.failures)} failures"


# psi


def _orders_mod(n: int) -> np.ndarray:
    x = np.arange(n)
    return n // np.gcd(x, n)


def oracle_psi(a: int, b: int) -> int:
    """Count pairs in ``Z/a x Z/b`` whose order is exactly ``a``."""
    orders = np.lcm.outer(_orders_mod(a), _orders_mod(b))
    return int(np.count_nonzero(orders == a))


# field helpers by repeated multiplication


def _order_by_multiplication(x: FqElem) -> int:
    one = x.ctx.one
    k, y = 1, x
    while y != one:
        y = y * x
        k += 1
    return k


@cache
def _orders_table(p: int) -> dict[int, int]:
    ctx = make_field(p, 2)
    return {x.code: _order_by_multiplication(x) for x in ctx.units()}


def _in_prime_field(x: FqElem) -> bool:
    y = x.ctx.one
    for _ in range(x.ctx.p):
        y = y * x
    return y == x


@cache
def _roots_of_unity(p: int, c: int) -> frozenset[int]:
    ctx = make_field(p, 2)
    orders = _orders_table(p)
    return frozenset(x.code for x in ctx.units() if c % orders[x.code] == 0)


@cache
def _norm_like_subgroup(p: int, c: int) -> frozenset[int]:
    """``<gamma^(p+1)>`` for ``<gamma>`` the subgroup of order ``c``."""
    ctx = make_field(p, 2)
    return frozenset((FqElem(ctx, y) ** (p + 1)).code for y in _roots_of_unity(p, c))


def oracle_lambda_fraction(c: int, p: int) -> Fraction:
    """Fraction of order-``c`` pairs in ``F_{p^2}^x x F_p^x`` with ``beta`` in ``<gamma^(p+1)>``."""
    if (p * p - 1) % c or (p - 1) % c == 0:
        raise ValueError(f"c={c} must divide p^2-1 but not p-1 (p={p})")
    ctx = make_field(p, 2)
    orders = _orders_table(p)
    units = ctx.units()
    prime = [x for x in units if _in_prime_field(x)]
    target = _norm_like_subgroup(p, c)
    total = hits = 0
    for a in units:
        oa = orders[a.code]
        for b in prime:
            ob = orders[b.code]
            # order of the pair = size of <a, b> in a cyclic group
            if _lcm(oa, ob) != c:
                continue
            total += 1
            if b.code in target:
                hits += 1
    return Fraction(hits, total)


def _lcm(x: int, y: int) -> int:
    a, b = x, y
    while b:
        a, b = b, a % b
    return x * y // a


# irreducibility


def _projective_points(ctx: FieldCtx):
    """Normalised spanning vectors of the lines in ``F^2``: ``(1, y)`` and ``(0, 1)``."""
    for y in ctx.elements():
        yield ctx.one, y
    yield ctx.zero, ctx.one


def _plane_lines(ctx: FieldCtx):
    """F_p-lines in F_{p^2} viewed as a plane: sets ``F_p^x * v``."""
    prime = [x for x in ctx.units() if _in_prime_field(x)]
    seen = set()
    for v in ctx.units():
        line = frozenset((k * v).code for k in prime)
        if line not in seen:
            seen.add(line)
            yield line


def _pair_kind(alpha: FqElem, beta: FqElem, f_K_even: bool) -> int:
    a_in, b_in = _in_prime_field(alpha), _in_prime_field(beta)
    if a_in and b_in:
        raise ValueError("both coordinates in F_p^x: not a 2-dimensional pair")
    if f_K_even or a_in:
        return 1
    if not b_in:
        raise ValueError("alpha and beta both outside F_p with odd f_K: not 2-dimensional")
    return 2


def oracle_irreducible_dim2(alpha: FqElem, beta: FqElem, f_K_even: bool) -> bool:
    """No line is invariant under both generators of the 2-dimensional action."""
    ctx = alpha.ctx
    if _in_prime_field(alpha) and _in_prime_field(beta):
        return False
    if _pair_kind(alpha, beta, f_K_even) == 2:
        mats = [make_T(alpha), make_U(beta)]
        for v in _projective_points(ctx):
            if all(_fixes_line(m, v) for m in mats):
                return False
        return True
    for line in _plane_lines(ctx):
        if all(frozenset((g * FqElem(ctx, v)).code for v in line) == line for g in (alpha, beta)):
            return False
    return True


def _fixes_line(m, v) -> bool:
    x, y = m.apply(v)
    return not (x * v[1] - y * v[0])


# group classification


def _subgroup_generator(p: int, c: int) -> FqElem:
    ctx = make_field(p, 2)
    orders = _orders_table(p)
    return next(x for x in ctx.units() if orders[x.code] == c)


@cache
def _reference_group(p: int, kind: str, c: int, split: bool | None) -> MatrixGroup | None:
    ctx = make_field(p, 2)
    g = _subgroup_generator(p, c)
    if kind == CYCLIC:
        return closure([multiplication_matrix(g)])
    if split:
        return closure([make_T(g), make_U(ctx.one)])
    mu = _roots_of_unity(p, c)
    norms = _norm_like_subgroup(p, c)
    candidates = sorted(
        code for code in mu if code not in norms and _in_prime_field(FqElem(ctx, code))
    )
    if not candidates:
        return None
    return closure([make_T(g), make_U(FqElem(ctx, candidates[0]))])


def _candidates(p: int, size: int) -> list[GroupDescriptor]:
    order = p * p - 1
    out = []
    for c in range(1, order + 1):
        if order % c or (p - 1) % c == 0:
            continue
        if c == size:
            out.append(GroupDescriptor(CYCLIC, c, p=p))
        if 2 * c == size:
            out.append(GroupDescriptor(METACYCLIC, c, True, p=p))
            out.append(GroupDescriptor(METACYCLIC, c, False, p=p))
    return out


_IDENTIFIED: dict[tuple[int, frozenset], GroupDescriptor] = {}


def _identify(p: int, G: MatrixGroup) -> GroupDescriptor:
    key = (p, G.element_set)
    if key in _IDENTIFIED:
        return _IDENTIFIED[key]
    matches = []
    for desc in _candidates(p, G.order):
        ref = _reference_group(p, desc.kind, desc.c, desc.split)
        if ref is not None and is_isomorphic(G, ref):
            matches.append(desc)
    if len(matches) != 1:
        raise AssertionError(f"group of order {G.order} matched {matches}")
    _IDENTIFIED[key] = matches[0]
    return matches[0]


def oracle_group_class(alpha: FqElem, beta: FqElem, f_K_even: bool) -> GroupDescriptor:
    """Build the image group by closure and identify it up to isomorphism."""
    p = alpha.ctx.p
    if _pair_kind(alpha, beta, f_K_even) == 1:
        G = closure([multiplication_matrix(alpha), multiplication_matrix(beta)])
    else:
        G = closure([make_T(alpha), make_U(beta)])
    return _identify(p, G)


# census


def _projective_count(field_size: int, m: int) -> int:
    """Lines in ``D^m``: vectors whose first nonzero coordinate is 1."""
    return sum(field_size**i for i in range(m))


@cache
def _raw_classification(p: int, f_K_even: bool) -> dict[GroupDescriptor, int]:
    ctx = make_field(p, 2)
    units = ctx.units()
    counts: dict[GroupDescriptor, int] = {}
    for a in units:
        for b in units:
            a_in, b_in = _in_prime_field(a), _in_prime_field(b)
            if a_in and b_in:
                continue
            if not f_K_even and not a_in and not b_in:
                continue
            desc = oracle_group_class(a, b, f_K_even)
            counts[desc] = counts.get(desc, 0) + 1
    return counts


def oracle_census_from_invariants(p: int, n: int, f_K_even: bool) -> CensusReport:
    rows = []
    for desc, raw in _raw_classification(p, f_K_even).items():
        if raw % 2:
            raise AssertionError(f"odd raw count {raw} for {desc}")
        if desc.kind == CYCLIC:
            factor = _projective_count(p * p, n)
        else:
            factor = _projective_count(p, 2 * n)
        rows.append((desc, raw // 2 * factor))
    rows.sort(key=lambda row: row[0].sort_key())
    total = sum(k for _, k in rows)
    return CensusReport(p, n, f_K_even, tuple(rows), total, p * p * total)


def oracle_census(K: LocalFieldParams) -> CensusReport:
    report = oracle_census_from_invariants(K.p, K.n, K.f_K_even)
    return CensusReport(
        report.p, report.n, report.f_K_even, report.rows,
        report.total_classes, report.total_extensions, K.e_K, K.f_K,
    )


# verification suites


SUITES = ("psi", "lambda", "groups", "census")


def _primes_up_to(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if all(k % d for d in range(2, int(k**0.5) + 1))]


def verify_psi(limit: int = 64) -> VerifyOutcome:
    from .numtheory import psi

    out = VerifyOutcome("psi")
    for a in range(1, limit + 1):
        for b in range(1, limit + 1):
            out.check((a, b), oracle_psi(a, b), psi(a, b))
    return out


def verify_lambda(max_p: int = 13) -> VerifyOutcome:
    from .numtheory import lambda_split

    out = VerifyOutcome("lambda")
    for p in _primes_up_to(max_p):
        order = p * p - 1
        for c in range(1, order + 1):
            if order % c == 0 and (p - 1) % c:
                out.check((c, p), oracle_lambda_fraction(c, p), lambda_split(c, p))
    return out


def verify_groups(max_p: int = 7) -> VerifyOutcome:
    out = VerifyOutcome("groups")
    for p in _primes_up_to(min(max_p, 7)):
        for even in (False, True):
            for pair in enumerate_dim2_orbits(p, even):
                out.check(
                    (p, even, pair.key()),
                    oracle_group_class(pair.alpha, pair.beta, even),
                    classify_pair(pair.alpha, pair.beta, even),
                )
    return out


def verify_census(max_p: int = 7) -> VerifyOutcome:
    out = VerifyOutcome("census")
    for p in _primes_up_to(min(max_p, 7)):
        for n in (1, 2):
            for even in (False, True):
                expected = oracle_census_from_invariants(p, n, even)
                got = census_from_invariants(p, n, even)
                out.check((p, n, even), expected, got)
    return out


def run_suite(name: str, max_p: int = 7) -> list[VerifyOutcome]:
    if name == "all":
        return [run_suite(s, max_p)[0] for s in SUITES]
    if name == "psi":
        return [verify_psi()]
    if name == "lambda":
        return [verify_lambda(max_p)]
    if name == "groups":
        return [verify_groups(max_p)]
    if name == "census":
        return [verify_census(max_p)]
    raise ValueError(f"unknown suite {name!r}")


__all__ = [
    "SUITES",
    "VerifyOutcome",
    "oracle_census",
    "oracle_census_from_invariants",
    "oracle_group_class",
    "oracle_irreducible_dim2",
    "oracle_lambda_fraction",
    "oracle_psi",
    "run_suite",
]
