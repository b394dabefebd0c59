"""Counting degree-p^2 extensions without intermediate fields by Galois group.

Isomorphism classes correspond to irreducible 2-dimensional submodules of
``F^x / (F^x)^p``.  A submodule is fixed by a Frobenius orbit of character
pairs ``(alpha, beta)`` and the Galois group of the normal closure is
``F_{p^2}^+ x| image``, where the image is either the cyclic group ``N_c``
(the ``s = 1`` cases) or the non-abelian ``<T_alpha, U_beta>`` of order
``2c`` (``s = 2``, odd ``f_K`` only).

The output depends on ``K`` only through ``p``, ``n = [K:Q_p]`` and the
parity of ``f_K``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd

from .finite_field import FqElem, dlog, element_order, make_field
from .matrix_groups import canonicalize
from .numtheory import as_integer, divisors, exact_div, is_prime, lambda_split, lcm, mult_order, psi
from .rep_theory import submodule_count

CYCLIC = "cyclic"
METACYCLIC = "metacyclic2"


@dataclass(frozen=True)
class LocalFieldParams:
    p: int
    e_K: int = 1
    f_K: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e_K < 1 or self.f_K < 1:
            raise ValueError("e_K and f_K must be positive")

    @property
    def n(self) -> int:
        return self.e_K * self.f_K

    @property
    def f_K_even(self) -> bool:
        return self.f_K % 2 == 0


@dataclass(frozen=True)
class GroupDescriptor:
    """Isomorphism type of the normal-closure Galois group.

    ``cyclic``: ``F_{p^2}^+ x| C_c`` of order ``c p^2``.
    ``metacyclic2``: ``F_{p^2}^+ x| H_c`` of order ``2 c p^2``, where ``H_c``
    is split or not over its cyclic subgroup of order ``c``.
    """

    kind: str
    c: int
    split: bool | None = None
    p: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.kind not in (CYCLIC, METACYCLIC):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if (self.kind == METACYCLIC) != (self.split is not None):
            raise ValueError("split flag is required exactly for metacyclic2 groups")

    @property
    def order(self) -> int:
        base = self.c * self.p * self.p
        return base if self.kind == CYCLIC else 2 * base

    def sort_key(self):
        # split before non-split
        return (self.kind != CYCLIC, self.c, not self.split)

    def label(self) -> str:
        if self.kind == CYCLIC:
            return f"F_{{p²}}⁺ ⋊ C_{self.c} (order {self.order})"
        tag = "split" if self.split else "nonsplit"
        return f"F_{{p²}}⁺ ⋊ H_{self.c}^{tag} (order {self.order})"


@dataclass(frozen=True)
class CharPair:
    alpha: FqElem
    beta: FqElem

    @property
    def t(self) -> int:
        return element_order(self.alpha)

    @property
    def r(self) -> int:
        return mult_order(self.alpha.ctx.p, self.t)

    @property
    def w(self) -> int:
        return mult_order(self.alpha.ctx.p, element_order(self.beta))

    def s(self, f_K_even: bool) -> int:
        return 1 if f_K_even else self.r

    @property
    def c(self) -> int:
        return lcm(element_order(self.alpha), element_order(self.beta))

    def key(self) -> tuple[int, int]:
        return (dlog(self.alpha), dlog(self.beta))


@dataclass(frozen=True)
class CensusReport:
    p: int
    n: int
    f_K_even: bool
    rows: tuple[tuple[GroupDescriptor, int], ...]
    total_classes: int
    total_extensions: int
    e_K: int | None = None
    f_K: int | None = None

    @property
    def classes_per_extension_orbit(self) -> int:
        return self.p * self.p

    def count(self, descriptor: GroupDescriptor) -> int:
        for d, k in self.rows:
            if d == descriptor:
                return k
        return 0


def valid_c_values(p: int) -> list[int]:
    """Divisors of ``p^2 - 1`` that do not divide ``p - 1``."""
    return [c for c in divisors(p * p - 1) if (p - 1) % c]


def total_classes_closed_form(p: int, n: int) -> int:
    return exact_div(p * (p * p + p - 2) * (p ** (2 * n) - 1), 2 * (p + 1))


def total_extensions_closed_form(p: int, n: int) -> int:
    return exact_div(p**3 * (p * p + p - 2) * (p ** (2 * n) - 1), 2 * (p + 1))


def _dim2_raw_pairs(p: int, f_K_even: bool):
    """Raw character pairs giving 2-dimensional F_p-representations, with their ``s``."""
    ctx = make_field(p, 2)
    units = ctx.units()
    prime = [x for x in units if x.in_prime_field()]
    other = [x for x in units if not x.in_prime_field()]
    if f_K_even:
        for a in units:
            for b in units:
                if not (a.in_prime_field() and b.in_prime_field()):
                    yield a, b, 1
    else:
        for a in prime:
            for b in other:
                yield a, b, 1
        for a in other:
            for b in prime:
                yield a, b, 2


def _partner(alpha: FqElem, beta: FqElem, s: int) -> tuple[FqElem, FqElem]:
    """The other pair giving the same F_p-irreducible."""
    if s == 2:
        return alpha.frobenius(), beta
    return alpha.frobenius(), beta.frobenius()


def enumerate_dim2_orbits(p: int, f_K_even: bool) -> list[CharPair]:
    """One representative per orbit of pairs giving the same F_p-irreducible.

    Orbits have exactly two members; the representative is the one with the
    lexicographically least ``(dlog alpha, dlog beta)``.
    """
    reps = []
    for a, b, s in _dim2_raw_pairs(p, f_K_even):
        a2, b2 = _partner(a, b, s)
        mine, theirs = (dlog(a), dlog(b)), (dlog(a2), dlog(b2))
        if mine == theirs:
            raise AssertionError(f"pair {(a, b)} is fixed by Frobenius")
        if mine < theirs:
            reps.append(CharPair(a, b))
    reps.sort(key=CharPair.key)
    return reps


def is_split(alpha: FqElem, beta: FqElem) -> bool:
    """Whether ``beta`` lies in ``<gamma^(p+1)>`` for ``gamma`` generating ``<alpha, beta>``."""
    ctx = alpha.ctx
    p, order = ctx.p, ctx.order
    m = order // lcm(element_order(alpha), element_order(beta))
    return dlog(beta) % gcd(m * (p + 1), order) == 0


def classify_pair(alpha: FqElem, beta: FqElem, f_K_even: bool) -> GroupDescriptor:
    p = alpha.ctx.p
    a_in, b_in = alpha.in_prime_field(), beta.in_prime_field()
    if a_in and b_in:
        raise ValueError(f"pair {(alpha, beta)} lies in F_p^x x F_p^x: not 2-dimensional")
    if f_K_even or a_in:
        return GroupDescriptor(CYCLIC, lcm(element_order(alpha), element_order(beta)), p=p)
    if not b_in:
        raise ValueError(f"pair {(alpha, beta)} has r = w = 2: dimension 4 for odd f_K")
    c, j_class = canonicalize(alpha, beta)
    split = j_class == 0
    if split != is_split(alpha, beta):
        raise AssertionError(f"canonical form and subgroup test disagree on {(alpha, beta)}")
    return GroupDescriptor(METACYCLIC, c, split, p=p)


def census_rows(p: int, n: int, f_K_even: bool) -> list[tuple[GroupDescriptor, Fraction]]:
    """Per-group counts from the closed formulas, including zero rows."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    big = p ** (2 * n) - 1
    rows = []
    for c in valid_c_values(p):
        b = p * p - 1 if f_K_even else p - 1
        cyc = Fraction(big, p * p - 1) * Fraction(psi(c, b), 2)
        rows.append((GroupDescriptor(CYCLIC, c, p=p), cyc))
    if not f_K_even:
        for c in valid_c_values(p):
            lam = lambda_split(c, p)
            base = Fraction(big, 2 * (p - 1)) * psi(c, p - 1)
            rows.append((GroupDescriptor(METACYCLIC, c, True, p=p), lam * base))
            rows.append((GroupDescriptor(METACYCLIC, c, False, p=p), (1 - lam) * base))
    rows.sort(key=lambda row: row[0].sort_key())
    return rows


def census_from_invariants(p: int, n: int, f_K_even: bool, all_rows: bool = False) -> CensusReport:
    """Census for any ``K`` with ``[K:Q_p] = n`` and the given parity of ``f_K``."""
    rows = []
    for desc, count in census_rows(p, n, f_K_even):
        k = as_integer(count)
        if k or all_rows:
            rows.append((desc, k))
    total = sum(k for _, k in rows)
    closed = total_classes_closed_form(p, n)
    if total != closed:
        raise ArithmeticError(f"row sum {total} != closed form {closed} for p={p}, n={n}")
    return CensusReport(
        p=p,
        n=n,
        f_K_even=f_K_even,
        rows=tuple(rows),
        total_classes=total,
        total_extensions=p * p * total,
    )


def census_k2(K: LocalFieldParams, all_rows: bool = False) -> CensusReport:
    report = census_from_invariants(K.p, K.n, K.f_K_even, all_rows=all_rows)
    if report.total_extensions != total_extensions_closed_form(K.p, K.n):
        raise ArithmeticError("total extension count disagrees with closed form")
    return replace(report, e_K=K.e_K, f_K=K.f_K)


def dim2_submodule_factor(p: int, n: int, s: int) -> int:
    """Submodules per F_p-irreducible: definition degree 2 with multiplicity
    ``n`` when ``s = 1``, degree 1 with multiplicity ``2n`` when ``s = 2``."""
    if s == 1:
        return submodule_count(2, n, p)
    return submodule_count(1, 2 * n, p)


def census_by_enumeration(p: int, n: int, f_K_even: bool) -> CensusReport:
    """Same census, built by classifying every orbit representative.

    Uses ``classify_pair`` directly rather than the closed formulas, so it
    doubles as a consistency check on the formulas for moderate ``p``.
    """
    counts: dict[GroupDescriptor, int] = {}
    for pair in enumerate_dim2_orbits(p, f_K_even):
        desc = classify_pair(pair.alpha, pair.beta, f_K_even)
        s = 1 if desc.kind == CYCLIC else 2
        counts[desc] = counts.get(desc, 0) + dim2_submodule_factor(p, n, s)
    rows = tuple(sorted(counts.items(), key=lambda row: row[0].sort_key()))
    total = sum(k for _, k in rows)
    return CensusReport(p, n, f_K_even, rows, total, p * p * total)


__all__ = [
    "CYCLIC",
    "METACYCLIC",
    "CensusReport",
    "CharPair",
    "GroupDescriptor",
    "LocalFieldParams",
    "census_by_enumeration",
    "census_from_invariants",
    "census_k2",
    "census_rows",
    "classify_pair",
    "dim2_submodule_factor",
    "enumerate_dim2_orbits",
    "is_split",
    "total_classes_closed_form",
    "total_extensions_closed_form",
    "valid_c_values",
]
