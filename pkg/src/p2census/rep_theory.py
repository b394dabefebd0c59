"""Irreducible representations of split tame groups ``T x| U``.

The group is ``<u, t | u t u^-1 = t^q, t^e = 1, u^f = 1>`` with ``q`` a power
of ``p`` and ``p`` coprime to ``e``.  An irreducible representation over the
algebraic closure of F_p is induced from a character ``(alpha, beta)`` of
``T x| U~`` where ``U~ = <u^s>``; two characters give the same
representation exactly when their ``alpha``-parts are ``q``-power conjugate.

Characters are stored as exponent classes: ``alpha = zeta_t ** a`` for a
fixed primitive ``t``-th root of unity and ``beta = xi ** b`` for a fixed
primitive root of unity of order ``beta_modulus``.  Nothing here builds the
fields those roots live in; only orders and orbits matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

from .numtheory import divisors, exact_div, is_prime, mult_order, prime_factors, prime_to_part


@dataclass(frozen=True)
class MetacyclicGroup:
    e: int
    f: int
    q: int

    def __post_init__(self):
        if self.e < 1 or self.f < 1:
            raise ValueError("e and f must be positive")
        primes = prime_factors(self.q) if self.q > 1 else []
        if len(primes) != 1:
            raise ValueError(f"q={self.q} is not a prime power")
        if self.e % self.p == 0:
            raise ValueError(f"e={self.e} must be prime to p={self.p}")
        if (self.q**self.f - 1) % self.e:
            raise ValueError(f"e={self.e} does not divide q^f - 1 = {self.q**self.f - 1}")

    @classmethod
    def from_field(cls, p: int, e: int, f: int, f_K: int) -> MetacyclicGroup:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(e, f, p**f_K)

    @property
    def p(self) -> int:
        return prime_factors(self.q)[0]

    @property
    def f_K(self) -> int:
        k, q = 0, self.q
        while q > 1:
            q //= self.p
            k += 1
        return k

    @property
    def order(self) -> int:
        return self.e * self.f


@dataclass(frozen=True, order=True)
class CharClass:
    """A conjugacy class of characters ``(alpha, beta)``; canonical ``a`` is the
    least element of its ``q``-orbit modulo ``t``."""

    t: int
    a: int
    b: int
    beta_modulus: int
    p: int = field(compare=False)
    f_K: int = field(compare=False)
    u_tilde: int = field(compare=False)

    @property
    def r(self) -> int:
        return mult_order(self.p, self.t)

    @property
    def s(self) -> int:
        return mult_order(self.p**self.f_K, self.t)

    @property
    def beta_order(self) -> int:
        return self.beta_modulus // gcd(self.b, self.beta_modulus)

    @property
    def w(self) -> int:
        return mult_order(self.p, self.beta_order)

    @property
    def def_field_degree(self) -> int:
        return lcm(self.w, gcd(self.r, self.f_K))

    def orbit(self) -> list[int]:
        """The ``a``-values of the characters conjugate to this one."""
        q = self.p**self.f_K
        seen, x = [], self.a % self.t
        while x not in seen:
            seen.append(x)
            x = x * q % self.t
        return seen


@dataclass(frozen=True)
class IrrepDescriptor:
    char_class: CharClass
    dim_fpbar: int
    dim_fp: int
    def_field_degree: int
    multiplicity_in_Y: int


@dataclass(frozen=True)
class ModuleInventory:
    """Decomposition ``F_p + (sum of irreducibles) + M_omega``.

    ``trivial_summand`` and ``cyclotomic_summand`` are multiplicity markers
    for the two one-dimensional pieces that never carry a dimension-2 class;
    the cyclotomic character itself is not evaluated.
    """

    group: MetacyclicGroup
    n: int
    rows: tuple[IrrepDescriptor, ...]
    trivial_summand: int = 1
    cyclotomic_summand: int = 1


def _canonical(a: int, t: int, q: int) -> int:
    best, x = a % t, a % t
    while True:
        x = x * q % t
        if x == a % t:
            return best
        best = min(best, x)


def enumerate_irreducibles(H: MetacyclicGroup) -> list[CharClass]:
    """One canonical character per irreducible representation of ``H``.

    ``beta`` ranges over the roots of unity of order dividing ``f/s`` that
    actually exist in characteristic ``p``, i.e. over the ``p``-free part
    of ``f/s``.
    """
    p, f_K, q = H.p, H.f_K, H.q
    classes = []
    for t in divisors(H.e):
        s = mult_order(q, t)
        # s | f because t | q^f - 1
        u_tilde = exact_div(H.f, s)
        modulus = prime_to_part(u_tilde, p)
        for a in range(t):
            if gcd(a, t) != 1 or _canonical(a, t, q) != a % t:
                continue
            for b in range(modulus):
                classes.append(CharClass(t, a % t, b, modulus, p, f_K, u_tilde))
    return classes


def rep_dimension(c: CharClass, f_K: int | None = None) -> int:
    """Dimension over F_p of the irreducible representation containing ``c``:
    ``lcm(r*w/(r, f_K), r)``."""
    if f_K is None:
        f_K = c.f_K
    r, w = c.r, c.w
    return lcm(r * w // gcd(r, f_K), r)


def multiplicity_in_Y(c: CharClass, n: int) -> int:
    return c.s * n


def submodule_count(d: int, m: int, p: int) -> int:
    """Number of F_p-submodules isomorphic to an irreducible of
    definition degree ``d`` occurring with multiplicity ``m``."""
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    return exact_div(p ** (d * m) - 1, p**d - 1)


def module_inventory(H: MetacyclicGroup, n: int) -> ModuleInventory:
    rows = []
    for c in enumerate_irreducibles(H):
        rows.append(
            IrrepDescriptor(
                char_class=c,
                dim_fpbar=c.s,
                dim_fp=rep_dimension(c),
                def_field_degree=c.def_field_degree,
                multiplicity_in_Y=multiplicity_in_Y(c, n),
            )
        )
    return ModuleInventory(H, n, tuple(rows))


def galois_orbits(H: MetacyclicGroup, classes: list[CharClass] | None = None) -> list[list[CharClass]]:
    """Group the classes into F_p-irreducibles (orbits under ``x -> x^p``)."""
    if classes is None:
        classes = enumerate_irreducibles(H)
    q = H.q
    index = {(c.t, c.a, c.b): c for c in classes}
    seen = set()
    orbits = []
    for c in classes:
        if (c.t, c.a, c.b) in seen:
            continue
        members = []
        a, b = c.a, c.b
        while True:
            key = (c.t, _canonical(a, c.t, q) if c.t > 1 else 0, b)
            if key in seen:
                break
            seen.add(key)
            members.append(index[key])
            a = a * H.p % c.t if c.t > 1 else 0
            b = b * H.p % c.beta_modulus if c.beta_modulus > 1 else 0
        orbits.append(members)
    return orbits


__all__ = [
    "CharClass",
    "IrrepDescriptor",
    "MetacyclicGroup",
    "ModuleInventory",
    "enumerate_irreducibles",
    "galois_orbits",
    "module_inventory",
    "multiplicity_in_Y",
    "rep_dimension",
    "submodule_count",
]
