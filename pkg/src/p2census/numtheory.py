"""Exact elementary number theory used throughout the census.

Everything here works on Python integers and :class:`fractions.Fraction`,
so counts never lose precision no matter how large ``p**(2*n)`` gets.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order (trial division)."""
    if n < 1:
        raise ValueError(f"prime_factors needs a positive integer, got {n}")
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def valuation(n: int, ell: int) -> int:
    """Exponent of the prime ``ell`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    k = 0
    while n % ell == 0:
        n //= ell
        k += 1
    return k


def prime_to_part(n: int, p: int) -> int:
    """Largest divisor of ``n`` coprime to ``p``."""
    while n % p == 0:
        n //= p
    return n


def mult_order(x: int, m: int) -> int:
    """Smallest ``k >= 1`` with ``x**k == 1 (mod m)``.

    ``mult_order(x, 1)`` is 1; this is what makes the trivial character
    (order ``t = 1``) behave in the dimension formula.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    if gcd(x, m) != 1:
        raise ValueError(f"{x} is not a unit modulo {m}")
    x %= m
    k, y = 1, x
    while y != 1:
        y = y * x % m
        k += 1
    return k


def psi(a: int, b: int) -> int:
    """Number of elements of order exactly ``a`` in ``Z/a x Z/b``.

    Closed form: ``a*(a,b)`` times ``(1 - 1/l)`` for primes dividing
    ``a/(a,b)`` and ``(1 - 1/l**2)`` for the remaining primes of ``a``.
    """
    if a < 1 or b < 1:
        raise ValueError(f"psi needs positive arguments, got ({a}, {b})")
    g = gcd(a, b)
    quotient_primes = set(prime_factors(a // g))
    value = Fraction(a * g)
    for ell in prime_factors(a):
        if ell in quotient_primes:
            value *= Fraction(ell - 1, ell)
        else:
            value *= Fraction(ell * ell - 1, ell * ell)
    if value.denominator != 1:
        raise ArithmeticError(f"psi({a}, {b}) evaluated to non-integer {value}")
    return value.numerator


def lambda_split(c: int, p: int) -> Fraction:
    """Fraction of order-``c`` pairs in ``F_{p^2}^x x F_p^x`` whose group splits.

    Takes the values 1, 1/2 or 1/3 according to where the 2-adic valuation of
    ``c`` sits relative to those of ``p - 1`` and ``p**2 - 1``.
    """
    order = p * p - 1
    if c < 1 or order % c or (p - 1) % c == 0:
        raise ValueError(f"c={c} must divide p^2-1={order} but not p-1={p - 1}")
    vc = valuation(c, 2)
    if vc == 0 or vc == valuation(order, 2):
        return Fraction(1)
    if valuation(p - 1, 2) < vc:
        return Fraction(1, 2)
    return Fraction(1, 3)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def as_integer(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator


__all__ = [
    "as_integer",
    "divisors",
    "exact_div",
    "gcd",
    "is_prime",
    "lambda_split",
    "lcm",
    "mult_order",
    "prime_factors",
    "prime_to_part",
    "psi",
    "valuation",
]
