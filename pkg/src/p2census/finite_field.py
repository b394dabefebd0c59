"""Arithmetic in F_p and F_{p^2} backed by discrete-log tables.

Elements are encoded as integers ``c0 + c1*p`` where ``c0 + c1*x`` is the
polynomial representative; that encoding also fixes the "lexicographic"
order used to pick the generator.  For ``d = 2`` the modulus is
``x^2 - x - k`` with the least ``k >= 1`` that has no root in F_p.
"""

from __future__ import annotations

from functools import cache, cached_property
from math import gcd

from .numtheory import is_prime, prime_factors


class FieldCtx:
    """The field F_{p^d} (d in {1, 2}) with a fixed generator and log table.

    Instances are cached per ``(p, d)`` and never mutated, so identity
    comparison is enough to tell whether two elements live in the same field.
    """

    def __init__(self, p: int, d: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d not in (1, 2):
            raise ValueError(f"only degrees 1 and 2 are supported, got {d}")
        self.p = p
        self.d = d
        self.size = p**d
        self.order = self.size - 1
        if d == 1:
            self._k = None
            self.modulus = (0, 1)
        else:
            self._k = _least_irreducible_constant(p)
            # x^2 - x - k, low degree first
            self.modulus = ((-self._k) % p, (-1) % p, 1)
        self._exp, self._log = self._build_tables()
        self.generator = FqElem(self, self._exp[1 % self.order] if self.order > 1 else 1)

    def _raw_mul(self, a: int, b: int) -> int:
        p = self.p
        if self.d == 1:
            return a * b % p
        a0, a1 = a % p, a // p
        b0, b1 = b % p, b // p
        hi = a1 * b1
        c0 = (a0 * b0 + hi * self._k) % p
        c1 = (a0 * b1 + a1 * b0 + hi) % p
        return c0 + c1 * p

    def _build_tables(self):
        n = self.order
        targets = prime_factors(n) if n > 1 else []
        for g in range(1, self.size):
            if n > 1 and not self._is_primitive(g, targets):
                continue
            exp = [1] * n
            for k in range(1, n):
                exp[k] = self._raw_mul(exp[k - 1], g)
            log = {code: k for k, code in enumerate(exp)}
            if len(log) == n:
                return exp, log
        raise AssertionError(f"no generator found for F_{self.size}")

    def _is_primitive(self, g: int, targets: list[int]) -> bool:
        for ell in targets:
            if self._raw_pow(g, self.order // ell) == 1:
                return False
        return True

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    # element constructors

    def __call__(self, value) -> FqElem:
        """Build an element from an int (prime-field value) or a coefficient tuple."""
        if isinstance(value, FqElem):
            if value.ctx is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FqElem(self, value % self.p)
        coeffs = tuple(value)
        if len(coeffs) != self.d:
            raise ValueError(f"expected {self.d} coefficients, got {coeffs}")
        code = sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))
        return FqElem(self, code)

    @property
    def zero(self) -> FqElem:
        return FqElem(self, 0)

    @property
    def one(self) -> FqElem:
        return FqElem(self, 1)

    def gen_pow(self, k: int) -> FqElem:
        """``generator ** k``."""
        return FqElem(self, self._exp[k % self.order])

    def elements(self) -> list[FqElem]:
        return [FqElem(self, code) for code in range(self.size)]

    def units(self) -> list[FqElem]:
        return [FqElem(self, code) for code in range(1, self.size)]

    def prime_field_units(self) -> list[FqElem]:
        return [FqElem(self, code) for code in range(1, self.p)]

    @cached_property
    def add_table(self) -> list[list[int]]:
        """``add_table[a][b]`` is the code of the sum of the elements coded ``a``, ``b``."""
        p, size = self.p, self.size
        out = []
        for a in range(size):
            a0, a1 = a % p, a // p
            out.append([(a0 + b % p) % p + ((a1 + b // p) % p) * p for b in range(size)])
        return out

    @cached_property
    def mul_table(self) -> list[list[int]]:
        return [[self._raw_mul(a, b) for b in range(self.size)] for a in range(self.size)]

    def dlog(self, x: FqElem) -> int:
        if x.code == 0:
            raise ValueError("discrete log of zero")
        return self._log[x.code]

    def __repr__(self):
        if self.d == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.p}^2, x^2 - x - {self._k})"


def _least_irreducible_constant(p: int) -> int:
    for k in range(1, p + 1):
        if all((x * x - x - k) % p for x in range(p)):
            return k
    raise AssertionError(f"no irreducible x^2 - x - k over F_{p}")


class FqElem:
    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        p = self.ctx.p
        if self.ctx.d == 1:
            return (self.code,)
        return (self.code % p, self.code // p)

    def _same(self, other) -> FqElem:
        if isinstance(other, int):
            return self.ctx(other)
        if not isinstance(other, FqElem) or other.ctx is not self.ctx:
            raise ValueError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        p = self.ctx.p
        coeffs = [(a + b) % p for a, b in zip(self.coeffs, other.coeffs)]
        return self.ctx(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self.ctx([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        other = self._same(other)
        if self.code == 0 or other.code == 0:
            return self.ctx.zero
        ctx = self.ctx
        return FqElem(ctx, ctx._exp[(ctx._log[self.code] + ctx._log[other.code]) % ctx.order])

    __rmul__ = __mul__

    def inverse(self) -> FqElem:
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        ctx = self.ctx
        return FqElem(ctx, ctx._exp[-ctx._log[self.code] % ctx.order])

    def __truediv__(self, other):
        return self * self._same(other).inverse()

    def __pow__(self, e: int):
        ctx = self.ctx
        if self.code == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return ctx.one if e == 0 else ctx.zero
        return FqElem(ctx, ctx._exp[ctx._log[self.code] * e % ctx.order])

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.ctx is other.ctx and self.code == other.code

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.d, self.code))

    def __bool__(self):
        return self.code != 0

    def __lt__(self, other):
        return self.code < self._same(other).code

    def frobenius(self) -> FqElem:
        return self**self.ctx.p

    def in_prime_field(self) -> bool:
        return self.frobenius() == self

    def __repr__(self):
        if self.ctx.d == 1:
            return f"{self.code}"
        c0, c1 = self.coeffs
        return f"({c0}+{c1}x)"


@cache
def make_field(p: int, d: int = 1) -> FieldCtx:
    return FieldCtx(p, d)


def frobenius(x: FqElem) -> FqElem:
    return x.frobenius()


def dlog(x: FqElem) -> int:
    """Discrete log of ``x`` with respect to the field's fixed generator."""
    return x.ctx.dlog(x)


def element_order(x: FqElem) -> int:
    n = x.ctx.order
    return n // gcd(dlog(x), n)


__all__ = ["FieldCtx", "FqElem", "dlog", "element_order", "frobenius", "make_field"]
