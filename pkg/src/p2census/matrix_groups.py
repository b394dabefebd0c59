"""2x2 matrix groups over F_{p^2}: the images of the dimension-2 representations.

``make_T(alpha)`` is ``diag(alpha, alpha^p)`` and ``make_U(beta)`` is the
companion-style matrix ``[[0, beta], [1, 0]]``.  Together they realise the
inertia generator and the Frobenius lift on an induced representation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .finite_field import FieldCtx, FqElem, dlog, element_order
from .numtheory import lcm


class GroupTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Mat2:
    """Row-major matrix ``[[a, b], [c, d]]``; entries are stored as field codes."""

    ctx: FieldCtx = field(compare=False, repr=False)
    codes: tuple[int, int, int, int]

    @classmethod
    def of(cls, a: FqElem, b: FqElem, c: FqElem, d: FqElem) -> Mat2:
        ctx = a.ctx
        for x in (b, c, d):
            if x.ctx is not ctx:
                raise ValueError("matrix entries from different fields")
        return cls(ctx, (a.code, b.code, c.code, d.code))

    @classmethod
    def identity(cls, ctx: FieldCtx) -> Mat2:
        return cls(ctx, (1, 0, 0, 1))

    @property
    def entries(self) -> tuple[FqElem, FqElem, FqElem, FqElem]:
        return tuple(FqElem(self.ctx, x) for x in self.codes)

    def __matmul__(self, other: Mat2) -> Mat2:
        add, mul = self.ctx.add_table, self.ctx.mul_table
        a, b, c, d = self.codes
        e, f, g, h = other.codes
        return Mat2(
            self.ctx,
            (
                add[mul[a][e]][mul[b][g]],
                add[mul[a][f]][mul[b][h]],
                add[mul[c][e]][mul[d][g]],
                add[mul[c][f]][mul[d][h]],
            ),
        )

    __mul__ = __matmul__

    def det(self) -> FqElem:
        a, b, c, d = self.entries
        return a * d - b * c

    def inverse(self) -> Mat2:
        a, b, c, d = self.entries
        det = a * d - b * c
        if not det:
            raise ZeroDivisionError("singular matrix")
        k = det.inverse()
        return Mat2.of(d * k, -b * k, -c * k, a * k)

    def apply(self, v: tuple[FqElem, FqElem]) -> tuple[FqElem, FqElem]:
        a, b, c, d = self.entries
        x, y = v
        return (a * x + b * y, c * x + d * y)

    def __repr__(self):
        a, b, c, d = self.entries
        return f"[[{a}, {b}], [{c}, {d}]]"


def make_T(alpha: FqElem) -> Mat2:
    if not alpha:
        raise ValueError("T_alpha needs a nonzero alpha")
    zero = alpha.ctx.zero
    return Mat2.of(alpha, zero, zero, alpha.frobenius())


def make_U(beta: FqElem) -> Mat2:
    if not beta:
        raise ValueError("U_beta needs a nonzero beta")
    ctx = beta.ctx
    return Mat2.of(ctx.zero, beta, ctx.one, ctx.zero)


def make_V(j: int, ctx: FieldCtx) -> Mat2:
    """Anti-diagonal ``[[0, g^j], [g^(jp), 0]]`` with ``g`` the field generator."""
    return Mat2.of(ctx.zero, ctx.gen_pow(j), ctx.gen_pow(j * ctx.p), ctx.zero)


def make_M(j: int, ctx: FieldCtx) -> Mat2:
    """Diagonal ``diag(1, g^(jp))`` conjugating ``U_beta`` onto ``V_j``."""
    return Mat2.of(ctx.one, ctx.zero, ctx.zero, ctx.gen_pow(j * ctx.p))


class MatrixGroup:
    """A finite subgroup of GL_2, stored as its full element list.

    ``elements[0]`` is always the identity.  Integer Cayley tables are built
    lazily and are what the isomorphism search runs on.
    """

    def __init__(self, generators, elements):
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._table = None
        self._orders = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.index

    @property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def table(self) -> list[list[int]]:
        if self._table is None:
            idx, els = self.index, self.elements
            self._table = [[idx[x @ y] for y in els] for x in els]
        return self._table

    @property
    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = _orders_from_table(self.table)
        return self._orders

    def is_abelian(self) -> bool:
        t = self.table
        n = len(t)
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))

    def __repr__(self):
        return f"MatrixGroup(order={self.order})"


def default_cap(ctx: FieldCtx) -> int:
    return 8 * (ctx.p**2 - 1) ** 2


def closure(generators, cap: int | None = None) -> MatrixGroup:
    """Subgroup generated by invertible matrices (breadth-first)."""
    generators = list(generators)
    if not generators:
        raise ValueError("closure needs at least one generator")
    ctx = generators[0].ctx
    for g in generators:
        if not g.det():
            raise ValueError(f"generator {g} is singular")
    if cap is None:
        cap = default_cap(ctx)
    ident = Mat2.identity(ctx)
    seen = {ident}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = x @ g
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise GroupTooLarge(f"closure exceeded {cap} elements")
                queue.append(y)
    return MatrixGroup(generators, elements)


# abstract isomorphism on Cayley tables


def _orders_from_table(table: list[list[int]]) -> list[int]:
    orders = []
    for i in range(len(table)):
        k, x = 1, i
        while x != 0:
            x = table[x][i]
            k += 1
        orders.append(k)
    return orders


def _generated(table, gens) -> int:
    seen = {0}
    queue = [0]
    for x in queue:
        for g in gens:
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen)


def _small_generating_set(table, orders) -> list[int]:
    n = len(table)
    by_order = sorted(range(n), key=lambda i: (-orders[i], i))
    gens = [by_order[0]]
    if _generated(table, gens) == n:
        return gens
    for g in by_order:
        if _generated(table, gens + [g]) == n:
            return gens + [g]
    # greedy fallback for groups needing more than two generators
    while _generated(table, gens) < n:
        for g in by_order:
            if _generated(table, gens + [g]) > _generated(table, gens):
                gens.append(g)
                break
    return gens


def _extend(t1, gens, t2, images):
    n = len(t1)
    phi = [-1] * n
    phi[0] = 0
    queue = [0]
    for x in queue:
        px = phi[x]
        for g, h in zip(gens, images):
            y = t1[x][g]
            img = t2[px][h]
            if phi[y] == -1:
                phi[y] = img
                queue.append(y)
            elif phi[y] != img:
                return None
    if len(queue) != n or len(set(phi)) != n:
        return None
    return phi


def find_isomorphism(G1: MatrixGroup, G2: MatrixGroup) -> list[int] | None:
    """An isomorphism as a list mapping element indices of ``G1`` to ``G2``."""
    if G1.order != G2.order:
        return None
    o1, o2 = G1.element_orders, G2.element_orders
    if sorted(o1) != sorted(o2):
        return None
    t1, t2 = G1.table, G2.table
    gens = _small_generating_set(t1, o1)
    pools = [[h for h in range(len(t2)) if o2[h] == o1[g]] for g in gens]

    def search(k, chosen):
        if k == len(gens):
            return _extend(t1, gens, t2, chosen)
        for h in pools[k]:
            found = search(k + 1, chosen + [h])
            if found is not None:
                return found
        return None

    return search(0, [])


def is_isomorphic(G1: MatrixGroup, G2: MatrixGroup) -> bool:
    return find_isomorphism(G1, G2) is not None


def canonicalize(alpha: FqElem, beta: FqElem) -> tuple[int, int]:
    """Invariants ``(c, j mod (m, p-1))`` of ``<T_alpha, U_beta>``.

    Only for the non-abelian case: ``alpha`` outside F_p, ``beta`` in F_p^x.
    ``c`` is the order of ``gamma``, a generator of ``<alpha, beta>``, and
    ``gamma = g^m``; conjugation by ``M_j`` carries ``U_beta`` to ``V_j``.
    """
    ctx = alpha.ctx
    if ctx.d != 2:
        raise ValueError("canonicalize works over F_{p^2}")
    if not alpha or not beta or alpha.in_prime_field() or not beta.in_prime_field():
        raise ValueError("canonicalize needs alpha outside F_p and beta in F_p^x")
    p, n = ctx.p, ctx.order
    c = lcm(element_order(alpha), element_order(beta))
    m = n // c
    j = dlog(beta) // (p + 1)
    return c, j % gcd(m, p - 1)


def canonical_subgroup(alpha: FqElem, beta: FqElem) -> MatrixGroup:
    """``<T_gamma, V_j>``, the diagonal conjugate of ``<T_alpha, U_beta>``."""
    ctx = alpha.ctx
    c, _ = canonicalize(alpha, beta)
    m = ctx.order // c
    j = dlog(beta) // (ctx.p + 1)
    return closure([make_T(ctx.gen_pow(m)), make_V(j, ctx)])


def multiplication_matrix(x: FqElem) -> Mat2:
    """Matrix of ``y -> x*y`` on F_{p^2} in the F_p-basis ``(1, X)``.

    Entries lie in F_p but are returned as elements of F_{p^2} so that these
    matrices share a context with ``make_T``/``make_U``.
    """
    ctx = x.ctx
    if ctx.d != 2:
        raise ValueError("multiplication_matrix works over F_{p^2}")
    basis_x = ctx((0, 1))
    c0, c1 = x.coeffs
    d0, d1 = (x * basis_x).coeffs
    # columns are images of 1 and X
    return Mat2.of(ctx(c0), ctx(d0), ctx(c1), ctx(d1))


__all__ = [
    "GroupTooLarge",
    "Mat2",
    "MatrixGroup",
    "canonical_subgroup",
    "canonicalize",
    "closure",
    "default_cap",
    "find_isomorphism",
    "is_isomorphic",
    "make_M",
    "make_T",
    "make_U",
    "make_V",
    "multiplication_matrix",
]
