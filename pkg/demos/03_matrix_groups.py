"""The image groups <T_alpha, U_beta> in GL_2(F_{p^2}) and their types.

Over F_9 the order-8 groups <T_alpha, U_beta> come in two flavours: the
dihedral-like split one and the quaternion. The invariant j mod (m, p-1)
tells them apart without building either group.
"""

from p2census.finite_field import make_field
from p2census.matrix_groups import canonicalize, closure, is_isomorphic, make_T, make_U

F = make_field(3, 2)
g = F.generator
alpha = g**2

split = closure([make_T(alpha), make_U(F.one)])
quat = closure([make_T(alpha), make_U(F(2))])
for name, G, beta in [("beta = 1", split, F.one), ("beta = -1", quat, F(2))]:
    orders = sorted(G.element_orders)
    print(f"{name}: order {G.order}, element orders {orders}, invariants {canonicalize(alpha, beta)}")
print("isomorphic:", is_isomorphic(split, quat))

# the relations that make these groups metacyclic
U = make_U(F(2))
assert U @ make_T(g) @ U.inverse() == make_T(g**3)
assert U @ U == make_T(F(2))
print("U T_g U^-1 = T_(g^3) and U^2 = T_beta hold")
