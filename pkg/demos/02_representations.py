"""Irreducible representations of a split tame group T x| U over F_p.

Lists the characters, their dimensions over the algebraic closure and over
F_p, and how they collapse into F_p-irreducibles.
"""

from p2census.rep_theory import MetacyclicGroup, enumerate_irreducibles, galois_orbits, rep_dimension

H = MetacyclicGroup.from_field(p=3, e=8, f=8, f_K=1)
classes = enumerate_irreducibles(H)
print(f"{len(classes)} irreducibles over the algebraic closure, |H| = {H.order}")
print("sum of squared dimensions:", sum(c.s**2 for c in classes))

by_dim = {}
for c in classes:
    by_dim.setdefault(rep_dimension(c), []).append(c)
for d in sorted(by_dim):
    print(f"  F_p-dimension {d}: {len(by_dim[d])} characters")

two = [o for o in galois_orbits(H) if rep_dimension(o[0]) == 2]
print(f"{len(two)} two-dimensional F_p-irreducibles")
for orbit in two[:4]:
    print("  ", [(c.t, c.a, c.b) for c in orbit], "s =", orbit[0].s)
