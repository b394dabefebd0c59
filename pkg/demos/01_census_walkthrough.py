"""Census of degree-p^2 extensions with no intermediate field.

Runs the census over Q_2 and Q_3, then shows that the answer for a larger
base field only depends on p, the degree n and the parity of f_K.
"""

from p2census import LocalFieldParams, census_k2
from p2census.cli import render_table

for p in (2, 3):
    print(render_table(census_k2(LocalFieldParams(p))))
    print()

# same n = 6, different splits into e_K * f_K
for e_K, f_K in [(6, 1), (2, 3), (3, 2), (1, 6)]:
    r = census_k2(LocalFieldParams(5, e_K, f_K))
    kinds = sorted({d.kind for d, _ in r.rows})
    print(f"p=5 e_K={e_K} f_K={f_K}: {r.total_classes} classes, group kinds {kinds}")
