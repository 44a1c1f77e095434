"""Graded Betti tables of symmetric determinantal rings, with invariants.

Each table is assembled purely from partition combinatorics: shapes are
constructed index by index, ranks come from the hook content formula, and
ring invariants are read off the finished table.
"""

import json

from symdet import (
    RingParams,
    betti_table,
    enumerate_terms,
    last_two_closed_form,
    projective_dimension,
)

for n, t in ((3, 1), (5, 3), (6, 2), (4, 1)):
    params = RingParams(n, t)
    table = betti_table(params)
    print(f"n={n}, t={t}: dim {params.dim}, projective dimension {table.projdim}")
    print(table.render_text())
    print(
        f"a-invariant {table.a_invariant}, type {table.cm_type}, "
        f"level: {table.is_level}, alternating sum {table.alternating_sum()}"
    )
    print()

print("every term at each index of n=6, t=2 comes with its shape:")
params = RingParams(6, 2)
for i in (1, 2, 3):
    for term in enumerate_terms(params, i):
        print(
            f"  index {term.hom_index}, degree {term.degree}: "
            f"shape {term.shape}, rank {term.rank}"
        )
print()

print("closed forms for the last two ranks (even n - t):")
for n, t in ((3, 1), (4, 2), (5, 3), (8, 4)):
    print(f"  n={n}, t={t}: {last_two_closed_form(RingParams(n, t))}")
print()

print("machine-readable form of the (3,1) table:")
print(json.dumps(betti_table(RingParams(3, 1)).to_json_dict(), indent=2))
