"""The classification of inner products on h3 + R^(n-3), signature by signature.

Every inner product of signature (p, q) on the algebra, up to a nonzero
scale and an automorphism, is pinned down by the signature of its
restriction to the center together with the refined type of the derived
line.  The admissible combinations form a fixed 21-row taxonomy whose
occupancy depends only on (p, q): 21 rows for p, q >= 3, then 15 / 6 / 10
in the degenerate regimes.  This script derives the tables, classifies a
few explicit Gram matrices, and round-trips every canonical representative.
"""

from heisflag import (
    HeisenbergAlgebra,
    act_on_metric,
    admissible_classes,
    classify_metric,
    parabolic_sample,
    representative,
)
from heisflag.linalg import diag, mat

print("class counts by signature:")
for p, q in [(3, 3), (3, 2), (3, 1), (2, 2), (4, 3), (5, 1), (2, 5)]:
    print(f"  ({p},{q}): {admissible_classes(p, q).count}")

print("\nfull table for signature (3, 2):")
table = admissible_classes(3, 2)
for row in table.classes:
    print(f"  class {row.id:>2}: center {row.pattern_str()} = "
          f"{row.center_signature(3, 2)}, derived line {row.refined}")

alg = HeisenbergAlgebra(4)
examples = [
    ("standard form diag(1,1,-1,-1)", diag([1, 1, -1, -1])),
    ("two hyperbolic planes", mat([[0, 0, 1, 0], [0, 0, 0, 1],
                                   [1, 0, 0, 0], [0, 1, 0, 0]])),
    ("Lorentzian flat metric", mat([[0, 0, 0, 1], [0, 1, 0, 0],
                                    [0, 0, 1, 0], [1, 0, 0, 0]])),
]
print("\nclassifying explicit Gram matrices (n = 4):")
for name, gram in examples:
    got = classify_metric(alg, gram)
    print(f"  {name}: class {got.class_id}, center {got.center_signature}, "
          f"derived {got.refined}")

print("\nround trip over every admissible class for p + q = 5:")
for p, q in [(4, 1), (3, 2), (2, 3), (1, 4)]:
    alg5 = HeisenbergAlgebra(5)
    ids = [classify_metric(alg5, representative(row.id, p, q)).class_id
           for row in admissible_classes(p, q).classes]
    print(f"  ({p},{q}): {ids}")

print("\nthe class is constant along the scaling-and-automorphism orbit:")
rep = representative(13, 3, 1)
for seed in range(4):
    moved = act_on_metric([list(r) for r in parabolic_sample(4, seed).matrix], rep)
    print(f"  seed {seed}: class {classify_metric(HeisenbergAlgebra(4), moved).class_id}")
