"""Constructive side of the classification: orthogonal systems and witnesses.

Equality of orbit invariants is necessary and sufficient for two flags to be
related by an isometry of the ambient form.  The sufficiency is constructive:
null vectors split into hyperbolic pairs, null systems extend to full scaled
bases, and gluing two adapted bases produces an explicit witness matrix,
verified here to preserve the form and map one flag onto the other within
1e-9.
"""

import random
from fractions import Fraction

import numpy as np

from heisflag import (
    Flag,
    QuadraticSpace,
    Subspace,
    extend_nullsystem,
    isometry_witness,
    lightlike_split,
    scaled_system,
    witness_residuals,
)
from heisflag.witness import InequivalentFlagsError
from heisflag import sampling


def unit(i, n=4):
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


space = QuadraticSpace.standard(2, 2)

print("splitting the null vector (1,1,1,1) into opposite-norm parts:")
v = tuple(Fraction(1) for _ in range(4))
plus, minus = lightlike_split(space, Subspace.full(4), v)
print("  v+ =", fmt(plus), " norm", space.inner(plus, plus))
print("  v- =", fmt(minus), " norm", space.inner(minus, minus))

print("\nextending the null system {e1+e3, e2+e4} to a scaled basis:")
sys_full = extend_nullsystem(space, [
    tuple(a + b for a, b in zip(unit(0), unit(2))),
    tuple(a + b for a, b in zip(unit(1), unit(3)))])
for vec, norm in zip(sys_full.vectors, sys_full.norms):
    print("  ", fmt(vec), " norm", norm)

print("\nscaled system of a degenerate subspace span{e1, e2+e4}:")
w = Subspace(4, (unit(0), tuple(a + b for a, b in zip(unit(1), unit(3)))))
sys_w = scaled_system(space, w)
for vec, norm in zip(sys_w.vectors, sys_w.norms):
    print("  ", fmt(vec), " norm", norm)

print("\nwitness between two equivalent flags:")
f1 = Flag(Subspace(4, (unit(0),)), Subspace(4, (unit(0), unit(1))))
f2 = Flag(Subspace(4, (unit(1),)), Subspace(4, (unit(0), unit(1))))
g = isometry_witness(2, 2, f1, f2)
print(np.round(g, 12))
print("  residuals:", witness_residuals(2, 2, g, f1, f2))

print("\nwitness for a randomly acted flag (exact isometry image):")
rng = random.Random(5)
f3 = sampling.random_flag(2, 2, rng)
f4 = sampling.apply_to_flag(sampling.mild_opq(2, 2, rng), f3)
g = isometry_witness(2, 2, f3, f4)
print("  residuals:", witness_residuals(2, 2, g, f3, f4))

print("\ninequivalent flags are rejected by name:")
f5 = Flag(Subspace(4, (unit(2),)), Subspace(4, (unit(2), unit(3))))
try:
    isometry_witness(2, 2, f1, f5)
except InequivalentFlagsError as ex:
    print("  ", ex)
