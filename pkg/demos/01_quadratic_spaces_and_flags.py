"""Quadratic spaces, signatures, radicals and flag orbit invariants.

A quadratic space is a symmetric Gram matrix over the rationals, possibly
degenerate.  Subspaces carry a signature (positive, negative, zero counts)
and a radical; a line inside a subspace is spacelike, timelike, lightlike,
or radical.  Pairs of nested subspaces -- flags -- are classified up to the
isometry group of the ambient form by two signatures and one intersection
dimension, and this script walks through all of it on the standard (2, 2)
space.
"""

from fractions import Fraction

from heisflag import (
    Flag,
    QuadraticSpace,
    Subspace,
    flag_invariants,
    flags_equivalent,
    matsuki_data,
    possible_codim2_signatures,
    radical,
    refined_line_signature,
    signature,
)


def unit(i, n=4):
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


space = QuadraticSpace.standard(2, 2)
print("ambient space: R^4 with form diag(+1, +1, -1, -1)")
print("ambient signature:", signature(space))

# a degenerate plane: both spanning vectors are null and mutually orthogonal
iso1 = tuple(a + b for a, b in zip(unit(0), unit(2)))
iso2 = tuple(a + b for a, b in zip(unit(1), unit(3)))
plane = Subspace(4, (iso1, iso2))
print("\ntotally isotropic plane spanned by e1+e3, e2+e4")
print("  signature:", signature(space, plane))
print("  radical dimension:", radical(space, plane).dim)

# refined line signatures distinguish null lines inside vs outside the radical
half_deg = Subspace(4, (unit(0), iso2))
print("\nsubspace spanned by e1 and the null vector e2+e4")
print("  signature:", signature(space, half_deg))
for label, line in [("e1", Subspace(4, (unit(0),))),
                    ("e2+e4", Subspace(4, (iso2,)))]:
    print(f"  line {label}:", refined_line_signature(space, half_deg, line))

# flags: nested pairs (line inside codimension-two subspace)
f1 = Flag(Subspace(4, (unit(0),)), Subspace(4, (unit(0), unit(1))))
f2 = Flag(Subspace(4, (unit(1),)), Subspace(4, (unit(0), unit(1))))
f3 = Flag(Subspace(4, (iso1,)), plane)
print("\nflag invariants (sig big, sig small, dim small cap rad big):")
for name, f in [("positive plane / e1", f1),
                ("positive plane / e2", f2),
                ("isotropic plane / e1+e3", f3)]:
    print(f"  {name}: {flag_invariants(space, f)}")
print("first two flags equivalent under O(2,2)?", flags_equivalent(space, f1, f2))
print("first and third equivalent?", flags_equivalent(space, f1, f3))

# the dual seven-count data against the coordinate axes splitting
print("\nseven coordinate counts of the isotropic flag:", matsuki_data(f3, 2, 2).as_tuple())

# every codimension-two signature that can occur
print("\nall codimension-two signatures in (2,2):")
for sig in sorted(possible_codim2_signatures(2, 2), key=lambda s: s.as_tuple()):
    print("  ", sig)
