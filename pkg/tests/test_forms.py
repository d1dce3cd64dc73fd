"""Quadratic space invariants: signatures, radicals, flags, seven-count data."""

import random
from fractions import Fraction as F

import pytest

from heisflag import linalg, sampling
from heisflag.forms import (
    Flag,
    FlagInvariants,
    LineSignature,
    PreconditionError,
    QuadraticSpace,
    Signature,
    Subspace,
    flag_invariants,
    flags_equivalent,
    matsuki_data,
    possible_codim2_signatures,
    possible_line_signatures,
    radical,
    refined_line_signature,
    restrict,
    signature,
)

SP22 = QuadraticSpace.standard(2, 2)
SP33 = QuadraticSpace.standard(3, 3)


def unit(i, n=4):
    return tuple(F(1) if j == i else F(0) for j in range(n))


def test_restrict_examples():
    w = Subspace(4, (unit(0), unit(1)))
    assert restrict(SP22, w) == linalg.diag([1, 1])
    null_line = Subspace(4, (linalg.vec_add(unit(0), unit(2)),))
    assert restrict(SP22, null_line) == [[F(0)]]
    plane = Subspace(4, (linalg.vec_add(unit(0), unit(2)),
                         linalg.vec_add(unit(1), unit(3))))
    assert restrict(SP22, plane) == linalg.zeros(2, 2)


def test_restrict_dimension_mismatch():
    with pytest.raises(linalg.ShapeError):
        restrict(SP22, Subspace(3, (unit(0, 3),)))


def test_signature_examples():
    assert signature(SP22) == Signature(2, 2, 0)
    plane = Subspace(4, (linalg.vec_add(unit(0), unit(2)),
                         linalg.vec_add(unit(1), unit(3))))
    assert signature(SP22, plane) == Signature(0, 0, 2)
    w = Subspace(6, tuple(unit(i, 6) for i in range(4)))
    assert signature(SP33, w) == Signature(3, 1, 0)


def test_radical_examples():
    sp = QuadraticSpace.from_matrix(linalg.diag([1, 0, -1]))
    r = radical(sp)
    assert r.dim == 1 and r.contains(unit(1, 3))
    assert radical(SP22, Subspace(4, (unit(0), unit(1)))).dim == 0
    w = Subspace(4, (unit(0), linalg.vec_add(unit(1), unit(3))))
    r = radical(SP22, w)
    assert r.dim == 1 and r.contains(linalg.vec_add(unit(1), unit(3)))


def test_refined_line_signature_examples():
    w = Subspace(4, (unit(0), linalg.vec_add(unit(1), unit(3))))
    rad_line = Subspace(4, (linalg.vec_add(unit(1), unit(3)),))
    assert refined_line_signature(SP22, w, rad_line) == LineSignature.RADICAL
    assert refined_line_signature(SP22, w, Subspace(4, (unit(0),))) == LineSignature.SPACELIKE
    v = Subspace(4, (unit(0), unit(2)))
    light = Subspace(4, (linalg.vec_add(unit(0), unit(2)),))
    assert refined_line_signature(SP22, v, light) == LineSignature.LIGHTLIKE


def test_refined_line_signature_preconditions():
    v = Subspace(4, (unit(0), unit(1)))
    with pytest.raises(PreconditionError):
        refined_line_signature(SP22, v, Subspace(4, (unit(2),)))
    # lines inside a one-dimensional subspace are rejected, not guessed
    with pytest.raises(PreconditionError):
        refined_line_signature(SP22, Subspace(4, (unit(0),)), Subspace(4, (unit(0),)))


def test_flag_invariants_examples():
    f = Flag(Subspace(6, (unit(0, 6),)), Subspace(6, tuple(unit(i, 6) for i in range(4))))
    assert flag_invariants(SP33, f) == FlagInvariants(Signature(3, 1, 0), Signature(1, 0, 0), 0)
    f = Flag(Subspace(4, (unit(0),)), Subspace(4, (unit(0), unit(1))))
    assert flag_invariants(SP22, f) == FlagInvariants(Signature(2, 0, 0), Signature(1, 0, 0), 0)
    iso = linalg.vec_add(unit(0), unit(2))
    f = Flag(Subspace(4, (iso,)), Subspace(4, (iso, linalg.vec_add(unit(1), unit(3)))))
    assert flag_invariants(SP22, f) == FlagInvariants(Signature(0, 0, 2), Signature(0, 0, 1), 1)


def test_flag_invariants_needs_nondegenerate_ambient():
    sp = QuadraticSpace.from_matrix(linalg.diag([1, 1, 0, -1]))
    f = Flag(Subspace(4, (unit(0),)), Subspace(4, (unit(0), unit(1))))
    with pytest.raises(PreconditionError):
        flag_invariants(sp, f)


def test_flags_equivalent_examples():
    f1 = Flag(Subspace(4, (unit(0),)), Subspace(4, (unit(0), unit(1))))
    f2 = Flag(Subspace(4, (unit(2),)), Subspace(4, (unit(2), unit(3))))
    f3 = Flag(Subspace(4, (unit(1),)), Subspace(4, (unit(0), unit(1))))
    assert flags_equivalent(SP22, f1, f1)
    assert not flags_equivalent(SP22, f1, f2)
    assert flags_equivalent(SP22, f1, f3)
    with pytest.raises(linalg.ShapeError):
        flags_equivalent(SP22, f1, Flag(Subspace(4, (unit(0),)),
                                        Subspace(4, (unit(0), unit(1), unit(2)))))


def test_matsuki_examples():
    f = Flag(Subspace(6, (unit(0, 6),)), Subspace(6, tuple(unit(i, 6) for i in range(4))))
    assert matsuki_data(f, 3, 3).as_tuple() == (3, 1, 0, 1, 0, 0, 1)
    iso1 = linalg.vec_add(unit(0), unit(2))
    iso2 = linalg.vec_add(unit(1), unit(3))
    f = Flag(Subspace(4, (iso1,)), Subspace(4, (iso1, iso2)))
    assert matsuki_data(f, 2, 2).as_tuple() == (0, 0, 2, 0, 0, 1, 0)
    f = Flag(Subspace(4, (unit(2),)), Subspace(4, (unit(2), unit(3))))
    assert matsuki_data(f, 2, 2).as_tuple() == (0, 2, 0, 0, 1, 0, 1)


def test_possible_codim2_signatures():
    assert possible_codim2_signatures(3, 3) == {
        Signature(1, 3, 0), Signature(2, 2, 0), Signature(3, 1, 0),
        Signature(1, 2, 1), Signature(2, 1, 1), Signature(1, 1, 2)}
    assert possible_codim2_signatures(2, 1) == {
        Signature(0, 1, 0), Signature(1, 0, 0), Signature(0, 0, 1)}
    assert possible_codim2_signatures(3, 1) == {
        Signature(1, 1, 0), Signature(2, 0, 0), Signature(1, 0, 1)}


def test_possible_line_signatures():
    assert possible_line_signatures(2, 0, 1) == {LineSignature.SPACELIKE, LineSignature.RADICAL}
    assert possible_line_signatures(1, 1, 0) == {
        LineSignature.SPACELIKE, LineSignature.TIMELIKE, LineSignature.LIGHTLIKE}
    assert possible_line_signatures(0, 0, 1) == {LineSignature.RADICAL}


def test_basis_independence():
    rng = random.Random(17)
    for _ in range(60):
        p, q = rng.choice([(2, 2), (3, 2), (3, 1)])
        sp = QuadraticSpace.standard(p, q)
        f = sampling.random_flag(p, q, rng)
        base_inv = flag_invariants(sp, f)
        base_refined = refined_line_signature(sp, f.big, f.small)
        k = f.big.dim
        while True:
            change = [[F(rng.randint(-2, 2)) for _ in range(k)] for _ in range(k)]
            if linalg.det(change) != 0:
                break
        mixed = [tuple(sum(change[r][c] * f.big.basis[c][i] for c in range(k))
                       for i in range(p + q)) for r in range(k)]
        scale = F(rng.choice([1, 2, -3]))
        scaled_line = tuple(scale * x for x in f.small.basis[0])
        f_mixed = Flag(Subspace(p + q, (scaled_line,)), Subspace(p + q, tuple(mixed)))
        assert flag_invariants(sp, f_mixed) == base_inv
        assert refined_line_signature(sp, f_mixed.big, f_mixed.small) == base_refined


def test_opq_invariance():
    rng = random.Random(23)
    for p, q in [(2, 2), (3, 2), (3, 3), (3, 1)]:
        sp = QuadraticSpace.standard(p, q)
        ipq = sampling.standard_form_matrix(p, q)
        for _ in range(60):
            g = sampling.random_opq(p, q, rng)
            assert linalg.mat_mul(linalg.transpose(g), linalg.mat_mul(ipq, g)) == ipq
            f = sampling.random_flag(p, q, rng)
            assert flag_invariants(sp, sampling.apply_to_flag(g, f)) == flag_invariants(sp, f)
