"""Structured flag survey: completeness, consistency, duality counts."""

from fractions import Fraction as F

from heisflag.enumeration import int_rank, int_rref, int_signature, survey_flags
from heisflag.forms import (
    FlagInvariants,
    LineSignature,
    QuadraticSpace,
    Signature,
    flag_invariants,
    matsuki_data,
    possible_codim2_signatures,
    possible_line_signatures,
)
from heisflag.heisenberg import admissible_classes


def expected_invariants(p, q):
    small = {
        LineSignature.SPACELIKE: (Signature(1, 0, 0), 0),
        LineSignature.TIMELIKE: (Signature(0, 1, 0), 0),
        LineSignature.LIGHTLIKE: (Signature(0, 0, 1), 0),
        LineSignature.RADICAL: (Signature(0, 0, 1), 1),
    }
    out = set()
    for row in admissible_classes(p, q).classes:
        sig, cap = small[row.refined]
        out.add(FlagInvariants(row.center_signature(max(p, q), min(p, q)), sig, cap))
    return out


def test_int_rref_canonical():
    assert int_rref([(1, 0, 1), (0, 1, 1)]) == int_rref([(1, 1, 2), (1, -1, 0)])
    assert int_rref([(2, 4)]) == ((1, 2),)
    assert int_rref([(0, 0), (0, 0)]) == ()
    assert int_rank([(1, 1), (1, -1), (2, 0)]) == 2


def test_int_signature_agrees_with_exact_congruence():
    import random
    from heisflag import linalg

    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 5)
        s = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                x = rng.randint(-4, 4)
                s[i][j] = x
                s[j][i] = x
        exact = linalg.congruence_diagonalize(linalg.mat(s)).sign_counts()
        assert int_signature(s) == exact


def test_survey_counts_small():
    s = survey_flags(2, 2)
    assert len(s.observed_invariants) == 10
    assert len(s.matsuki) == 10
    s = survey_flags(3, 1)
    assert len(s.observed_invariants) == 6
    assert len(s.matsuki) == 6


def test_survey_matches_derived_admissible_sets():
    for p, q in [(2, 2), (3, 1), (3, 2)]:
        assert survey_flags(p, q).observed_invariants == expected_invariants(p, q)


def test_survey_samples_have_claimed_invariants():
    for p, q in [(2, 2), (3, 2)]:
        space = QuadraticSpace.standard(p, q)
        survey = survey_flags(p, q)
        for inv, flags in survey.invariants.items():
            assert flags
            for f in flags:
                assert flag_invariants(space, f) == inv


def test_survey_consistency_with_possible_sets():
    refined_of = {
        (Signature(1, 0, 0), 0): LineSignature.SPACELIKE,
        (Signature(0, 1, 0), 0): LineSignature.TIMELIKE,
        (Signature(0, 0, 1), 0): LineSignature.LIGHTLIKE,
        (Signature(0, 0, 1), 1): LineSignature.RADICAL,
    }
    for p, q in [(2, 2), (3, 1), (3, 2)]:
        possible_big = possible_codim2_signatures(p, q)
        for inv in survey_flags(p, q).observed_invariants:
            assert inv.sig_big in possible_big
            refined = refined_of[(inv.sig_small, inv.dim_small_cap_rad)]
            s, t, u = inv.sig_big.as_tuple()
            assert refined in possible_line_signatures(s, t, u)


def test_survey_matsuki_tuples_recomputable():
    # every recorded sample flag reproduces a tuple seen by the fast path
    for p, q in [(2, 2), (3, 1)]:
        survey = survey_flags(p, q)
        for flags in survey.invariants.values():
            for f in flags:
                assert matsuki_data(f, p, q).as_tuple() in survey.matsuki


def test_invariants_complete_in_both_directions():
    # over the survey: equal invariants admit a verified witness, unequal
    # ones are rejected by name
    import pytest

    from heisflag.witness import (
        InequivalentFlagsError,
        isometry_witness,
        witness_residuals,
    )

    for p, q in [(2, 2), (3, 1)]:
        survey = survey_flags(p, q)
        groups = list(survey.invariants.items())
        for _, flags in groups:
            first = flags[0]
            for other in flags[1:]:
                g = isometry_witness(p, q, first, other)
                res = witness_residuals(p, q, g, first, other)
                assert max(res.values()) <= 1e-9
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                with pytest.raises(InequivalentFlagsError):
                    isometry_witness(p, q, groups[i][1][0], groups[j][1][0])
