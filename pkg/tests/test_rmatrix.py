import itertools
from fractions import Fraction

import pytest

from ybw.cyclo import zeta
from ybw.errors import (
    AmbiguousMatchError,
    NonIntegralBlocksError,
    NotInvolutiveError,
    SupportExceedsLevelError,
    YBEFailsError,
)
from ybw.matrix import ExactMatrix, flip_operator, kron
from ybw.perms import FinitePermutation
from ybw.rmatrix import (
    ThomaParams,
    boxplus,
    char_cycle,
    cycle_trace,
    extract_thoma,
    merge_thoma,
    normal_form_from_thoma,
    normal_forms_of_dim,
    scalar_rmatrix,
    verify_rmatrix,
    yb_rep_perm,
)


def hadamard_conjugated_flip():
    """A dense involutive solution: the flip conjugated by H (x) H over Q(zeta_8)."""
    inv_sqrt2 = (zeta(8) + zeta(8, 7)) / 2
    h = ExactMatrix.from_entries(2, 2, {(0, 0): inv_sqrt2, (0, 1): inv_sqrt2,
                                        (1, 0): inv_sqrt2, (1, 1): -inv_sqrt2})
    hh = kron(h, h)
    return verify_rmatrix(hh * flip_operator(2, 2) * hh.dagger(), 2)


def plus_minus():
    return boxplus(scalar_rmatrix(1, +1), scalar_rmatrix(1, -1))


# -- certification ----------------------------------------------------


def test_identity_certifies():
    verify_rmatrix(ExactMatrix.identity(9), 3)


def test_flip_certifies():
    verify_rmatrix(flip_operator(2, 2), 2)


def test_bad_diagonal_fails_ybe_with_witness():
    bad = ExactMatrix.diag([1, 1, 1, -1])
    with pytest.raises(YBEFailsError, match="row"):
        verify_rmatrix(bad, 2)
    # oracle: both braid sides on all 8 basis vectors differ somewhere
    from ybw.matrix import amplify
    a = amplify(bad, (2, 2, 2), 0, 2).to_dense()
    b = amplify(bad, (2, 2, 2), 1, 3).to_dense()
    assert a * b * a != b * a * b


def test_non_involutive_rejected():
    m = ExactMatrix.diag([1, 2, Fraction(1, 2), 1])
    with pytest.raises(NotInvolutiveError):
        verify_rmatrix(m, 2)


# -- boxplus ----------------------------------------------------------


def test_boxplus_of_ones_is_flip():
    pp = boxplus(scalar_rmatrix(1, +1), scalar_rmatrix(1, +1))
    assert pp.m == flip_operator(2, 2)


def test_boxplus_plus_minus_action():
    pm = plus_minus()
    m = pm.m
    # e00 fixed, e11 negated, mixed swapped
    assert m.data[0][0] == 1
    assert m.data[3][3] == -1
    assert m.data[2][1] == 1 and m.data[1][2] == 1
    assert m.trace() == 0


def test_boxplus_merges_thoma():
    f = verify_rmatrix(flip_operator(2, 2), 2)
    pm = plus_minus()
    combined = boxplus(f, pm)
    got = extract_thoma(combined)
    expected = merge_thoma(extract_thoma(f), 2, extract_thoma(pm), 2)
    assert got == expected
    assert expected == ThomaParams.make([Fraction(1, 4)] * 3, [Fraction(1, 4)])


# -- normal forms -----------------------------------------------------


def test_normal_form_trivial():
    r = normal_form_from_thoma(ThomaParams.make([1], []), 1)
    assert r.m == ExactMatrix.identity(1)


def test_normal_form_half_half():
    r = normal_form_from_thoma(ThomaParams.make([Fraction(1, 2)], [Fraction(1, 2)]), 2)
    assert r.m == plus_minus().m


def test_normal_form_d4_char():
    params = ThomaParams.make([Fraction(1, 2), Fraction(1, 4)], [Fraction(1, 4)])
    r = normal_form_from_thoma(params, 4)
    assert char_cycle(r, 2) == Fraction(1, 4)


def test_normal_form_non_integral():
    with pytest.raises(NonIntegralBlocksError):
        normal_form_from_thoma(ThomaParams.make([Fraction(2, 3), Fraction(1, 3)], []), 2)


def test_normal_form_requires_full_mass():
    with pytest.raises(NonIntegralBlocksError):
        normal_form_from_thoma(ThomaParams.make([Fraction(1, 2)], []), 2)


# -- representations --------------------------------------------------


def test_rep_identity_and_generator():
    f = verify_rmatrix(flip_operator(2, 2), 2)
    assert yb_rep_perm(f, FinitePermutation.identity(), 2).is_identity()
    op = yb_rep_perm(f, FinitePermutation.transposition(1, 2), 2)
    assert op.to_dense() == flip_operator(2, 2)


def test_rep_word_independence_on_three_cycle():
    # (1 2 3) = s1 s2 and, by the braid relation, also s2 s1 s2 s1; both
    # words must give the same operator
    r = plus_minus()
    c3 = FinitePermutation.cycle(3)
    via_word = yb_rep_perm(r, c3, 3)
    s1 = r.amplified(1, 3)
    s2 = r.amplified(2, 3)
    assert via_word == s1 * s2
    assert via_word == s2 * s1 * s2 * s1
    assert s1 * s2 * s1 == s2 * s1 * s2  # braid relation on images


def test_rep_is_homomorphism():
    r = hadamard_conjugated_flip()
    perms = [FinitePermutation.from_one_line(line)
             for line in itertools.permutations(range(1, 5))]
    for a in perms[:8]:
        for b in perms[8:16]:
            assert yb_rep_perm(r, a * b, 4) == yb_rep_perm(r, a, 4) * yb_rep_perm(r, b, 4)


def test_rep_flip_is_coordinate_permutation():
    # with R the flip, the representation permutes tensor coordinates
    f = verify_rmatrix(flip_operator(3, 3), 3)
    sigma = FinitePermutation.from_cycles([[1, 3, 2]])
    op = yb_rep_perm(f, sigma, 3)
    layout = [3, 3, 3]
    from ybw.matrix import TensorIndex
    ti = TensorIndex((3, 3, 3))
    for col in range(27):
        digits = ti.decode(col)
        image = tuple(digits[sigma.inverse()(i + 1) - 1] for i in range(3))
        row = ti.encode(image)
        entries = [(rr, v) for rr, rowvals in enumerate(op.rows) for (cc, v) in rowvals if cc == col]
        assert entries == [(row, entries[0][1])] and entries[0][1].is_one()


def test_rep_support_check():
    r = plus_minus()
    with pytest.raises(SupportExceedsLevelError):
        yb_rep_perm(r, FinitePermutation.cycle(4), 3)


# -- characters -------------------------------------------------------


def test_char_scalar_cases():
    plus = scalar_rmatrix(1, +1)
    minus = scalar_rmatrix(1, -1)
    for n in range(2, 8):
        assert char_cycle(plus, n) == 1
        assert char_cycle(minus, n) == Fraction(-1) ** (n - 1)


def test_char_flip():
    f = verify_rmatrix(flip_operator(2, 2), 2)
    for n in range(2, 9):
        assert char_cycle(f, n) == Fraction(1, 2 ** (n - 1))


def test_char_matches_materialized_trace():
    # the transfer contraction against the literal product of amplified operators
    cases = [
        verify_rmatrix(flip_operator(2, 2), 2),
        plus_minus(),
        hadamard_conjugated_flip(),
        normal_form_from_thoma(ThomaParams.make([Fraction(1, 2), Fraction(1, 4)],
                                                [Fraction(1, 4)]), 4),
        verify_rmatrix(flip_operator(3, 3), 3),
    ]
    for r in cases:
        for n in range(2, 7):
            op = yb_rep_perm(r, FinitePermutation.cycle(n), n)
            assert op.trace() == cycle_trace(r, n), (r, n)


def test_char_bounded_and_rational():
    for _, r in normal_forms_of_dim(3):
        for n in range(2, 8):
            v = char_cycle(r, n)
            assert isinstance(v, Fraction)
            assert abs(v) <= 1


# -- extraction -------------------------------------------------------


def test_extract_identity():
    r = verify_rmatrix(ExactMatrix.identity(9), 3)
    t = extract_thoma(r)
    assert t.alpha == (Fraction(1),) and t.beta == ()


def test_extract_plus_minus():
    t = extract_thoma(plus_minus())
    assert t == ThomaParams.make([Fraction(1, 2)], [Fraction(1, 2)])
    # chi(c_2) = 0 and chi(c_3) = 1/4 pin this down among the five d=2 candidates
    assert char_cycle(plus_minus(), 2) == 0
    assert char_cycle(plus_minus(), 3) == Fraction(1, 4)


def test_extract_round_trip_spec_example():
    params = ThomaParams.make([Fraction(1, 2), Fraction(1, 4)], [Fraction(1, 4)])
    assert extract_thoma(normal_form_from_thoma(params, 4)) == params


def test_extract_dense_representative():
    assert extract_thoma(hadamard_conjugated_flip()) == ThomaParams.make(
        [Fraction(1, 2), Fraction(1, 2)], [])


def test_round_trip_exhaustive_d6():
    # the acceptance gate stops at d = 5; the d = 6 layer (65 partition
    # pairs) is cheap with the transfer contraction
    for params, r in normal_forms_of_dim(6):
        assert extract_thoma(r) == params


def test_rep_word_independence_larger_level():
    r = verify_rmatrix(flip_operator(3, 3), 3)
    from ybw.rng import Lcg64
    rng = Lcg64(83)
    for _ in range(10):
        a = rng.permutation_of([1, 2, 3, 4, 5])
        b = rng.permutation_of([1, 2, 3, 4, 5])
        assert yb_rep_perm(r, a * b, 5) == yb_rep_perm(r, a, 5) * yb_rep_perm(r, b, 5)


# -- parameter type ---------------------------------------------------


def test_thoma_params_validation():
    with pytest.raises(ValueError):
        ThomaParams.make([Fraction(1, 4), Fraction(1, 2)], [])
    with pytest.raises(ValueError):
        ThomaParams.make([Fraction(1, 2), Fraction(-1, 4)], [])
    with pytest.raises(ValueError):
        ThomaParams.make([Fraction(3, 4)], [Fraction(1, 2)])
    t = ThomaParams.make([Fraction(1, 2)], [Fraction(1, 4)])
    assert t.deficit == Fraction(1, 4)
    assert not t.is_yb_type()
    assert ThomaParams.make([Fraction(1, 2), Fraction(1, 2)], []).is_yb_type()


def test_minimal_denominator():
    t = ThomaParams.make([Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 6)])
    assert t.minimal_denominator() == 6
