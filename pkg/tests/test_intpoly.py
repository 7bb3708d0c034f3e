import pytest
from hypothesis import given, strategies as st

from cycgap.cyclotomic import phi_poly_oracle, psi_poly
from cycgap.errors import (
    CoefficientOverflow,
    DegreeTooLarge,
    InexactDivision,
    NonMonicDivisor,
    ZeroPolynomial,
)
from cycgap.intpoly import INT64_MAX, IntPoly, format_poly


def P(*coeffs):
    return IntPoly(coeffs)


polys = st.builds(IntPoly, st.lists(st.integers(-50, 50), max_size=25))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestBasics:
    def test_canonical_strips_trailing_zeros(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).coeffs == ()

    def test_zero_degree_is_undefined(self):
        with pytest.raises(ZeroPolynomial):
            IntPoly.zero().degree

    def test_coefficient_width_is_checked(self):
        with pytest.raises(CoefficientOverflow):
            IntPoly([1 << 63])
        IntPoly([INT64_MAX])  # the boundary itself is fine


class TestAdd:
    def test_constant_cancellation(self):
        assert P(1, 1) + P(-1, 1) == P(0, 2)

    def test_zero_identity(self):
        p = P(3, 0, -2)
        assert p + IntPoly.zero() == p

    def test_full_cancellation_is_canonical_zero(self):
        assert (P(1, 0, 1) + P(-1, 0, -1)).coeffs == ()


class TestMul:
    def test_difference_of_squares(self):
        assert P(-1, 1) * P(1, 1) == P(-1, 0, 1)

    def test_theta_times_psi_hand_expansion(self):
        # (-x - 1)(x - 1) = 1 - x^2
        assert P(-1, -1) * P(-1, 1) == P(1, 0, -1)

    def test_zero_annihilates(self):
        assert P(5, 7) * IntPoly.zero() == IntPoly.zero()

    def test_overflow_is_loud(self):
        with pytest.raises(CoefficientOverflow):
            P(1 << 62) * P(4)


class TestExactDiv:
    def test_linear_quotient(self):
        assert P(-1, 0, 1).exact_div(P(-1, 1)) == P(1, 1)

    def test_inverse_cyclotomic_15(self):
        quotient = IntPoly.x_pow_minus_one(15).exact_div(phi_poly_oracle(15))
        assert quotient == P(-1, -1, -1, 0, 0, 1, 1, 1)

    def test_nonzero_remainder_raises(self):
        with pytest.raises(InexactDivision):
            P(1, 0, 1).exact_div(P(-1, 1))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            P(1).exact_div(IntPoly.zero())


class TestRemMonic:
    def test_degree_already_below(self):
        assert P(-1, -1).rem_monic(P(1, 1, 1)) == P(-1, -1)

    def test_cube_mod_square_minus_one(self):
        assert IntPoly.monomial(3).rem_monic(P(-1, 0, 1)) == P(0, 1)

    def test_theta_recurrence_step(self):
        # m=3, p=5 step i=1: rem(x*(-1) - 1, Phi_3) = -x - 1
        phi3 = phi_poly_oracle(3)
        assert P(-1, -1).rem_monic(phi3) == P(-1, -1)

    def test_non_monic_divisor_rejected(self):
        with pytest.raises(NonMonicDivisor):
            P(1, 1, 1).rem_monic(P(1, 2))
        with pytest.raises(NonMonicDivisor):
            P(1, 1, 1).rem_monic(P(5))


class TestTruncate:
    def test_keeps_low_exponents(self):
        assert P(1, 1, 0, 0, 1).truncate(2) == P(1, 1)

    def test_block_slice_of_phi15(self):
        assert P(1, -1).truncate(2) == P(1, -1)

    def test_truncate_to_nothing(self):
        assert P(3, 1).truncate(0) == IntPoly.zero()


class TestRotate:
    def test_tuple_shuffle(self):
        assert P(1, 0, 0, 0, 1).rotate(5, 2) == P(0, 0, 1, 1)

    def test_zero_shift_is_identity(self):
        p = P(2, 0, -1)
        assert p.rotate(7, 0) == p

    def test_matches_remainder_definition(self):
        assert P(1, -1).rotate(3, 2) == P(0, 1, -1)

    def test_degree_too_large(self):
        with pytest.raises(DegreeTooLarge):
            P(1, 0, 0, 1).rotate(3, 1)


class TestComposePower:
    def test_cube_substitution(self):
        assert P(1, 0, 1).compose_power(3) == P(1, 0, 0, 0, 0, 0, 1)

    def test_identity_power(self):
        p = P(4, -1, 2)
        assert p.compose_power(1) == p

    def test_phi6_to_phi12(self):
        assert phi_poly_oracle(6).compose_power(2) == P(1, 0, -1, 0, 1)
        assert phi_poly_oracle(6).compose_power(2) == phi_poly_oracle(12)


class TestSubstituteNeg:
    def test_phi3_to_phi6(self):
        assert P(1, 1, 1).substitute_neg() == P(1, -1, 1)
        assert P(1, 1, 1).substitute_neg() == phi_poly_oracle(6)

    def test_even_exponent_unchanged(self):
        assert P(0, 0, 1).substitute_neg() == P(0, 0, 1)

    def test_zero(self):
        assert IntPoly.zero().substitute_neg() == IntPoly.zero()


class TestMaxGap:
    def test_two_gaps(self):
        assert P(1, 0, 1, 0, 0, 1).max_gap() == 3

    def test_single_term_convention(self):
        assert P(0, 0, 0, 0, 7).max_gap() == 0

    def test_binary_cyclotomic(self):
        assert phi_poly_oracle(15).max_gap() == 2

    def test_zero_raises(self):
        with pytest.raises(ZeroPolynomial):
            IntPoly.zero().max_gap()

    def test_witness_pair(self):
        assert P(1, 0, 1, 0, 0, 1).gap_witness() == (2, 5)


class TestTrailingDegree:
    def test_middle_terms(self):
        assert IntPoly([0, 0, 0, 1, 0, 0, 0, -1]).trailing_degree == 3

    def test_psi15_constant_term(self):
        psi15 = psi_poly(15)
        assert psi15.trailing_degree == 0
        assert psi15.coeff(0) == -1

    def test_nonzero_constant(self):
        assert P(5).trailing_degree == 0


class TestFormat:
    def test_ascending_with_bare_constant(self):
        assert format_poly(phi_poly_oracle(15)) == "1 - x^1 + x^3 - x^4 + x^5 - x^7 + x^8"
        assert format_poly(P(-1, 0, 0, 0, 2)) == "-1 + 2*x^4"
        assert format_poly(IntPoly.zero()) == "0"


@given(polys, polys, polys)
def test_distributive_law(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(polys, nonzero_polys)
def test_exact_div_inverts_mul(a, b):
    assert (a * b).exact_div(b) == a


@given(polys, polys)
def test_results_are_canonical(a, b):
    for p in (a + b, a - b, a * b):
        assert not p.coeffs or p.coeffs[-1] != 0


@given(st.data())
def test_rotate_round_trip(data):
    m = data.draw(st.integers(1, 20))
    s = data.draw(st.integers(0, m - 1))
    h = IntPoly(data.draw(st.lists(st.integers(-9, 9), max_size=m)))
    assert h.rotate(m, s).rotate(m, (m - s) % m) == h


@given(st.data())
def test_rotate_equals_remainder_definition(data):
    m = data.draw(st.integers(1, 20))
    s = data.draw(st.integers(0, m - 1))
    h = IntPoly(data.draw(st.lists(st.integers(-9, 9), max_size=m)))
    shifted = IntPoly.monomial(m - s) * h if s else h
    assert h.rotate(m, s) == shifted.rem_monic(IntPoly.x_pow_minus_one(m))


@given(nonzero_polys, st.integers(0, 30))
def test_truncate_never_increases_gap(p, s):
    t = p.truncate(s)
    if not t.is_zero():
        assert t.max_gap() <= p.max_gap()


@given(polys, st.data())
def test_rem_monic_reconstruction(a, data):
    deg = data.draw(st.integers(1, 8))
    b = IntPoly(data.draw(st.lists(st.integers(-9, 9), min_size=deg, max_size=deg)) + [1])
    r = a.rem_monic(b)
    q = (a - r).exact_div(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(nonzero_polys)
def test_max_gap_matches_exponent_scan(p):
    exps = [k for k, c in enumerate(p.coeffs) if c]
    expected = max((b - a for a, b in zip(exps, exps[1:])), default=0)
    assert p.max_gap() == expected
