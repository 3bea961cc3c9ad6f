import cmath
import math

import numpy as np
import pytest

from qbeam.qalgebra import (
    Deformation,
    QPowerSeries,
    q_bracket,
    q_bracket_complex,
    q_derive,
    q_double_factorial,
    q_factorial,
)

UNDEF = Deformation.undeformed()


def brute_bracket(p, a):
    # independent oracle: literal complex arithmetic
    q = cmath.exp(1j * math.pi / (p + 1))
    return (q**a - q**-a) / (q - 1 / q)


class TestDeformation:
    @pytest.mark.parametrize("p", range(1, 11))
    def test_unit_circle_and_root_order(self, p):
        d = Deformation.root_of_unity(p)
        assert abs(abs(d.q) - 1.0) < 1e-12
        assert abs(d.q ** (2 * (p + 1)) - 1.0) < 1e-12
        assert 0.0 < d.theta <= math.pi / 2
        assert d.dim == p + 1

    def test_undeformed_branch(self):
        assert UNDEF.q == 1.0
        assert not UNDEF.is_deformed
        with pytest.raises(ValueError):
            _ = UNDEF.dim

    @pytest.mark.parametrize("p", [0, -1, 1.5])
    def test_rejects_bad_order(self, p):
        with pytest.raises(ValueError):
            Deformation.root_of_unity(p)


class TestQBracket:
    def test_undeformed_is_identity(self):
        assert q_bracket(UNDEF, 5) == 5.0
        assert q_bracket(UNDEF, -2.5) == -2.5

    def test_vanishes_at_dimension(self):
        assert abs(q_bracket(Deformation.root_of_unity(3), 4)) < 1e-12

    def test_p3_value(self):
        d = Deformation.root_of_unity(3)
        assert q_bracket(d, 2) == pytest.approx(1.4142136, abs=1e-6)
        assert q_bracket(d, 2) == pytest.approx(math.sqrt(2), abs=1e-12)

    @pytest.mark.parametrize("p", [1, 2, 3, 5, 8, 13])
    def test_matches_complex_form(self, p):
        d = Deformation.root_of_unity(p)
        for a in [0.5, 1, 2, 3.25, 7, 11.5]:
            z = q_bracket_complex(d, a)
            assert abs(z.imag) < 1e-10
            assert q_bracket(d, a) == pytest.approx(z.real, abs=1e-10)
            assert z == pytest.approx(brute_bracket(p, a), abs=1e-12)

    @pytest.mark.parametrize("p", range(1, 7))
    def test_zero_at_multiples_of_dimension(self, p):
        d = Deformation.root_of_unity(p)
        for n in range(1, 5):
            assert abs(q_bracket(d, n * (p + 1))) < 1e-12

    @pytest.mark.parametrize("deform", [UNDEF, Deformation.root_of_unity(4)])
    def test_antisymmetry(self, deform):
        rng = np.random.default_rng(7)
        for a in rng.uniform(-10, 10, size=25):
            assert q_bracket(deform, a) == pytest.approx(-q_bracket(deform, -a), abs=1e-12)

    def test_classical_limit(self):
        huge = Deformation.root_of_unity(10**6)
        for n in range(11):
            assert abs(q_bracket(huge, n) - n) < 1e-6
        devs = [abs(q_bracket(Deformation.root_of_unity(p), 7) - 7) for p in (10, 100, 1000, 10000)]
        assert devs == sorted(devs, reverse=True)


class TestQFactorial:
    @pytest.mark.parametrize("deform", [UNDEF, Deformation.root_of_unity(2), Deformation.root_of_unity(5)])
    def test_empty_product(self, deform):
        assert q_factorial(deform, 0) == 1.0

    def test_undeformed_is_ordinary_factorial(self):
        assert q_factorial(UNDEF, 4) == 24.0

    def test_p3_value_against_brute_product(self):
        d = Deformation.root_of_unity(3)
        brute = q_bracket(d, 1) * q_bracket(d, 2) * q_bracket(d, 3)
        assert q_factorial(d, 3) == pytest.approx(brute, abs=1e-14)
        assert q_factorial(d, 3) == pytest.approx(1.4142136, abs=1e-6)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            q_factorial(UNDEF, -1)

    @pytest.mark.parametrize("p", [1, 2, 3, 5, 8])
    def test_splits_into_double_factorials(self, p):
        d = Deformation.root_of_unity(p)
        for n in range(1, 13):
            lhs = q_factorial(d, n)
            rhs = q_double_factorial(d, n) * q_double_factorial(d, n - 1)
            assert lhs == pytest.approx(rhs, abs=1e-10)


class TestQDoubleFactorial:
    def test_base_cases(self):
        for deform in (UNDEF, Deformation.root_of_unity(3)):
            assert q_double_factorial(deform, 0) == 1.0
            assert q_double_factorial(deform, 1) == 1.0

    def test_undeformed_even_chain(self):
        assert q_double_factorial(UNDEF, 6) == 48.0

    def test_p3_odd_chain(self):
        assert q_double_factorial(Deformation.root_of_unity(3), 3) == pytest.approx(1.0, abs=1e-12)

    def test_vanishing_chain_member(self):
        # [3] = [p+1] = 0 at p=2 kills the chain
        assert q_double_factorial(Deformation.root_of_unity(2), 3) == pytest.approx(0.0, abs=1e-12)


class TestQPowerSeries:
    def test_length_invariant(self):
        with pytest.raises(ValueError):
            QPowerSeries(np.ones(3, dtype=complex), 3, "mixed")

    def test_parity_invariants(self):
        with pytest.raises(ValueError):
            QPowerSeries(np.array([0, 1, 0], dtype=complex), 2, "even")
        with pytest.raises(ValueError):
            QPowerSeries(np.array([1, 0, 1], dtype=complex), 2, "odd")
        QPowerSeries(np.array([1, 0, 1], dtype=complex), 2, "even")

    def test_parity_inference(self):
        assert QPowerSeries.from_coeffs([1, 0, 2]).parity == "even"
        assert QPowerSeries.from_coeffs([0, 1, 0, 3]).parity == "odd"
        assert QPowerSeries.from_coeffs([1, 1]).parity == "mixed"

    def test_coeffs_are_immutable(self):
        s = QPowerSeries.from_coeffs([1, 2, 3])
        with pytest.raises(ValueError):
            s.coeffs[0] = 5

    def test_evaluate_matches_polyval(self):
        rng = np.random.default_rng(11)
        coeffs = rng.normal(size=9) + 1j * rng.normal(size=9)
        s = QPowerSeries.from_coeffs(coeffs)
        for x in rng.uniform(-2, 2, size=10):
            assert s.evaluate(x) == pytest.approx(np.polyval(coeffs[::-1], x), abs=1e-12)

    def test_shift_and_arithmetic(self):
        s = QPowerSeries.from_coeffs([1, 2])
        t = s.shifted(2)
        assert np.array_equal(t.coeffs, np.array([0, 0, 1, 2], dtype=complex))
        assert np.array_equal((s + t).coeffs, np.array([1, 2, 1, 2], dtype=complex))
        assert np.array_equal((2.0 * s).coeffs, np.array([2, 4], dtype=complex))


class TestQDerive:
    def test_linear_term(self):
        for deform in (UNDEF, Deformation.root_of_unity(2), Deformation.root_of_unity(7)):
            out = q_derive(deform, QPowerSeries.from_coeffs([0, 1]))
            assert out.truncation_order == 0
            assert out.coeffs[0] == pytest.approx(1.0)

    def test_undeformed_cube(self):
        out = q_derive(UNDEF, QPowerSeries.from_coeffs([0, 0, 0, 1]))
        assert np.allclose(out.coeffs, [0, 0, 3])

    def test_p3_square(self):
        out = q_derive(Deformation.root_of_unity(3), QPowerSeries.from_coeffs([0, 0, 1]))
        assert out.coeffs[1] == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_constant_maps_to_zero_series(self):
        out = q_derive(UNDEF, QPowerSeries.from_coeffs([4.0]))
        assert out.truncation_order == 0
        assert not np.any(out.coeffs)

    def test_parity_flips(self):
        even = QPowerSeries.from_coeffs([1, 0, 1])
        odd = QPowerSeries.from_coeffs([0, 1, 0, 1])
        d = Deformation.root_of_unity(4)
        assert q_derive(d, even).parity == "odd"
        assert q_derive(d, odd).parity == "even"

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("n", range(2, 9))
    def test_second_derivative_of_monomial(self, p, n):
        d = Deformation.root_of_unity(p)
        mono = QPowerSeries.from_coeffs([0] * n + [1])
        twice = q_derive(d, q_derive(d, mono))
        expected = q_bracket(d, n) * q_bracket(d, n - 1)
        assert twice.coeffs[n - 2] == pytest.approx(expected, abs=1e-12)
        assert not np.any(np.delete(twice.coeffs, n - 2))
