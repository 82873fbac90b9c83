"""
Test suite for Laguerre power-series expansions and their rearrangements
"""
import pytest
import random
import sys
import os
from fractions import Fraction

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.expansions.power_series import (Basis, MomentSequence, a_coeff, a_exact, a_table,
                                         arranged_sum_glp, arranged_sum_ltp, b_coeff, b_table,
                                         d_coeff, d_table, parseval_tail_glp, parseval_tail_ltp,
                                         q_coeff, q_table, rearranged_sum_glp, rearranged_sum_ltp,
                                         split_mu_star, target_function)
from src.laguerre.ltp import InvalidIndicesError
from src.numerics.precision import PrecisionContext, gamma, round_to, ulp_distance

CTX = PrecisionContext()
TINY = CTX.mp.mpf(2) ** -240


def relative_gap(value, reference):
    return abs(value - reference) / abs(reference)


class TestPowerFunction:
    """Test the split of the power-function exponent"""

    def test_split_mu_star(self):
        """Test integer and fractional parts"""
        spec = split_mu_star("2.5")
        assert (spec.n_int, spec.eta_star) == (1, Fraction(1, 2))
        spec = split_mu_star("1.0")
        assert (spec.n_int, spec.eta_star) == (0, 0)
        spec = split_mu_star("4.25", "5.1")
        assert (spec.n_int, spec.eta_star, spec.xi) == (3, Fraction(1, 4), Fraction(51, 10))

        with pytest.raises(ValueError, match="at least 1"):
            split_mu_star("0.5")
        with pytest.raises(ValueError, match="xi must be nonnegative"):
            split_mu_star(2, -1)

    def test_target_function(self):
        """Test r^(mu*-1) exp(-xi r)"""
        mp = CTX.mp
        assert target_function(split_mu_star(1), "2.7", CTX) == 1
        assert ulp_distance(target_function(split_mu_star(2, 1), 1, CTX), mp.exp(-1), CTX) <= 2
        assert ulp_distance(target_function(split_mu_star("2.5", "0.5"), 4, CTX),
                            8 * mp.exp(-2), CTX) <= 2

    def test_moment_sequence(self):
        """Test powers and scaled Pochhammer moments"""
        assert MomentSequence(Fraction(3))(4) == 81
        moments = MomentSequence(Fraction(1, 2), 1, Fraction(3))
        assert moments(1) == 1
        assert moments(3) == Fraction(12, 4)

        with pytest.raises(ValueError, match="precedes"):
            moments(0)

    def test_basis(self):
        """Test basis descriptors"""
        assert Basis.ltp(-1, 2).first_index == 3
        assert Basis.glp(2).first_index == 2
        with pytest.raises(ValueError, match="needs alpha"):
            Basis("ltp")
        with pytest.raises(ValueError, match="unknown basis"):
            Basis("sto")


class TestLtpExpansion:
    """Test A and Q coefficients and the LTP series"""

    def test_a_coeff_examples(self):
        """Test A coefficients"""
        mp = CTX.mp
        assert ulp_distance(a_coeff(0, 0, 1, 0, 0, CTX), mp.sqrt(2), CTX) <= 8
        assert a_coeff(0, 0, 2, 0, 0, CTX) == 0
        expected = gamma("3.5", CTX) / mp.sqrt(2)
        assert ulp_distance(a_coeff(0, 0, 1, "0.5", 0, CTX), expected, CTX) <= 8

    def test_terminating_series(self):
        """Test that a constant has a single nonzero A coefficient"""
        for alpha in range(-2, 3):
            assert not a_exact(alpha, 0, 1, 0, 0).is_zero
            for mu in range(2, 11):
                assert a_exact(alpha, 0, mu, 0, 0).is_zero, (alpha, mu)

    def test_arranged_sum_examples(self):
        """Test arranged partial sums"""
        assert arranged_sum_ltp(0, 0, 0, 0, 1, "2.7", CTX) == 1
        assert arranged_sum_ltp(0, 0, 0, 0, 5, "2.7", CTX) == 1
        expected = gamma("3.5", CTX) / 2
        assert ulp_distance(arranged_sum_ltp(0, 0, "0.5", 0, 1, 1, CTX), expected, CTX) <= 8

    def test_q_coeff_examples(self):
        """Test rearranged coefficients"""
        assert q_coeff(0, 0, 0, 0, 0, 1, CTX) == 1
        assert q_coeff(0, 0, 0, 0, 0, 10, CTX) == 1
        assert q_coeff(0, 0, 1, 0, 0, 10, CTX) == 0

        with pytest.raises(InvalidIndicesError, match="nu <= mu <= N-1"):
            q_coeff(0, 0, 10, 0, 0, 10, CTX)

    def test_rearranged_matches_arranged(self):
        """Test both forms on random parameter draws"""
        value = rearranged_sum_ltp(-1, 0, "0.5", "5.1", 20, "0.3", CTX)
        assert ulp_distance(value, arranged_sum_ltp(-1, 0, "0.5", "5.1", 20, "0.3", CTX), CTX) <= 8

        rng = random.Random(20240611)
        for _ in range(50):
            alpha, nu = rng.randint(-2, 2), rng.randint(0, 2)
            eta_star = Fraction(rng.randint(0, 19), 20)
            xi = Fraction(rng.randint(0, 60), 10)
            N = rng.randint(nu + 1, 20)
            r = Fraction(rng.randint(1, 5000), 1000)
            arranged = arranged_sum_ltp(alpha, nu, eta_star, xi, N, r, CTX)
            rearranged = rearranged_sum_ltp(alpha, nu, eta_star, xi, N, r, CTX)
            assert ulp_distance(arranged, rearranged, CTX) <= 8, (alpha, nu, eta_star, xi, N, r)

    def test_invalid_inputs(self):
        """Test parameter validation"""
        with pytest.raises(InvalidIndicesError, match="start at mu"):
            a_exact(0, 1, 1, 0, 0)
        with pytest.raises(ValueError, match="eta\\* must lie"):
            a_coeff(0, 0, 1, 1, 0, CTX)
        with pytest.raises(InvalidIndicesError, match="N >= nu\\+1"):
            arranged_sum_ltp(0, 2, 0, 0, 2, 1, CTX)
        with pytest.raises(ValueError, match="nonnegative"):
            arranged_sum_ltp(0, 0, 0, 0, 2, -1, CTX)

    def test_tables(self):
        """Test coefficient tables"""
        table = a_table(1, 1, "0.5", 0, 6, CTX)
        assert sorted(table.coefficients) == [2, 3, 4, 5, 6]
        assert table.basis == Basis.ltp(1, 1)
        assert table.coefficients[3] == a_coeff(1, 1, 3, "0.5", 0, CTX)

        table = q_table(1, 1, "0.5", 0, 6, CTX)
        assert sorted(table.coefficients) == [1, 2, 3, 4, 5]


class TestGlpExpansion:
    """Test B and D coefficients and the GLP series"""

    def test_b_coeff_examples(self):
        """Test B coefficients"""
        assert ulp_distance(b_coeff(0, 0, "0.5", 0, CTX), gamma("1.5", CTX), CTX) <= 8
        assert b_coeff(0, 0, 0, 0, CTX) == 1
        assert b_coeff(0, 1, 0, 0, CTX) == 0

    def test_sum_examples(self):
        """Test GLP partial sums"""
        assert arranged_sum_glp(0, 0, 0, 0, "3.3", CTX) == 1
        assert arranged_sum_glp(0, 0, 0, 3, "3.3", CTX) == 1
        assert ulp_distance(arranged_sum_glp(0, "0.5", 0, 0, 1, CTX), gamma("1.5", CTX), CTX) <= 8
        assert rearranged_sum_glp(0, 0, 0, 3, "3.3", CTX) == 1

    def test_d_coeff_examples(self):
        """Test rearranged GLP coefficients"""
        assert d_coeff(0, 0, 0, 0, 0, CTX) == 1
        assert ulp_distance(d_coeff(0, 0, "0.5", 0, 0, CTX), gamma("1.5", CTX), CTX) <= 8

        with pytest.raises(InvalidIndicesError, match="0 <= mu <= N-nu"):
            d_coeff(1, 3, 0, 0, 3, CTX)

    def test_rearranged_matches_arranged(self):
        """Test both GLP forms on random parameter draws"""
        value = rearranged_sum_glp(1, "0.25", "1.0", 15, "0.7", CTX)
        assert ulp_distance(value, arranged_sum_glp(1, "0.25", "1.0", 15, "0.7", CTX), CTX) <= 8

        rng = random.Random(7)
        for _ in range(50):
            nu = rng.randint(0, 2)
            eta_star = Fraction(rng.randint(0, 19), 20)
            xi = Fraction(rng.randint(0, 60), 10)
            N = rng.randint(nu, 20)
            r = Fraction(rng.randint(1, 5000), 1000)
            arranged = arranged_sum_glp(nu, eta_star, xi, N, r, CTX)
            rearranged = rearranged_sum_glp(nu, eta_star, xi, N, r, CTX)
            assert ulp_distance(arranged, rearranged, CTX) <= 8, (nu, eta_star, xi, N, r)

    def test_tables(self):
        """Test coefficient tables"""
        assert sorted(b_table(2, 0, 0, 5, CTX).coefficients) == [2, 3, 4, 5]
        assert sorted(d_table(2, 0, 0, 5, CTX).coefficients) == [0, 1, 2, 3]


class TestConvergence:
    """Test how the truncated series approach the target"""

    def test_parseval_tail_terminating(self):
        """Test a zero tail once a constant is fully captured"""
        for alpha in range(-2, 3):
            for N in (1, 4):
                assert abs(parseval_tail_ltp(alpha, 0, 0, 0, N, CTX)) < TINY, (alpha, N)
        assert abs(parseval_tail_glp(0, 0, 0, 0, CTX)) < TINY

    def test_parseval_tail_monotone(self):
        """Test that the tails are non-negative and non-increasing"""
        for alpha in range(-2, 3):
            tails = [parseval_tail_ltp(alpha, 0, "0.5", 0, N, CTX) for N in range(1, 21)]
            assert all(tail > -TINY for tail in tails)
            assert all(later <= earlier + TINY for earlier, later in zip(tails, tails[1:])), alpha

        tails = [parseval_tail_glp(1, "0.5", "0.3", N, CTX) for N in range(1, 21)]
        assert all(tail > -TINY for tail in tails)
        assert all(later <= earlier + TINY for earlier, later in zip(tails, tails[1:]))

    @pytest.mark.slow
    def test_reconstruction(self):
        """Test that the order-40 series reproduce exp(-r/2)"""
        spec = split_mu_star(1, "0.5")
        for r in ("0.1", "0.5", "1", "2", "5"):
            target = target_function(spec, r, CTX)
            for alpha in range(-2, 3):
                value = arranged_sum_ltp(alpha, 0, 0, "0.5", 40, r, CTX)
                assert relative_gap(value, target) < 1e-8, (alpha, r)
            value = arranged_sum_glp(0, 0, "0.5", 40, r, CTX)
            assert relative_gap(value, target) < 1e-8, r


class TestPrecisionStability:
    """Test that coefficient tables do not depend on the working precision"""

    HIGH = PrecisionContext(512)
    CASES = [(-2, "0.5", "0"), (-1, "0.1", "5.1"), (0, "0.25", "1"), (1, "0.75", "0.5"), (2, "0", "2")]

    def assert_rounds_down(self, high, low):
        assert high.coefficients.keys() == low.coefficients.keys()
        for mu, value in high.coefficients.items():
            assert round_to(value, CTX) == low.coefficients[mu], mu

    @pytest.mark.parametrize("alpha,eta_star,xi", CASES)
    def test_expansion_tables(self, alpha, eta_star, xi):
        """Test A and B tables at 512 bits rounded to 256"""
        self.assert_rounds_down(a_table(alpha, 0, eta_star, xi, 20, self.HIGH),
                                a_table(alpha, 0, eta_star, xi, 20, CTX))
        self.assert_rounds_down(b_table(0, eta_star, xi, 20, self.HIGH),
                                b_table(0, eta_star, xi, 20, CTX))

    @pytest.mark.parametrize("alpha,eta_star,xi", CASES)
    def test_rearranged_tables(self, alpha, eta_star, xi):
        """Test Q and D tables at 512 bits rounded to 256"""
        self.assert_rounds_down(q_table(alpha, 1, eta_star, xi, 12, self.HIGH),
                                q_table(alpha, 1, eta_star, xi, 12, CTX))
        self.assert_rounds_down(d_table(1, eta_star, xi, 12, self.HIGH),
                                d_table(1, eta_star, xi, 12, CTX))
