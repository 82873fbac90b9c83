"""
Arranged and rearranged Laguerre power series of the power function r^eta* exp(-xi r)

Every coefficient is carried as an exact rational times one transcendental factor
Gamma(g0)/(1+xi)^g0, so the alternating Pi/beta sums never round and the arranged
and rearranged forms of a truncated series are the same rational before the final multiply.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Dict, Optional
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.laguerre.ltp import GlpIndices, InvalidIndicesError, LtpIndices, beta_coeff, ltp_poly
from src.numerics.exact import RadicalScaled, factorial, rising_factorial_exact
from src.numerics.precision import (HighPrecReal, PrecisionContext, gamma, round_to, to_exact,
                                    to_high)
from src.utils.logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class PowerFunctionSpec:
    """
    The power function r^(mu*-1) exp(-xi r) split as r^n_int * r^eta*

    Attributes:
        mu_star (Fraction): Exponent parameter, mu* >= 1
        n_int (int): Integer part of mu* - 1
        eta_star (Fraction): Fractional remainder in [0, 1)
        xi (Fraction): Screening parameter, xi >= 0
    """
    mu_star: Fraction
    n_int: int
    eta_star: Fraction
    xi: Fraction = Fraction(0)


@dataclass(frozen=True)
class Basis:
    """Expansion basis: L^alpha-LTP with l = nu, or L_mu^nu generalized Laguerre"""
    kind: str
    nu: int = 0
    alpha: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("ltp", "glp"):
            raise ValueError(f"unknown basis {self.kind!r}")
        if self.kind == "ltp" and self.alpha is None:
            raise ValueError("an LTP basis needs alpha")
        if self.kind == "glp" and self.alpha is not None:
            raise ValueError("a GLP basis has no alpha")
        if self.nu < 0:
            raise InvalidIndicesError(f"nu must be nonnegative, got {self.nu}")

    @classmethod
    def ltp(cls, alpha: int, nu: int = 0) -> "Basis":
        return cls("ltp", nu, alpha)

    @classmethod
    def glp(cls, nu: int = 0) -> "Basis":
        return cls("glp", nu)

    @property
    def first_index(self) -> int:
        """Lowest basis index: nu+1 for LTP, nu for GLP"""
        return self.nu + 1 if self.kind == "ltp" else self.nu


@dataclass(frozen=True)
class ExpansionCoeffTable:
    """Expansion coefficients A (LTP) or B (GLP) indexed by mu"""
    basis: Basis
    eta_star: Fraction
    xi: Fraction
    coefficients: Dict[int, HighPrecReal] = field(hash=False)
    precision: PrecisionContext = field(default_factory=PrecisionContext)


@dataclass(frozen=True)
class RearrangedCoeffTable:
    """Rearranged coefficients Q (LTP) or D (GLP) indexed by the power of r"""
    basis: Basis
    N: int
    coefficients: Dict[int, HighPrecReal] = field(hash=False)


@dataclass(frozen=True)
class MomentSequence:
    """
    Exact sequence m(s) = ratio^(s-start) * (base)_(s-start) for s >= start

    With no base the Pochhammer factor is dropped, so ``MomentSequence(r)`` is r^s.
    """
    ratio: Fraction
    start: int = 0
    base: Optional[Fraction] = None

    def __call__(self, s: int) -> Fraction:
        return _moment(self, s)


@lru_cache(maxsize=65536)
def _moment(moments: MomentSequence, s: int) -> Fraction:
    j = s - moments.start
    if j < 0:
        raise ValueError(f"moment index {s} precedes the start {moments.start}")
    value = moments.ratio ** j
    if moments.base is not None:
        value *= rising_factorial_exact(moments.base, j)
    return value


def power_moments(r) -> MomentSequence:
    """r^s for exact r"""
    return MomentSequence(to_exact(r))


def split_mu_star(mu_star, xi=0) -> PowerFunctionSpec:
    """
    Split mu* - 1 into its integer part and fractional remainder

    Args:
        mu_star: mu* >= 1 (decimal string, int, Fraction or mpf)
        xi: Screening parameter, xi >= 0

    Returns:
        PowerFunctionSpec: (n_int, eta*) with mu* - 1 = n_int + eta*
    """
    mu_star, xi = to_exact(mu_star), to_exact(xi)
    if mu_star < 1:
        raise ValueError(f"mu* must be at least 1, got {mu_star}")
    if xi < 0:
        raise ValueError(f"xi must be nonnegative, got {xi}")
    n_int = floor(mu_star - 1)
    return PowerFunctionSpec(mu_star, n_int, mu_star - 1 - n_int, xi)


def _check_eta_xi(eta_star, xi):
    eta_star, xi = to_exact(eta_star), to_exact(xi)
    if not 0 <= eta_star < 1:
        raise ValueError(f"eta* must lie in [0, 1), got {eta_star}")
    if xi < 0:
        raise ValueError(f"xi must be nonnegative, got {xi}")
    return eta_star, xi


def _gamma_over_power(g0: Fraction, base: Fraction, ctx: PrecisionContext) -> HighPrecReal:
    """Gamma(g0) / base^g0 at the precision of ctx"""
    return gamma(g0, ctx) / ctx.mp.power(to_high(base, ctx), to_high(g0, ctx))


# LTP route

def ltp_moments(alpha: int, nu: int, eta_star: Fraction, xi: Fraction) -> MomentSequence:
    """Gamma(eta*-alpha+s+3)/(1+xi)^(eta*-alpha+s+3) divided by its s = nu value"""
    return MomentSequence(1 / (1 + xi), nu, eta_star - alpha + nu + 3)


def ltp_prefactor(alpha: int, nu: int, eta_star, xi, ctx: PrecisionContext) -> HighPrecReal:
    """The transcendental factor shared by every A coefficient"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    return _gamma_over_power(eta_star - alpha + nu + 3, 1 + xi, ctx)


@lru_cache(maxsize=65536)
def _ltp_projection(alpha: int, nu: int, mu: int, moments: MomentSequence) -> Fraction:
    """sum_s c_(mu s) m(s) over the rational LTP coefficients (radical excluded)"""
    poly = ltp_poly(LtpIndices(alpha, mu, nu))
    return sum((c * moments(power) for power, c in poly.terms()), Fraction(0))


def _ltp_radicand(alpha: int, nu: int, mu: int) -> int:
    return int(ltp_poly(LtpIndices(alpha, mu, nu)).radical.radicand)


def a_exact(alpha: int, nu: int, mu: int, eta_star, xi) -> RadicalScaled:
    """A coefficient divided by the LTP prefactor, exactly"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    if mu < nu + 1:
        raise InvalidIndicesError(f"A coefficients start at mu = nu+1 = {nu + 1}, got {mu}")
    weight = Fraction(2 * mu) ** alpha
    projection = _ltp_projection(alpha, nu, mu, ltp_moments(alpha, nu, eta_star, xi))
    return RadicalScaled._canonical(weight * projection, _ltp_radicand(alpha, nu, mu))


def a_coeff(alpha: int, nu: int, mu: int, eta_star, xi, ctx: PrecisionContext) -> HighPrecReal:
    """
    LTP expansion coefficient
    (2mu)^alpha sum_s Pi_(mu s) Gamma(eta*-alpha+s+3)/(1+xi)^(eta*-alpha+s+3)

    Args:
        alpha (int): Frictional quantum number
        nu (int): Orbital index l of the basis
        mu (int): Basis index, mu >= nu+1
        eta_star: Fractional exponent in [0, 1)
        xi: Screening parameter
        ctx (PrecisionContext): Target precision

    Returns:
        HighPrecReal: A coefficient
    """
    work = ctx.padded()
    value = ltp_prefactor(alpha, nu, eta_star, xi, work) * to_high(
        a_exact(alpha, nu, mu, eta_star, xi), work)
    return round_to(value, ctx)


@lru_cache(maxsize=65536)
def _ltp_arranged_term(alpha: int, nu: int, mu: int, eta_star: Fraction, xi: Fraction,
                       moments: MomentSequence) -> Fraction:
    # A_mu/T * sum_s Pi_(mu s) m(s); the two radicals multiply to the rational radicand
    weight = Fraction(2 * mu) ** alpha
    coefficient = _ltp_projection(alpha, nu, mu, ltp_moments(alpha, nu, eta_star, xi))
    return weight * _ltp_radicand(alpha, nu, mu) * coefficient * _ltp_projection(alpha, nu, mu, moments)


def ltp_arranged_exact(alpha: int, nu: int, eta_star, xi, N: int,
                       moments: MomentSequence) -> Fraction:
    """sum_(mu=nu+1)^N A_mu sum_s Pi_(mu s) m(s), divided by the LTP prefactor"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    if N < nu + 1:
        raise InvalidIndicesError(f"LTP series need N >= nu+1 = {nu + 1}, got {N}")
    return sum((_ltp_arranged_term(alpha, nu, mu, eta_star, xi, moments)
                for mu in range(nu + 1, N + 1)), Fraction(0))


@lru_cache(maxsize=65536)
def _q_contribution(alpha: int, nu: int, s: int, power: int, eta_star: Fraction,
                    xi: Fraction) -> Fraction:
    # A_s/T * Pi_(s power), rational after the radicals pair up
    poly = ltp_poly(LtpIndices(alpha, s, nu))
    c = poly.coefficient(power).rational
    if c == 0:
        return Fraction(0)
    weight = Fraction(2 * s) ** alpha
    coefficient = _ltp_projection(alpha, nu, s, ltp_moments(alpha, nu, eta_star, xi))
    return weight * _ltp_radicand(alpha, nu, s) * coefficient * c


def q_exact(alpha: int, nu: int, mu: int, eta_star, xi, N: int) -> Fraction:
    """Q coefficient divided by the LTP prefactor, exactly"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    if not nu <= mu <= N - 1:
        raise InvalidIndicesError(f"Q coefficients need nu <= mu <= N-1, got mu={mu}, N={N}")
    return sum((_q_contribution(alpha, nu, s, mu, eta_star, xi)
                for s in range(max(nu + 1, mu + 1), N + 1)), Fraction(0))


def ltp_rearranged_exact(alpha: int, nu: int, eta_star, xi, N: int,
                         moments: MomentSequence) -> Fraction:
    """sum_(mu=nu)^(N-1) Q_mu(N) m(mu), divided by the LTP prefactor"""
    if N < nu + 1:
        raise InvalidIndicesError(f"LTP series need N >= nu+1 = {nu + 1}, got {N}")
    return sum((q_exact(alpha, nu, mu, eta_star, xi, N) * moments(mu)
                for mu in range(nu, N)), Fraction(0))


def q_coeff(alpha: int, nu: int, mu: int, eta_star, xi, N: int,
            ctx: PrecisionContext) -> HighPrecReal:
    """Rearranged LTP coefficient Q_mu(N) = sum_(s=nu+1)^N A_s Pi_(s mu)"""
    work = ctx.padded()
    value = ltp_prefactor(alpha, nu, eta_star, xi, work) * to_high(
        q_exact(alpha, nu, mu, eta_star, xi, N), work)
    return round_to(value, ctx)


def _ltp_sum(exact_sum, alpha, nu, eta_star, xi, N, r, ctx):
    if to_exact(r) < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    work = ctx.padded()
    value = ltp_prefactor(alpha, nu, eta_star, xi, work) * to_high(
        exact_sum(alpha, nu, eta_star, xi, N, power_moments(r)), work)
    return round_to(value, ctx)


def arranged_sum_ltp(alpha: int, nu: int, eta_star, xi, N: int, r,
                     ctx: PrecisionContext) -> HighPrecReal:
    """Order-N arranged LTP series of r^eta* exp(-xi r) at r"""
    return _ltp_sum(ltp_arranged_exact, alpha, nu, eta_star, xi, N, r, ctx)


def rearranged_sum_ltp(alpha: int, nu: int, eta_star, xi, N: int, r,
                       ctx: PrecisionContext) -> HighPrecReal:
    """Order-N LTP series collected by powers of r: sum_mu Q_mu(N) r^mu"""
    return _ltp_sum(ltp_rearranged_exact, alpha, nu, eta_star, xi, N, r, ctx)


# GLP route

def glp_moments(nu: int, eta_star: Fraction, xi: Fraction) -> MomentSequence:
    """Gamma(eta*+nu+s+1)/(1+xi)^(eta*+nu+s+1) divided by its s = 0 value"""
    return MomentSequence(1 / (1 + xi), 0, eta_star + nu + 1)


def glp_prefactor(nu: int, eta_star, xi, ctx: PrecisionContext) -> HighPrecReal:
    """The transcendental factor shared by every B coefficient"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    return _gamma_over_power(eta_star + nu + 1, 1 + xi, ctx)


def _glp_norm_inverse(mu: int, nu: int) -> Fraction:
    return Fraction(factorial(mu - nu), factorial(mu) ** 3)


@lru_cache(maxsize=65536)
def _glp_projection(nu: int, mu: int, moments: MomentSequence) -> Fraction:
    g = GlpIndices(mu, nu)
    return sum((beta_coeff(g, s) * moments(s) for s in range(mu - nu + 1)), Fraction(0))


def b_exact(nu: int, mu: int, eta_star, xi) -> Fraction:
    """B coefficient divided by the GLP prefactor, exactly"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    if mu < nu:
        raise InvalidIndicesError(f"B coefficients start at mu = nu = {nu}, got {mu}")
    return _glp_norm_inverse(mu, nu) * _glp_projection(nu, mu, glp_moments(nu, eta_star, xi))


def b_coeff(nu: int, mu: int, eta_star, xi, ctx: PrecisionContext) -> HighPrecReal:
    """
    GLP expansion coefficient
    [(mu-nu)!/(mu!)^3] sum_s beta_(mu s) Gamma(eta*+nu+s+1)/(1+xi)^(eta*+nu+s+1)
    """
    work = ctx.padded()
    value = glp_prefactor(nu, eta_star, xi, work) * to_high(b_exact(nu, mu, eta_star, xi), work)
    return round_to(value, ctx)


def glp_arranged_exact(nu: int, eta_star, xi, N: int, moments: MomentSequence) -> Fraction:
    """sum_(mu=nu)^N B_mu sum_s beta_(mu s) m(s), divided by the GLP prefactor"""
    if N < nu:
        raise InvalidIndicesError(f"GLP series need N >= nu = {nu}, got {N}")
    return sum((b_exact(nu, mu, eta_star, xi) * _glp_projection(nu, mu, moments)
                for mu in range(nu, N + 1)), Fraction(0))


def d_exact(nu: int, mu: int, eta_star, xi, N: int) -> Fraction:
    """D coefficient divided by the GLP prefactor, exactly"""
    if not 0 <= mu <= N - nu:
        raise InvalidIndicesError(f"D coefficients need 0 <= mu <= N-nu, got mu={mu}, N={N}")
    return sum((b_exact(nu, s, eta_star, xi) * beta_coeff(GlpIndices(s, nu), mu)
                for s in range(max(nu, mu + nu), N + 1)), Fraction(0))


def glp_rearranged_exact(nu: int, eta_star, xi, N: int, moments: MomentSequence) -> Fraction:
    """sum_(mu=0)^(N-nu) D_mu(N) m(mu), divided by the GLP prefactor"""
    if N < nu:
        raise InvalidIndicesError(f"GLP series need N >= nu = {nu}, got {N}")
    return sum((d_exact(nu, mu, eta_star, xi, N) * moments(mu)
                for mu in range(N - nu + 1)), Fraction(0))


def d_coeff(nu: int, mu: int, eta_star, xi, N: int, ctx: PrecisionContext) -> HighPrecReal:
    """Rearranged GLP coefficient D_mu(N) = sum_(s=nu)^N B_s beta_(s mu)"""
    work = ctx.padded()
    value = glp_prefactor(nu, eta_star, xi, work) * to_high(d_exact(nu, mu, eta_star, xi, N), work)
    return round_to(value, ctx)


def _glp_sum(exact_sum, nu, eta_star, xi, N, r, ctx):
    if to_exact(r) < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    work = ctx.padded()
    value = glp_prefactor(nu, eta_star, xi, work) * to_high(
        exact_sum(nu, eta_star, xi, N, power_moments(r)), work)
    return round_to(value, ctx)


def arranged_sum_glp(nu: int, eta_star, xi, N: int, r, ctx: PrecisionContext) -> HighPrecReal:
    """Order-N arranged GLP series of r^eta* exp(-xi r) at r"""
    return _glp_sum(glp_arranged_exact, nu, eta_star, xi, N, r, ctx)


def rearranged_sum_glp(nu: int, eta_star, xi, N: int, r, ctx: PrecisionContext) -> HighPrecReal:
    """Order-N GLP series collected by powers of r: sum_mu D_mu(N) r^mu"""
    return _glp_sum(glp_rearranged_exact, nu, eta_star, xi, N, r, ctx)


def target_function(spec: PowerFunctionSpec, r, ctx: PrecisionContext) -> HighPrecReal:
    """r^(mu*-1) exp(-xi r)"""
    r = to_exact(r)
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    work = ctx.padded()
    rv = to_high(r, work)
    value = work.mp.power(rv, to_high(spec.mu_star - 1, work)) * work.mp.exp(-to_high(spec.xi * r, work))
    return round_to(value, ctx)


# Tables

def a_table(alpha: int, nu: int, eta_star, xi, mu_max: int,
            ctx: PrecisionContext) -> ExpansionCoeffTable:
    """A coefficients for mu = nu+1 .. mu_max"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    coefficients = {mu: a_coeff(alpha, nu, mu, eta_star, xi, ctx) for mu in range(nu + 1, mu_max + 1)}
    logger.debug(f"A table alpha={alpha} nu={nu}: {len(coefficients)} coefficients")
    return ExpansionCoeffTable(Basis.ltp(alpha, nu), eta_star, xi, coefficients, ctx)


def b_table(nu: int, eta_star, xi, mu_max: int, ctx: PrecisionContext) -> ExpansionCoeffTable:
    """B coefficients for mu = nu .. mu_max"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    coefficients = {mu: b_coeff(nu, mu, eta_star, xi, ctx) for mu in range(nu, mu_max + 1)}
    logger.debug(f"B table nu={nu}: {len(coefficients)} coefficients")
    return ExpansionCoeffTable(Basis.glp(nu), eta_star, xi, coefficients, ctx)


def q_table(alpha: int, nu: int, eta_star, xi, N: int, ctx: PrecisionContext) -> RearrangedCoeffTable:
    """Q coefficients for powers nu .. N-1"""
    coefficients = {mu: q_coeff(alpha, nu, mu, eta_star, xi, N, ctx) for mu in range(nu, N)}
    return RearrangedCoeffTable(Basis.ltp(alpha, nu), N, coefficients)


def d_table(nu: int, eta_star, xi, N: int, ctx: PrecisionContext) -> RearrangedCoeffTable:
    """D coefficients for powers 0 .. N-nu"""
    coefficients = {mu: d_coeff(nu, mu, eta_star, xi, N, ctx) for mu in range(N - nu + 1)}
    return RearrangedCoeffTable(Basis.glp(nu), N, coefficients)


# Parseval tails

def parseval_tail_ltp(alpha: int, nu: int, eta_star, xi, N: int, ctx: PrecisionContext) -> HighPrecReal:
    """
    Weighted norm of the target minus the captured energy of the first N LTP terms

    ||f||^2 = Gamma(2eta*+3-alpha)/(1+2xi)^(2eta*+3-alpha) and each term contributes
    A_mu^2 (2mu)^(-alpha). Non-negative and non-increasing in N.
    """
    eta_star, xi = _check_eta_xi(eta_star, xi)
    work = ctx.padded()
    norm = _gamma_over_power(2 * eta_star + 3 - alpha, 1 + 2 * xi, work)
    captured = sum((a_exact(alpha, nu, mu, eta_star, xi).square() / Fraction(2 * mu) ** alpha
                    for mu in range(nu + 1, N + 1)), Fraction(0))
    prefactor = ltp_prefactor(alpha, nu, eta_star, xi, work)
    return round_to(norm - prefactor * prefactor * to_high(captured, work), ctx)


def parseval_tail_glp(nu: int, eta_star, xi, N: int, ctx: PrecisionContext) -> HighPrecReal:
    """GLP counterpart: ||f||^2 = Gamma(2eta*+nu+1)/(1+2xi)^(2eta*+nu+1), terms B_mu^2 (mu!)^3/(mu-nu)!"""
    eta_star, xi = _check_eta_xi(eta_star, xi)
    work = ctx.padded()
    norm = _gamma_over_power(2 * eta_star + nu + 1, 1 + 2 * xi, work)
    captured = sum((b_exact(nu, mu, eta_star, xi) ** 2 / _glp_norm_inverse(mu, nu)
                    for mu in range(nu, N + 1)), Fraction(0))
    prefactor = glp_prefactor(nu, eta_star, xi, work)
    return round_to(norm - prefactor * prefactor * to_high(captured, work), ctx)
