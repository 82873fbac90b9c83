"""
Slater-type orbital radial integrals with Coulomb-Yukawa like interaction potentials

The closed form is the oracle; quadrature and the four Laguerre series are checked against it.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.expansions.power_series import (Basis, MomentSequence, PowerFunctionSpec,
                                         glp_arranged_exact, glp_prefactor, glp_rearranged_exact,
                                         ltp_arranged_exact, ltp_prefactor, ltp_rearranged_exact,
                                         split_mu_star)
from src.laguerre.ltp import InvalidIndicesError
from src.numerics.precision import HighPrecReal, PrecisionContext, gamma, round_to, to_exact, to_high
from src.utils.logger import get_logger

logger = get_logger()

FORMS = ("arranged", "rearranged")
METHODS = ("ltp-arranged", "ltp-rearranged", "glp-arranged", "glp-rearranged")

_EXACT_SUMS = {
    ("ltp", "arranged"): ltp_arranged_exact,
    ("ltp", "rearranged"): ltp_rearranged_exact,
    ("glp", "arranged"): glp_arranged_exact,
    ("glp", "rearranged"): glp_rearranged_exact,
}


@dataclass(frozen=True)
class StoParams:
    """Slater-type orbital r^(n*-1) exp(-zeta r) with possibly noninteger n*"""
    n_star: Fraction
    zeta: Fraction

    def __post_init__(self):
        n_star, zeta = to_exact(self.n_star), to_exact(self.zeta)
        if n_star <= 0:
            raise ValueError(f"n* must be positive, got {n_star}")
        if zeta <= 0:
            raise ValueError(f"zeta must be positive, got {zeta}")
        object.__setattr__(self, "n_star", n_star)
        object.__setattr__(self, "zeta", zeta)


@dataclass(frozen=True)
class IntegralSpec:
    """
    One radial integral <bra| r^(mu*-1) exp(-xi r) |ket>

    Attributes:
        bra (StoParams): First orbital
        ket (StoParams): Second orbital
        mu_star (Fraction): Potential exponent, mu* >= 1
        xi (Fraction): Screening, xi >= 0 (0 is the Coulomb-like case)
    """
    bra: StoParams
    ket: StoParams
    mu_star: Fraction
    xi: Fraction = Fraction(0)

    def __post_init__(self):
        mu_star, xi = to_exact(self.mu_star), to_exact(self.xi)
        if mu_star < 1:
            raise ValueError(f"mu* must be at least 1, got {mu_star}")
        if xi < 0:
            raise ValueError(f"xi must be nonnegative, got {xi}")
        object.__setattr__(self, "mu_star", mu_star)
        object.__setattr__(self, "xi", xi)

    @property
    def N_star(self) -> Fraction:
        return self.bra.n_star + self.ket.n_star - 1

    @property
    def eps_sum(self) -> Fraction:
        """zeta + zeta', the exponent sum (not the bound-state energy)"""
        return self.bra.zeta + self.ket.zeta

    @property
    def power_function(self) -> PowerFunctionSpec:
        return split_mu_star(self.mu_star, self.xi)


def _gamma_ratio(a: Fraction, base: Fraction, ctx: PrecisionContext) -> HighPrecReal:
    """Gamma(a) / base^a"""
    return gamma(a, ctx) / ctx.mp.power(to_high(base, ctx), to_high(a, ctx))


def _orbital_norm(p: StoParams, ctx: PrecisionContext) -> HighPrecReal:
    """(2 zeta)^(n*+1/2) / sqrt(Gamma(2n*+1))"""
    mp = ctx.mp
    return mp.power(to_high(2 * p.zeta, ctx), to_high(p.n_star + Fraction(1, 2), ctx)) / mp.sqrt(
        gamma(2 * p.n_star + 1, ctx))


def sto_radial(p: StoParams, r, ctx: PrecisionContext) -> HighPrecReal:
    """
    Normalized radial STO (2 zeta)^(n*+1/2) Gamma(2n*+1)^(-1/2) r^(n*-1) exp(-zeta r)

    Args:
        p (StoParams): Orbital parameters
        r: Radial distance; r = 0 needs n* >= 1
        ctx (PrecisionContext): Target precision

    Returns:
        HighPrecReal: Orbital value
    """
    r = to_exact(r)
    if r < 0 or (r == 0 and p.n_star < 1):
        raise ValueError(f"r = {r} is outside the domain of an STO with n* = {p.n_star}")
    work = ctx.padded()
    mp = work.mp
    value = (_orbital_norm(p, work) * mp.power(to_high(r, work), to_high(p.n_star - 1, work))
             * mp.exp(-to_high(p.zeta * r, work)))
    return round_to(value, ctx)


def _pair_norm(bra: StoParams, ket: StoParams, ctx: PrecisionContext) -> HighPrecReal:
    return _orbital_norm(bra, ctx) * _orbital_norm(ket, ctx)


def norm_factor(spec: IntegralSpec, ctx: PrecisionContext) -> HighPrecReal:
    """Product of the two orbital normalization constants"""
    work = ctx.padded()
    return round_to(_pair_norm(spec.bra, spec.ket, work), ctx)


def analytic_I(spec: IntegralSpec, ctx: PrecisionContext) -> HighPrecReal:
    """
    Closed-form radial integral

    norm * Gamma(N*+mu*+1) / (zeta+zeta'+xi)^(N*+mu*+1)
    """
    work = ctx.padded()
    value = _pair_norm(spec.bra, spec.ket, work) * _gamma_ratio(
        spec.N_star + spec.mu_star + 1, spec.eps_sum + spec.xi, work)
    return round_to(value, ctx)


def j_moment(bra: StoParams, ket: StoParams, kappa, ctx: PrecisionContext) -> HighPrecReal:
    """Radial moment J^kappa = norm * Gamma(N*+kappa+2) / (zeta+zeta')^(N*+kappa+2)"""
    exponent = bra.n_star + ket.n_star - 1 + to_exact(kappa) + 2
    if exponent <= 0:
        raise ValueError(f"J moment needs N*+kappa+2 > 0, got {exponent}")
    work = ctx.padded()
    value = _pair_norm(bra, ket, work) * _gamma_ratio(exponent, bra.zeta + ket.zeta, work)
    return round_to(value, ctx)


def quadrature_I(spec: IntegralSpec, ctx: PrecisionContext) -> HighPrecReal:
    """
    Radial integral by tanh-sinh quadrature of R_bra R_ket f r^2 over (0, inf)

    The interval is split at the peak of the integrand.
    """
    work = ctx.padded()
    mp = work.mp
    norm = _pair_norm(spec.bra, spec.ket, work)
    exponents = [to_high(spec.bra.n_star - 1, work), to_high(spec.ket.n_star - 1, work),
                 to_high(spec.mu_star - 1, work)]
    decay = [to_high(spec.bra.zeta, work), to_high(spec.ket.zeta, work), to_high(spec.xi, work)]

    def integrand(r):
        value = norm * r * r
        for exponent, rate in zip(exponents, decay):
            value *= mp.power(r, exponent) * mp.exp(-rate * r)
        return value

    peak = to_high((spec.N_star + spec.mu_star) / (spec.eps_sum + spec.xi), work)
    value = mp.quad(integrand, [mp.zero, peak, mp.inf])
    logger.debug(f"Quadrature of {spec} finished")
    return round_to(value, ctx)


def _j_moments(spec: IntegralSpec, basis: Basis) -> MomentSequence:
    # J^(n_int+s) relative to its value at the first power of the basis
    start = basis.nu if basis.kind == "ltp" else 0
    n_int = spec.power_function.n_int
    return MomentSequence(1 / spec.eps_sum, start, spec.N_star + n_int + start + 2)


def series_I(spec: IntegralSpec, basis: Basis, form: str, N: int,
             ctx: PrecisionContext) -> HighPrecReal:
    """
    Order-N Laguerre series of the radial integral

    The power function's r^eta* exp(-xi r) factor is expanded in the basis and
    every power of r is integrated exactly as a J moment.

    Args:
        spec (IntegralSpec): Integral parameters
        basis (Basis): LTP(alpha, nu) or GLP(nu)
        form (str): "arranged" or "rearranged"
        N (int): Truncation order
        ctx (PrecisionContext): Target precision

    Returns:
        HighPrecReal: Partial sum of order N
    """
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    if N < basis.first_index:
        raise InvalidIndicesError(f"{basis.kind} series need N >= {basis.first_index}, got {N}")
    power = spec.power_function
    moments = _j_moments(spec, basis)
    work = ctx.padded()
    if basis.kind == "ltp":
        prefactor = ltp_prefactor(basis.alpha, basis.nu, power.eta_star, power.xi, work)
        exact = _EXACT_SUMS["ltp", form](basis.alpha, basis.nu, power.eta_star, power.xi, N, moments)
    else:
        prefactor = glp_prefactor(basis.nu, power.eta_star, power.xi, work)
        exact = _EXACT_SUMS["glp", form](basis.nu, power.eta_star, power.xi, N, moments)
    j_first = _pair_norm(spec.bra, spec.ket, work) * _gamma_ratio(moments.base, spec.eps_sum, work)
    return round_to(prefactor * j_first * to_high(exact, work), ctx)


def series_I_all_forms(spec: IntegralSpec, nu: int, N: int, ctx: PrecisionContext,
                       alpha: Optional[int] = 0) -> Dict[str, HighPrecReal]:
    """All four series values at one truncation order (LTP uses the given alpha)"""
    return {
        "ltp-arranged": series_I(spec, Basis.ltp(alpha, nu), "arranged", N, ctx),
        "ltp-rearranged": series_I(spec, Basis.ltp(alpha, nu), "rearranged", N, ctx),
        "glp-arranged": series_I(spec, Basis.glp(nu), "arranged", N, ctx),
        "glp-rearranged": series_I(spec, Basis.glp(nu), "rearranged", N, ctx),
    }
