"""
L^alpha Laguerre-type polynomials, generalized Laguerre polynomials and radial functions
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Union
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.laguerre.polynomial import ExactPolynomial
from src.numerics.exact import RadicalScaled, factorial, sign_power
from src.numerics.precision import HighPrecReal, PrecisionContext, round_to, to_exact, to_high
from src.utils.logger import get_logger

logger = get_logger()

CONVENTIONS = ("nonstandard", "standard")


class InvalidIndicesError(ValueError):
    """Raised for quantum numbers outside the admissible range"""


@dataclass(frozen=True)
class LtpIndices:
    """
    Quantum numbers of one L^alpha-LTP

    Attributes:
        alpha (int): Frictional quantum number (alpha <= 2)
        n (int): Principal quantum number (n >= 1)
        l (int): Orbital quantum number (0 <= l <= n-1)
    """
    alpha: int
    n: int
    l: int

    def __post_init__(self):
        for name in ("alpha", "n", "l"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise InvalidIndicesError(f"{name} must be an integer, got {getattr(self, name)!r}")
        if self.alpha > 2:
            raise InvalidIndicesError(f"alpha must be at most 2, got {self.alpha}")
        if self.n < 1:
            raise InvalidIndicesError(f"n must be positive, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise InvalidIndicesError(f"l must lie in [0, {self.n - 1}], got {self.l}")

    @property
    def p(self) -> int:
        return 2 * self.l + 2 - self.alpha

    @property
    def q(self) -> int:
        return self.n + self.l + 1 - self.alpha

    @property
    def weight(self) -> Fraction:
        """(2n)**alpha, the constant part of the weight function"""
        return Fraction(2 * self.n) ** self.alpha


@dataclass(frozen=True)
class GlpIndices:
    """Degree index mu and order index nu of L_mu^nu (mu >= nu >= 0)"""
    mu: int
    nu: int

    def __post_init__(self):
        if self.nu < 0:
            raise InvalidIndicesError(f"nu must be nonnegative, got {self.nu}")
        if self.mu < self.nu:
            raise InvalidIndicesError(f"mu must be at least nu, got mu={self.mu}, nu={self.nu}")


@dataclass(frozen=True)
class RadialScale:
    """Orbital exponent zeta of the radial variable x = 2 zeta r"""
    zeta: Fraction

    def __post_init__(self):
        zeta = to_exact(self.zeta)
        if zeta <= 0:
            raise ValueError(f"zeta must be positive, got {zeta}")
        object.__setattr__(self, "zeta", zeta)

    def x_of(self, r) -> Fraction:
        return 2 * self.zeta * to_exact(r)


def binom_F(m: int, n: int) -> int:
    """Binomial coefficient n!/(m!(n-m)!), zero for m < 0 or m > n"""
    if n < 0:
        raise ValueError(f"binom_F needs n >= 0, got {n}")
    if m < 0 or m > n:
        return 0
    return comb(n, m)


def _ltp_norm_squared(idx: LtpIndices) -> Fraction:
    return Fraction(factorial(idx.q - idx.p)) / (idx.weight * factorial(idx.q))


def pi_coeff(idx: LtpIndices, k: int) -> RadicalScaled:
    """
    Exact coefficient of x**k in the L^alpha-LTP

    Args:
        idx (LtpIndices): Quantum numbers
        k (int): Power of x

    Returns:
        RadicalScaled: (-1)^(k-l) sqrt[(q-p)!/((2n)^alpha q!)] F_{p+k-l}(q)/(k-l)!,
        zero outside l <= k <= n-1
    """
    if k < idx.l or k > idx.n - 1:
        return RadicalScaled()
    j = k - idx.l
    rational = Fraction(sign_power(j) * binom_F(idx.p + j, idx.q), factorial(j))
    return RadicalScaled.sqrt(_ltp_norm_squared(idx)) * rational


@lru_cache(maxsize=4096)
def ltp_poly(idx: LtpIndices) -> ExactPolynomial:
    """
    The L^alpha-LTP in nonstandard convention

    Offset l, degree n-1, shared radical sqrt[(q-p)!/((2n)^alpha q!)].
    """
    logger.debug(f"Building LTP coefficients for alpha={idx.alpha} n={idx.n} l={idx.l}")
    coeffs = tuple(
        Fraction(sign_power(j) * binom_F(idx.p + j, idx.q), factorial(j))
        for j in range(idx.n - idx.l)
    )
    return ExactPolynomial(idx.l, coeffs, RadicalScaled.sqrt(_ltp_norm_squared(idx)))


def ltp_weighted_poly(idx: LtpIndices) -> ExactPolynomial:
    """Weighted partner (2n/x)**alpha times the LTP; a Laurent polynomial when l < alpha"""
    return ltp_poly(idx).shift(-idx.alpha).scale(idx.weight)


def beta_coeff(g: GlpIndices, s: int) -> int:
    """Coefficient (-1)^(nu+s) (mu-s)! F_s(mu) F_{nu+s}(mu) of x**s in L_mu^nu"""
    if s < 0 or s > g.mu - g.nu:
        return 0
    return sign_power(g.nu + s) * factorial(g.mu - s) * binom_F(s, g.mu) * binom_F(g.nu + s, g.mu)


@lru_cache(maxsize=4096)
def glp_nonstandard(g: GlpIndices) -> ExactPolynomial:
    """L_mu^nu in nonstandard convention, (-1)^nu mu! times the standard polynomial"""
    return ExactPolynomial(0, tuple(Fraction(beta_coeff(g, s)) for s in range(g.mu - g.nu + 1)))


@lru_cache(maxsize=4096)
def glp_standard(degree: int, order: int) -> ExactPolynomial:
    """
    Standard generalized Laguerre polynomial L^(order)_degree

    Args:
        degree (int): m >= 0
        order (int): p >= 0

    Returns:
        ExactPolynomial: sum_k (-1)^k F_{m-k}(m+p) x^k / k!
    """
    if degree < 0 or order < 0:
        raise InvalidIndicesError(f"degree and order must be nonnegative, got {degree}, {order}")
    return ExactPolynomial(0, tuple(
        Fraction(sign_power(k) * binom_F(degree - k, degree + order), factorial(k))
        for k in range(degree + 1)
    ))


def normalization_standard(idx: LtpIndices) -> RadicalScaled:
    """
    Normalization of the standard-convention route

    Fixed by requiring it to reproduce the nonstandard LTP:
    (-1)^alpha sqrt[(q-p)!/((2n)^alpha (q!)^3)].
    """
    q_fact = factorial(idx.q)
    bracket = Fraction(factorial(idx.q - idx.p)) / (idx.weight * q_fact ** 3)
    return RadicalScaled.sqrt(bracket) * sign_power(idx.alpha)


def ltp_standard_convention(idx: LtpIndices) -> ExactPolynomial:
    """LTP rebuilt from the standard polynomial through L_q^p = (-1)^p q! L^(p)_(q-p)"""
    bridge = glp_standard(idx.q - idx.p, idx.p).scale(sign_power(idx.p) * factorial(idx.q))
    return bridge.shift(idx.l).scale(normalization_standard(idx))


def ltp_standard_weighted(idx: LtpIndices) -> ExactPolynomial:
    """Weighted partner of the standard-convention LTP"""
    return ltp_standard_convention(idx).shift(-idx.alpha).scale(idx.weight)


def ltp_family(idx: LtpIndices, convention: str = "nonstandard",
               weighted: bool = False) -> ExactPolynomial:
    """Select the LTP (or its weighted partner) built by the requested convention"""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}, expected one of {CONVENTIONS}")
    if convention == "standard":
        return ltp_standard_weighted(idx) if weighted else ltp_standard_convention(idx)
    return ltp_weighted_poly(idx) if weighted else ltp_poly(idx)


def eto_value(poly: ExactPolynomial, x, ctx: PrecisionContext) -> HighPrecReal:
    """exp(-x/2) * poly(x), the exponential-type orbital built on an exact polynomial"""
    x = to_exact(x)
    work = ctx.padded()
    value = work.mp.exp(-to_high(x / 2, work)) * poly.evaluate(x, work)
    return round_to(value, ctx)


def radial_R_x(idx: LtpIndices, x, ctx: PrecisionContext, weighted: bool = False,
               convention: str = "nonstandard") -> HighPrecReal:
    """exp(-x/2) times the LTP (or its weighted partner) in the dimensionless variable x"""
    return eto_value(ltp_family(idx, convention, weighted), x, ctx)


def _radial(idx: LtpIndices, scale: RadialScale, r, ctx: PrecisionContext,
            weighted: bool) -> HighPrecReal:
    r = to_exact(r)
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    work = ctx.padded()
    two_zeta = to_high(2 * scale.zeta, work)
    prefactor = two_zeta * work.mp.sqrt(two_zeta)
    value = prefactor * radial_R_x(idx, scale.x_of(r), work, weighted=weighted)
    return round_to(value, ctx)


def radial_R(idx: LtpIndices, scale: RadialScale, r, ctx: PrecisionContext) -> HighPrecReal:
    """
    Radial part (2 zeta)^(3/2) exp(-x/2) LTP(x) with x = 2 zeta r

    Args:
        idx (LtpIndices): Quantum numbers
        scale (RadialScale): Orbital exponent
        r: Radial distance, r >= 0
        ctx (PrecisionContext): Target precision

    Returns:
        HighPrecReal: Radial function value
    """
    return _radial(idx, scale, r, ctx, weighted=False)


def radial_R_weighted(idx: LtpIndices, scale: RadialScale, r, ctx: PrecisionContext) -> HighPrecReal:
    """Radial partner built on the weighted LTP; r = 0 is rejected when alpha > 0"""
    if idx.alpha > 0 and to_exact(r) == 0:
        raise ValueError(f"weighted radial function needs r > 0 when alpha = {idx.alpha}")
    return _radial(idx, scale, r, ctx, weighted=True)
