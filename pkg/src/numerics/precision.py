"""
Configurable-precision real arithmetic on top of mpmath

Each precision maps to a private per-thread ``mpmath`` context (never the global
``mp``), so precision is a per-call argument and never global state.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Any
import sys
import os
import threading

from mpmath import libmp
from mpmath.ctx_mp import MPContext

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import config
from src.numerics.exact import RadicalScaled, factorial, rising_factorial_exact
from src.utils.decimal_input import parse_decimal

# Values produced by PrecisionContext.mp (mpmath mpf instances)
HighPrecReal = Any

_thread_state = threading.local()


def _mp_context(bits: int) -> MPContext:
    # mpmath functions adjust prec while they run, so contexts are never shared across threads
    contexts = getattr(_thread_state, "contexts", None)
    if contexts is None:
        contexts = _thread_state.contexts = {}
    context = contexts.get(bits)
    if context is None:
        context = contexts[bits] = MPContext()
        context.prec = bits
    return context


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision in mantissa bits"""
    mantissa_bits: int = config.DEFAULT_PRECISION_BITS

    def __post_init__(self):
        if self.mantissa_bits < config.MIN_PRECISION_BITS:
            raise ValueError(
                f"precision must be at least {config.MIN_PRECISION_BITS} bits, "
                f"got {self.mantissa_bits}")

    @property
    def mp(self) -> MPContext:
        return _mp_context(self.mantissa_bits)

    def padded(self, extra_bits: int = config.GUARD_BITS) -> "PrecisionContext":
        """A wider context for intermediate work; results are rounded back with round_to"""
        return PrecisionContext(self.mantissa_bits + extra_bits)


def to_exact(value) -> Fraction:
    """
    Exact rational value of an input

    Accepts int, Fraction, decimal strings, rational RadicalScaled values and
    mpf numbers (every binary floating-point number is an exact rational).
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_decimal(value)
    if isinstance(value, RadicalScaled):
        if not value.is_rational:
            raise ValueError(f"{value} is irrational")
        return value.rational
    if isinstance(value, float):
        return Fraction(value)
    if hasattr(value, "_mpf_"):
        p, q = libmp.to_rational(value._mpf_)
        return Fraction(p, q)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def to_high(value, ctx: PrecisionContext) -> HighPrecReal:
    """
    Convert an exact scalar (or another mpf) to the precision of ``ctx``

    Rationals are correctly rounded; radicals are evaluated with guard bits and rounded once.
    """
    mp = ctx.mp
    if isinstance(value, RadicalScaled):
        if value.is_rational:
            return to_high(value.rational, ctx)
        work = ctx.padded()
        root = work.mp.sqrt(to_high(value.radicand, work))
        return mp.mpf(to_high(value.rational, work) * root)
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, (int, Fraction, str)):
        exact = to_exact(value)
        return mp.make_mpf(libmp.from_rational(
            exact.numerator, exact.denominator, mp.prec, libmp.round_nearest))
    return mp.mpf(value)


def round_to(value: HighPrecReal, ctx: PrecisionContext) -> HighPrecReal:
    """Round an mpf computed in any context to the precision of ``ctx``"""
    return ctx.mp.mpf(value)


def gamma(a, ctx: PrecisionContext) -> HighPrecReal:
    """
    Gamma function for positive arguments

    The argument is split as f + k with f in [1, 2); Gamma(f) is evaluated once with
    guard bits and the integer shift is applied by the exact rising factorial.

    Args:
        a: Positive argument (int, Fraction, decimal string or mpf)
        ctx (PrecisionContext): Target precision

    Returns:
        HighPrecReal: Gamma(a) rounded to ctx
    """
    exact = to_exact(a)
    if exact <= 0:
        raise ValueError(f"gamma is only provided for positive arguments, got {exact}")
    if exact.denominator == 1:
        return to_high(factorial(exact.numerator - 1), ctx)
    shift = floor(exact) - 1
    base = exact - shift
    work = ctx.padded()
    gamma_base = work.mp.gamma(to_high(base, work))
    if shift >= 0:
        value = gamma_base * to_high(rising_factorial_exact(base, shift), work)
    else:
        value = gamma_base / to_high(exact, work)
    return round_to(value, ctx)


def ulp_distance(a, b, ctx: PrecisionContext) -> int:
    """
    Distance between two values in units in the last place of ``ctx``

    The ulp is taken at the larger magnitude; the difference is computed exactly.
    """
    a, b = to_exact(a), to_exact(b)
    if a == b:
        return 0
    scale = max(abs(a), abs(b))
    exponent = scale.numerator.bit_length() - scale.denominator.bit_length()
    if scale < Fraction(2) ** exponent:
        exponent -= 1
    ulp = Fraction(2) ** (exponent + 1 - ctx.mantissa_bits)
    return ceil(abs(a - b) / ulp)


def format_scientific(value: HighPrecReal, ctx: PrecisionContext) -> str:
    """Scientific notation with enough digits to reparse bit-exactly at ctx precision"""
    digits = libmp.repr_dps(ctx.mantissa_bits)
    return ctx.mp.nstr(value, digits, min_fixed=0, max_fixed=0,
                       strip_zeros=False, show_zero_exponent=True)

