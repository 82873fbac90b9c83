"""
Exact polynomials (with Laurent offsets) over rationals times one shared radical
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.numerics.exact import RadicalScaled, factorial
from src.numerics.precision import HighPrecReal, PrecisionContext, round_to, to_high

Scalar = Union[int, Fraction, RadicalScaled]

UNIT = RadicalScaled(Fraction(1), Fraction(1))


class RadicalMismatchError(ValueError):
    """Raised when adding polynomials whose radical factors differ"""


class NonIntegrableError(ValueError):
    """Raised when the moment identity meets a negative power of x"""


@dataclass(frozen=True)
class ExactPolynomial:
    """
    radical * sum_i coeffs[i] * x**(offset + i)

    Canonical form: the rational part of the radical is folded into the coefficients
    (so the radical is sqrt of a squarefree integer) and zero coefficients are trimmed
    at both ends. The zero polynomial has no coefficients, offset 0 and radical 1.
    A negative offset is allowed for the weighted partners carrying x**(-alpha).
    """
    offset: int = 0
    coeffs: Tuple[Fraction, ...] = ()
    radical: RadicalScaled = UNIT

    def __post_init__(self):
        scale = self.radical.rational
        coeffs = [Fraction(c) * scale for c in self.coeffs]
        offset = self.offset
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        coeffs = coeffs[lead:]
        offset += lead
        if coeffs:
            radicand = int(self.radical.radicand)
        else:
            offset, radicand = 0, 1
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "radical", RadicalScaled._canonical(Fraction(1), radicand))

    @classmethod
    def from_terms(cls, terms: Mapping[int, Union[int, Fraction]],
                   radical: RadicalScaled = UNIT) -> "ExactPolynomial":
        """Build from a {power: coefficient} mapping"""
        powers = [k for k, c in terms.items() if c != 0]
        if not powers:
            return cls()
        low, high = min(powers), max(powers)
        coeffs = tuple(Fraction(terms.get(k, 0)) for k in range(low, high + 1))
        return cls(low, coeffs, radical)

    @classmethod
    def constant(cls, value: Scalar) -> "ExactPolynomial":
        if isinstance(value, RadicalScaled):
            return cls(0, (Fraction(1),), value)
        return cls(0, (Fraction(value),))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        """Highest power present (None for the zero polynomial)"""
        if self.is_zero:
            return None
        return self.offset + len(self.coeffs) - 1

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        """(power, rational coefficient) pairs, radical factor excluded"""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.offset + i, c

    def coefficient(self, power: int) -> RadicalScaled:
        """Exact coefficient of x**power, radical included"""
        index = power - self.offset
        if self.is_zero or index < 0 or index >= len(self.coeffs):
            return RadicalScaled()
        return RadicalScaled._canonical(self.coeffs[index], int(self.radical.radicand))

    def _as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms())

    def scale(self, factor: Scalar) -> "ExactPolynomial":
        if isinstance(factor, RadicalScaled):
            return ExactPolynomial(self.offset, self.coeffs, self.radical * factor)
        return ExactPolynomial(self.offset, tuple(c * factor for c in self.coeffs), self.radical)

    def shift(self, k: int) -> "ExactPolynomial":
        """Multiply by x**k"""
        if self.is_zero:
            return self
        return ExactPolynomial(self.offset + k, self.coeffs, self.radical)

    def __neg__(self) -> "ExactPolynomial":
        return self.scale(-1)

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.radical != other.radical:
            raise RadicalMismatchError(
                f"cannot add polynomials scaled by sqrt({self.radical.radicand}) "
                f"and sqrt({other.radical.radicand})")
        total = self._as_dict()
        for power, c in other.terms():
            total[power] = total.get(power, Fraction(0)) + c
        return ExactPolynomial.from_terms(total, self.radical)

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "ExactPolynomial":
        if isinstance(other, (int, Fraction, RadicalScaled)):
            return self.scale(other)
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ExactPolynomial()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return ExactPolynomial(self.offset + other.offset, tuple(product),
                               self.radical * other.radical)

    __rmul__ = __mul__

    def derivative(self, k: int = 1) -> "ExactPolynomial":
        """k-th derivative (Laurent terms differentiate as x**m -> m x**(m-1))"""
        if k < 0:
            raise ValueError(f"derivative order must be nonnegative, got {k}")
        terms = self._as_dict()
        for _ in range(k):
            terms = {power - 1: c * power for power, c in terms.items() if power != 0}
        return ExactPolynomial.from_terms(terms, self.radical)

    def moment_integral(self) -> RadicalScaled:
        """
        Exact value of the integral of exp(-x) * p(x) over (0, inf)

        Uses the moment identity: the integral of exp(-x) x**m is m!.
        """
        if self.is_zero:
            return RadicalScaled()
        if self.offset < 0:
            raise NonIntegrableError(
                f"exp(-x) * x**{self.offset} is not integrable at the origin")
        total = sum((c * factorial(power) for power, c in self.terms()), Fraction(0))
        return RadicalScaled._canonical(total, int(self.radical.radicand))

    def evaluate(self, x, ctx: PrecisionContext) -> HighPrecReal:
        return eval_poly(self, x, ctx)

    def vanishes_at(self, x: Fraction) -> bool:
        """Exact test for a node at a rational point"""
        if self.is_zero:
            return True
        if x == 0:
            return self.offset > 0
        return sum((c * x ** power for power, c in self.terms()), Fraction(0)) == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        body = " + ".join(f"({c})*x^{power}" for power, c in self.terms())
        if self.radical.radicand == 1:
            return body
        return f"sqrt({self.radical.radicand})*[{body}]"


def eval_poly(poly: ExactPolynomial, x, ctx: PrecisionContext) -> HighPrecReal:
    """
    Evaluate an exact polynomial at context precision

    Horner on the rational coefficients with guard bits, then the power-of-x and
    radical factors, rounded once to ``ctx``.

    Args:
        poly (ExactPolynomial): Polynomial to evaluate
        x: Point (int, Fraction, decimal string or mpf)
        ctx (PrecisionContext): Target precision

    Returns:
        HighPrecReal: poly(x)
    """
    if poly.is_zero:
        return ctx.mp.zero
    work = ctx.padded()
    xv = to_high(x, work)
    if xv == 0:
        if poly.offset < 0:
            raise ValueError(f"x = 0 is a pole of a Laurent polynomial with offset {poly.offset}")
        if poly.offset > 0:
            return ctx.mp.zero
    acc = work.mp.zero
    for c in reversed(poly.coeffs):
        acc = acc * xv + to_high(c, work)
    value = acc * work.mp.power(xv, poly.offset) * to_high(poly.radical, work)
    return round_to(value, ctx)
