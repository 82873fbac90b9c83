"""
Exact scalars: big integers, rationals and radical-scaled rationals

BigInt is Python's ``int`` and BigRational is ``fractions.Fraction`` (always kept
in lowest terms with a positive denominator). ``RadicalScaled`` adds the square-root
normalization factors of the Laguerre-type polynomials without leaving exact arithmetic.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial as _factorial, gcd
from typing import Tuple, Union

from sympy import factorint

Rational = Union[int, Fraction]


def factorial(n: int) -> int:
    """
    Exact factorial

    Args:
        n (int): Nonnegative integer

    Returns:
        int: n!
    """
    if n < 0:
        raise ValueError(f"factorial of a negative number: {n}")
    return _factorial(n)


def rising_factorial_exact(a: Rational, k: int) -> Fraction:
    """Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), so that Gamma(a+k) = Gamma(a) (a)_k"""
    if k < 0:
        raise ValueError(f"rising factorial needs k >= 0, got {k}")
    a = Fraction(a)
    result = Fraction(1)
    for i in range(k):
        result *= a + i
    return result


@lru_cache(maxsize=8192)
def square_split(n: int) -> Tuple[int, int]:
    """
    Split a positive integer as n = root**2 * free with free squarefree

    Radicands here are products of factorials and small integers, so the
    factorization ends in the trial-division stage.
    """
    if n <= 0:
        raise ValueError(f"square_split needs a positive integer, got {n}")
    root, free = 1, 1
    if n == 1:
        return root, free
    for prime, exponent in factorint(n).items():
        root *= prime ** (exponent // 2)
        if exponent % 2:
            free *= prime
    return root, free


@dataclass(frozen=True)
class RadicalScaled:
    """
    Exact value ``rational * sqrt(radicand)``

    The representation is canonical: the radicand is a squarefree positive integer
    (1 for purely rational values and for zero), so value-equal inputs compare equal.
    """
    rational: Fraction = Fraction(0)
    radicand: Fraction = Fraction(1)

    def __post_init__(self):
        rational = Fraction(self.rational)
        radicand = Fraction(self.radicand)
        if radicand < 0:
            raise ValueError(f"negative radicand: {radicand}")
        if rational == 0 or radicand == 0:
            rational, free = Fraction(0), 1
        else:
            # sqrt(a/b) = (ra/(rb*fb)) * sqrt(fa*fb) with fa, fb squarefree and coprime
            num_root, num_free = square_split(radicand.numerator)
            den_root, den_free = square_split(radicand.denominator)
            rational = rational * num_root / (den_root * den_free)
            free = num_free * den_free
        object.__setattr__(self, "rational", rational)
        object.__setattr__(self, "radicand", Fraction(free))

    @classmethod
    def _canonical(cls, rational: Fraction, free: int) -> "RadicalScaled":
        # Caller guarantees free is squarefree
        value = cls.__new__(cls)
        if rational == 0:
            rational, free = Fraction(0), 1
        object.__setattr__(value, "rational", Fraction(rational))
        object.__setattr__(value, "radicand", Fraction(free))
        return value

    @classmethod
    def sqrt(cls, value: Rational) -> "RadicalScaled":
        """The exact square root of a nonnegative rational"""
        return cls(Fraction(1), Fraction(value))

    @property
    def is_zero(self) -> bool:
        return self.rational == 0

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def square(self) -> Fraction:
        return self.rational * self.rational * self.radicand

    def __mul__(self, other) -> "RadicalScaled":
        if isinstance(other, (int, Fraction)):
            return RadicalScaled._canonical(self.rational * other, int(self.radicand))
        if not isinstance(other, RadicalScaled):
            return NotImplemented
        a, b = int(self.radicand), int(other.radicand)
        if a == b:
            return RadicalScaled._canonical(self.rational * other.rational * a, 1)
        # a, b squarefree: sqrt(ab) = g sqrt((a/g)(b/g)) and the cofactor stays squarefree
        g = gcd(a, b)
        return RadicalScaled._canonical(self.rational * other.rational * g, (a // g) * (b // g))

    __rmul__ = __mul__

    def __neg__(self) -> "RadicalScaled":
        return RadicalScaled._canonical(-self.rational, int(self.radicand))

    def __add__(self, other) -> "RadicalScaled":
        if isinstance(other, (int, Fraction)):
            other = RadicalScaled(Fraction(other), 1)
        if not isinstance(other, RadicalScaled):
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.radicand != other.radicand:
            raise ValueError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) multiples exactly")
        return RadicalScaled._canonical(self.rational + other.rational, int(self.radicand))

    __radd__ = __add__

    def __sub__(self, other) -> "RadicalScaled":
        return self + (-other)

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.rational)
        return f"{self.rational}*sqrt({self.radicand})"


def radical_mul(a: RadicalScaled, b: RadicalScaled) -> RadicalScaled:
    """
    Exact product of two radical-scaled rationals

    Equal radicands collapse to a purely rational result, which is what makes the
    orthonormality checks zero-tolerance.
    """
    return a * b


def sign_power(k: int) -> int:
    """(-1)**k as an int, valid for negative k"""
    return -1 if k % 2 else 1
