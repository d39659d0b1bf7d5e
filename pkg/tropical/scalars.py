"""
🔢 Scalars of the max-times semifield

Two realizations of a nonnegative scalar are supported:
- rational: fractions.Fraction, plus Surd for roots that are not rational
- float: plain binary floating point

The realization is picked per computation through Arithmetic and is
carried by the dtype of the matrices (object -> rational, float64 -> float).
"""

import math
import numbers
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Dict, Optional, Tuple, Union

import numpy as np

# Relative tolerance for float-mode comparisons
REL_TOL = 1e-9


class Arithmetic(str, Enum):
    """Scalar realization used by a computation"""
    RATIONAL = "rational"
    FLOAT = "float"


def _iroot(n: int, k: int) -> int:
    """Largest integer r with r**k <= n (Newton iteration on integers)"""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def exact_root(x: Fraction, k: int) -> Optional[Fraction]:
    """Rational k-th root of x when x is a perfect k-th power, else None"""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative input")
    num = _iroot(x.numerator, k)
    if num ** k != x.numerator:
        return None
    den = _iroot(x.denominator, k)
    if den ** k != x.denominator:
        return None
    return Fraction(num, den)


class Surd:
    """
    Exact positive scalar coeff * b1^e1 * ... * bm^em

    coeff and the bases are positive rationals, every exponent is a
    rational strictly between 0 and 1. The set of such numbers (with 0)
    is closed under max, multiplication and inversion, which is all the
    max-times semifield needs, so a spectral radius like (3/2)^(1/3)
    can flow through every later computation without rounding.

    Use make_surd() rather than the constructor: it normalizes and
    collapses to a Fraction when no radical is left.
    """

    __slots__ = ("coeff", "powers", "_approx")

    def __init__(self, coeff: Fraction, powers: Tuple[Tuple[Fraction, Fraction], ...]):
        self.coeff = coeff
        self.powers = powers
        try:
            approx = float(coeff)
            for base, exp in powers:
                approx *= float(base) ** float(exp)
        except OverflowError:
            approx = math.inf
        self._approx = approx

    # ==================== ARITHMETIC ====================

    def __mul__(self, other):
        if isinstance(other, Surd):
            return make_surd(self.coeff * other.coeff, self.powers + other.powers)
        if isinstance(other, (float, np.floating)):
            return self._approx * float(other)
        if isinstance(other, numbers.Rational):
            if other == 0:
                return Fraction(0)
            return Surd(self.coeff * other, self.powers)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> Union[Fraction, "Surd"]:
        return make_surd(1 / self.coeff, tuple((b, -e) for b, e in self.powers))

    def __truediv__(self, other):
        if isinstance(other, Surd):
            return self * other.inverse()
        if isinstance(other, (float, np.floating)):
            return self._approx / float(other)
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("Surd division by zero")
            return Surd(self.coeff / other, self.powers)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (float, np.floating)):
            return float(other) / self._approx
        if isinstance(other, numbers.Rational):
            return other * self.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return make_surd(self.coeff ** n, tuple((b, e * n) for b, e in self.powers))

    def root(self, k: int) -> Union[Fraction, "Surd"]:
        """Exact k-th root"""
        powers = tuple((b, e / k) for b, e in self.powers)
        coeff_root = exact_root(self.coeff, k)
        if coeff_root is not None:
            return make_surd(coeff_root, powers)
        return make_surd(Fraction(1), powers + ((self.coeff, Fraction(1, k)),))

    # ==================== COMPARISON ====================

    def _lifted(self) -> Fraction:
        """self ** L as a rational, L = lcm of the exponent denominators"""
        power = reduce(math.lcm, (e.denominator for _, e in self.powers), 1)
        value = self.coeff ** power
        for base, exp in self.powers:
            value *= base ** int(exp * power)
        return value

    def _cmp(self, other) -> int:
        if isinstance(other, (float, np.floating)):
            other = float(other)
            return (self._approx > other) - (self._approx < other)
        if not isinstance(other, (Surd, numbers.Rational)):
            return NotImplemented
        if not isinstance(other, Surd) and other <= 0:
            return 1
        mine = self._approx
        try:
            theirs = float(other)
        except OverflowError:
            theirs = math.inf
        if (0 < mine < math.inf and 0 < theirs < math.inf
                and abs(mine - theirs) > 1e-9 * max(mine, theirs)):
            return 1 if mine > theirs else -1
        quotient = self / other
        if isinstance(quotient, Surd):
            quotient = quotient._lifted()
        return (quotient > 1) - (quotient < 1)

    def __eq__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    __hash__ = None

    # ==================== CONVERSION ====================

    def __float__(self) -> float:
        return self._approx

    def __bool__(self) -> bool:
        return True

    def __str__(self) -> str:
        parts = [] if self.coeff == 1 else [str(self.coeff)]
        for base, exp in self.powers:
            shown = str(base) if base.denominator == 1 else f"({base})"
            parts.append(f"{shown}^({exp})")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Surd({self})"


def make_surd(coeff: Fraction, powers) -> Union[Fraction, Surd]:
    """
    Normalize coeff * prod(base^exp) and return a Fraction when it is rational

    Args:
        coeff: positive rational factor
        powers: iterable of (base, exponent) pairs with positive rational bases

    Returns:
        Fraction or Surd with exponents reduced into (0, 1)
    """
    coeff = Fraction(coeff)
    merged: Dict[Fraction, Fraction] = {}
    for base, exp in powers:
        base, exp = Fraction(base), Fraction(exp)
        if base == 1 or exp == 0:
            continue
        merged[base] = merged.get(base, Fraction(0)) + exp
    kept = []
    for base in sorted(merged):
        exp = merged[base]
        whole = math.floor(exp)
        if whole:
            coeff *= base ** whole
            exp -= whole
        if exp == 0:
            continue
        # base^(p/q) is rational when base is a perfect q-th power
        root = exact_root(base, exp.denominator)
        if root is not None:
            coeff *= root ** exp.numerator
            continue
        kept.append((base, exp))
    if not kept:
        return coeff
    return Surd(coeff, tuple(kept))


def is_exact(x) -> bool:
    """True for rational realizations (int, Fraction, Surd)"""
    return not isinstance(x, (float, np.floating))


def nth_root(x, k: int):
    """
    k-th root of a nonnegative scalar

    Rational input gives a Fraction when the root is rational and a Surd
    otherwise; float input gives a float.
    """
    if k < 1:
        raise ValueError(f"root index must be positive, got {k}")
    if isinstance(x, Surd):
        return x.root(k)
    if not is_exact(x):
        return float(x) ** (1.0 / k)
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative input")
    if x == 0 or k == 1:
        return x
    root = exact_root(x, k)
    if root is not None:
        return root
    return make_surd(Fraction(1), ((x, Fraction(1, k)),))


def inverse(x):
    """Multiplicative inverse with 0 mapped to 0 (conjugation of a scalar)"""
    if x == 0:
        return 0.0 if not is_exact(x) else Fraction(0)
    if not is_exact(x):
        return 1.0 / float(x)
    if isinstance(x, Surd):
        return x.inverse()
    return 1 / Fraction(x)


def close(x, y, rel_tol: float = REL_TOL) -> bool:
    """Equality: exact for rational scalars, relative tolerance otherwise"""
    if is_exact(x) and is_exact(y):
        return x == y
    return math.isclose(float(x), float(y), rel_tol=rel_tol, abs_tol=0.0)


def at_least(x, y, rel_tol: float = REL_TOL) -> bool:
    """x >= y, allowing a relative slack in float mode"""
    return x >= y or close(x, y, rel_tol)


def to_scalar(value, arithmetic: Arithmetic = Arithmetic.RATIONAL):
    """Convert int / Fraction / float / str / Surd into the requested realization"""
    if isinstance(value, str):
        value = parse_scalar(value, arithmetic)
    if arithmetic == Arithmetic.FLOAT:
        return float(value)
    if isinstance(value, Surd):
        return value
    if isinstance(value, (float, np.floating)):
        return Fraction(float(value))
    return Fraction(value)


def parse_scalar(token: str, arithmetic: Arithmetic = Arithmetic.RATIONAL):
    """
    Parse "2", "0.5" or "1/3"

    Decimals and fractions are parsed exactly in rational mode.

    Raises:
        ValueError: token is not a number
    """
    text = token.strip()
    if not text:
        raise ValueError("empty value")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"cannot parse {token!r} as a number") from e
    if arithmetic == Arithmetic.FLOAT:
        return float(value)
    return value


def format_scalar(x) -> str:
    """String form used in reports: "1/3", "(3/2)^(1/3)" or a float repr"""
    if isinstance(x, Surd):
        return str(x)
    if not is_exact(x):
        return repr(float(x))
    return str(Fraction(x))
