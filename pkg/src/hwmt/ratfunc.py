"""Dense univariate polynomials and rational functions over Q.

Minimal exact arithmetic for the Picard-Fuchs pipeline: everything is a
Fraction, rational functions are kept gcd-reduced with monic denominator,
and the only fancy operations are power substitution t -> t^(1/k), variable
scaling, and inversion t -> 1/t.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import NotAPowerFunction


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Polynomial sum(coeffs[i] * t^i); coefficients are Fractions."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _trim(Fraction(c) for c in self.coeffs)
        )

    @staticmethod
    def of(*coeffs) -> "Poly":
        return Poly(tuple(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(
            tuple(
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(n)
            )
        )

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.coeffs
        while len(rem) >= len(d) and any(rem):
            if rem[-1] == 0:
                rem.pop()
                continue
            shift = len(rem) - len(d)
            c = rem[-1] / d[-1]
            q[shift] = c
            for i, b in enumerate(d):
                rem[shift + i] -= c * b
            rem.pop()
        return Poly(tuple(q)), Poly(tuple(rem))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a * (1 / a.coeffs[-1])  # monic

    def __call__(self, x):
        x = Fraction(x)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def scale_variable(self, c) -> "Poly":
        """p(c*t)."""
        c = Fraction(c)
        return Poly(tuple(a * c**i for i, a in enumerate(self.coeffs)))

    def power_substitute(self, k: int) -> "Poly":
        """Write p as q(t^k); NotAPowerFunction if impossible."""
        if any(c and i % k for i, c in enumerate(self.coeffs)):
            raise NotAPowerFunction(f"{self} is not a polynomial in t^{k}")
        return Poly(tuple(self.coeffs[i] for i in range(0, len(self.coeffs), k)))

    def reversed_to(self, degree: int) -> "Poly":
        """t^degree * p(1/t); degree must be >= deg p."""
        assert degree >= self.degree
        out = [Fraction(0)] * (degree + 1)
        for i, c in enumerate(self.coeffs):
            out[degree - i] = c
        return Poly(tuple(out))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                parts.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(parts)


ZERO = Poly(())
ONE = Poly.of(1)
T = Poly.of(0, 1)


@dataclass(frozen=True)
class RatFunc:
    """Reduced rational function num/den with monic denominator."""

    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.coeffs[-1]
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def of(num, den=None) -> "RatFunc":
        if isinstance(num, (int, Fraction)):
            num = Poly.of(num)
        if den is None:
            den = ONE
        elif isinstance(den, (int, Fraction)):
            den = Poly.of(den)
        return RatFunc(num, den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def has_pole_at(self, x) -> bool:
        return self.den(x) == 0 and not self.is_zero()

    def scale_variable(self, c) -> "RatFunc":
        return RatFunc(self.num.scale_variable(c), self.den.scale_variable(c))

    def power_substitute(self, k: int) -> "RatFunc":
        return RatFunc(self.num.power_substitute(k), self.den.power_substitute(k))

    def invert_variable(self) -> "RatFunc":
        """f(1/t) as a reduced rational function of t."""
        if self.is_zero():
            return self
        d = max(self.num.degree, self.den.degree)
        return RatFunc(self.num.reversed_to(d), self.den.reversed_to(d))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _coerce(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x, ONE)
    return RatFunc.of(Fraction(x))


RF_ZERO = RatFunc(ZERO, ONE)
RF_ONE = RatFunc(ONE, ONE)
