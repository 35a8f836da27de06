"""Truncated generalized hypergeometric series mod p.

The truncation [.]^(p-1) keeps terms of degree 0 through p-1 inclusive;
that is the length forced by the degree-(p-1) Hasse-Witt polynomial.
Rational parameters and arguments are reduced mod p through modular
inverses of their denominators.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import (
    BadDenominator,
    NotPrime,
    PsiNotInvertible,
    TruncationGuard,
    UnknownFamily,
)


def is_prime(n) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def require_prime(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def frac_mod(x, p: int) -> int:
    """Image of a rational in F_p; BadDenominator if p divides its
    denominator."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise BadDenominator(f"denominator of {x} vanishes mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass(frozen=True)
class HypergeometricData:
    """Parameters of a pFq together with an argument of the form c * psi^e."""

    numerators: Tuple[Fraction, ...]
    denominators: Tuple[Fraction, ...]
    argument: Tuple[Fraction, int]

    def __post_init__(self):
        nums = tuple(sorted(Fraction(a) for a in self.numerators))
        dens = tuple(sorted(Fraction(b) for b in self.denominators))
        object.__setattr__(self, "numerators", nums)
        object.__setattr__(self, "denominators", dens)
        c, e = self.argument
        object.__setattr__(self, "argument", (Fraction(c), int(e)))
        if len(dens) != len(nums) - 1:
            raise ValueError("pFq shape requires one fewer lower parameter")
        for b in dens:
            if b.denominator == 1 and b <= 0:
                raise ValueError(f"lower parameter {b} is a nonpositive integer")

    def argument_at(self, psi) -> Fraction:
        c, e = self.argument
        return c * Fraction(psi) ** e

    def argument_str(self) -> str:
        c, e = self.argument
        if e == 0:
            return str(c)
        pw = "psi" if abs(e) == 1 else f"psi^{abs(e)}"
        if e > 0:
            return f"{pw}/{1/c}" if c.numerator == 1 else f"{c}*{pw}"
        return f"{c}/{pw}"

    def __str__(self):
        p, q = len(self.numerators), len(self.denominators)
        nums = ",".join(str(a) for a in self.numerators)
        dens = ",".join(str(b) for b in self.denominators)
        return f"{p}F{q}({nums};{dens} | {self.argument_str()})"


@dataclass(frozen=True)
class TruncatedValue:
    prime: int
    value: int
    terms_used: int


def pochhammer_mod_p(a, n: int, p: int) -> int:
    """(a)_n = a (a+1) ... (a+n-1) mod p for rational a = r/s with p not
    dividing s."""
    require_prime(p)
    a = Fraction(a)
    r, s = a.numerator, a.denominator
    if s % p == 0:
        raise BadDenominator(f"parameter {a} has denominator divisible by {p}")
    prod = 1
    for j in range(n):
        prod = prod * (r + j * s) % p
    return prod * pow(s, -n, p) % p


def _argument_mod_p(data: HypergeometricData, psi, p: int) -> int:
    c, e = data.argument
    psi = Fraction(psi)
    z_c = frac_mod(c, p)
    if e >= 0:
        return z_c * pow(frac_mod(psi, p), e, p) % p
    psi_mod = frac_mod(psi, p)
    if psi_mod == 0:
        raise PsiNotInvertible(
            f"argument needs psi^{e} but psi = {psi} vanishes mod {p}"
        )
    return z_c * pow(psi_mod, e, p) % p


def _series_term(data: HypergeometricData, n: int, z: int, p: int,
                 factorials) -> int:
    # internal guard: beyond degree p-1 the n! in the denominator is not
    # invertible, so the term must never be evaluated silently
    if n >= p:
        raise TruncationGuard(f"term {n} requested beyond truncation at {p - 1}")
    num = 1
    for a in data.numerators:
        num = num * pochhammer_mod_p(a, n, p) % p
    den = factorials[n]
    for b in data.denominators:
        den = den * pochhammer_mod_p(b, n, p) % p
    if den == 0:
        raise BadDenominator(
            f"lower-parameter Pochhammer vanishes mod {p} at term {n}"
        )
    return num * pow(den, -1, p) * pow(z, n, p) % p


def truncated_pFq(data: HypergeometricData, psi, p: int) -> TruncatedValue:
    """Sum of the first p terms (degrees 0..p-1) of pFq at c*psi^e, mod p."""
    require_prime(p)
    z = _argument_mod_p(data, psi, p)
    factorials = [1] * p
    for i in range(1, p):
        factorials[i] = factorials[i - 1] * i % p
    total = 0
    for n in range(p):
        if n > 0 and z == 0:
            break
        total = (total + _series_term(data, n, z, p, factorials)) % p
    return TruncatedValue(p, total, p)


def pfq_taylor(numerators, denominators, nterms: int):
    """Exact rational Taylor coefficients of pFq(...; z) through degree
    nterms - 1; used for identity checks over Q."""
    nums = [Fraction(a) for a in numerators]
    dens = [Fraction(b) for b in denominators]
    coeffs = []
    term = Fraction(1)
    for n in range(nterms):
        coeffs.append(term)
        ratio = Fraction(1)
        for a in nums:
            ratio *= a + n
        for b in dens:
            ratio /= b + n
        ratio /= n + 1
        term *= ratio
    return coeffs


def series_square(coeffs):
    """Cauchy square of a truncated power series."""
    n = len(coeffs)
    return [
        sum(coeffs[i] * coeffs[k - i] for i in range(k + 1)) for k in range(n)
    ]


def clausen_check(family, psi, p: int) -> bool:
    """Does the truncated square of the family's 2F1 equal its truncated
    3F2 mod p?  Mismatches are honest outputs: the identity between
    truncations holds only for certain primes."""
    from .families import get_family

    fam = get_family(family)
    if fam.clausen_2f1 is None:
        raise UnknownFamily(f"family {fam.name} has no Clausen pairing")
    small = HypergeometricData(fam.clausen_2f1, (Fraction(1),), fam.hg.argument)
    lhs = truncated_pFq(small, psi, p).value
    rhs = truncated_pFq(fam.hg, psi, p).value
    return lhs * lhs % p == rhs


def quadratic_residue_check(value: int, p: int) -> str:
    """Euler-criterion classification: 'residue', 'nonresidue', or 'zero'."""
    require_prime(p)
    v = value % p
    if v == 0:
        return "zero"
    return "residue" if pow(v, (p - 1) // 2, p) == 1 else "nonresidue"
