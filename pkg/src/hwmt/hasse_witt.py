"""Hasse-Witt invariants as constant terms of f^(p-1) mod p.

The constant term of (sum_i c_i x^{w_i})^e is a sum over nonnegative
integer vectors a with sum(a) = e and sum_i a_i w_i = 0, each contributing
multinomial(e; a) * prod c_i^{a_i}.  Those vectors are lattice points of a
simplex slice of the kernel lattice of the exponent matrix; a depth-first
search with per-coordinate interval pruning enumerates them without ever
expanding f^(p-1).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Tuple, Union

from .errors import (
    BadDenominator,
    ExponentTooLarge,
    NotKernelPair,
    SingularMember,
)
from .families import FamilyTag, get_family, identify_family
from .hypergeometric import frac_mod, require_prime, truncated_pFq
from .pencil import LaurentPencil, LaurentPolynomial, build_vertex_pencil, specialize
from .polytope import LatticePolytope, is_kernel_pair, polar_dual


@dataclass(frozen=True)
class HWInvariant:
    prime: int
    value: int
    psi: Optional[Fraction] = None


@dataclass(frozen=True)
class PeriodCoefficients:
    """Integer Taylor coefficients b_n = constant term of (vertex sum)^n."""

    values: Tuple[int, ...]


def zero_sum_exponents(exponents, e):
    """Yield all nonnegative integer vectors a with sum(a) = e and
    sum_i a_i * exponents[i] = 0.

    The search fixes a_i coordinate by coordinate; a branch survives only
    while each lattice coordinate of the running sum can still be pulled
    back to zero by the remaining budget.
    """
    k = len(exponents)
    if k == 0:
        return
    n = len(exponents[0])
    # per-coordinate min/max over the suffix of terms i..k-1
    lo_suffix = [None] * k
    hi_suffix = [None] * k
    lo_suffix[k - 1] = list(exponents[k - 1])
    hi_suffix[k - 1] = list(exponents[k - 1])
    for i in range(k - 2, -1, -1):
        lo_suffix[i] = [
            min(exponents[i][c], lo_suffix[i + 1][c]) for c in range(n)
        ]
        hi_suffix[i] = [
            max(exponents[i][c], hi_suffix[i + 1][c]) for c in range(n)
        ]

    a = [0] * k
    partial = [0] * n

    def rec(i, budget):
        if i == k - 1:
            for c in range(n):
                if partial[c] + budget * exponents[i][c] != 0:
                    return
            a[i] = budget
            yield tuple(a)
            a[i] = 0
            return
        w = exponents[i]
        for ai in range(budget + 1):
            rem = budget - ai
            ok = True
            for c in range(n):
                s = partial[c] + ai * w[c]
                if s + rem * lo_suffix[i + 1][c] > 0 or s + rem * hi_suffix[i + 1][c] < 0:
                    ok = False
                    break
            if ok:
                a[i] = ai
                for c in range(n):
                    partial[c] += ai * w[c]
                yield from rec(i + 1, rem)
                for c in range(n):
                    partial[c] -= ai * w[c]
                a[i] = 0

    yield from rec(0, e)


def _order_origin_last(terms):
    """Reorder (exponent, coeff) pairs so a zero exponent, if present, comes
    last; the DFS then dumps leftover budget there in one step."""
    tagged = sorted(terms, key=lambda t: all(x == 0 for x in t[0]))
    return tagged


def constant_term_power(f: LaurentPolynomial, e: int, p: int) -> int:
    """Constant term of f^e reduced mod p.

    Requires e < p so every multinomial(e; a) is a unit ratio of factorials
    below p.
    """
    require_prime(p)
    if e >= p:
        raise ExponentTooLarge(f"exponent {e} must be < p = {p}")
    terms = _order_origin_last(f.terms)
    coeffs = []
    for _, c in terms:
        coeffs.append(frac_mod(c, p))
    exps = [t[0] for t in terms]
    fact = [1] * (e + 1)
    for i in range(1, e + 1):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [pow(x, -1, p) for x in fact]
    total = 0
    for a in zero_sum_exponents(exps, e):
        contrib = fact[e]
        for ai, c in zip(a, coeffs):
            contrib = contrib * inv_fact[ai] % p
            if ai:
                contrib = contrib * pow(c, ai, p) % p
        total = (total + contrib) % p
    return total


def _resolve_pencil(family_or_pencil) -> Tuple[LaurentPencil, Optional[FamilyTag]]:
    if isinstance(family_or_pencil, LaurentPencil):
        return family_or_pencil, None
    if isinstance(family_or_pencil, LatticePolytope):
        return build_vertex_pencil(family_or_pencil), None
    fam = get_family(family_or_pencil)
    return fam.vertex_pencil(), fam


def hasse_witt(family_or_pencil: Union[str, FamilyTag, LaurentPencil, LatticePolytope],
               psi, p: int) -> HWInvariant:
    """Hasse-Witt invariant of the pencil member at psi over F_p.

    Accepts a named family, a FamilyTag, a polytope (its vertex pencil is
    built), or an explicit LaurentPencil.  Family members known to be
    singular at psi are rejected; for a bare pencil no smoothness check is
    possible.
    """
    psi = Fraction(psi)
    pencil, fam = _resolve_pencil(family_or_pencil)
    if fam is not None and not fam.is_smooth(psi):
        raise SingularMember(f"{fam.name} member at psi = {psi} is singular")
    if psi.denominator % p == 0:
        raise BadDenominator(f"psi = {psi} has denominator divisible by {p}")
    value = constant_term_power(specialize(pencil, psi), p - 1, p)
    return HWInvariant(p, value, psi)


def hasse_witt_polynomial(pencil_or_family, p: int) -> Tuple[int, ...]:
    """Coefficients (ascending in psi) of the symbolic Hasse-Witt invariant.

    The result always has length p, i.e. degree <= p-1 in psi: the origin
    monomial can absorb at most the whole exponent budget.
    """
    require_prime(p)
    pencil, _ = _resolve_pencil(pencil_or_family)
    e = p - 1
    origin = (0,) * pencil.n
    vertex_terms = [
        (t.exponent, frac_mod(t.const, p))
        for t in pencil.terms
        if t.exponent != origin
    ]
    exps = [t[0] for t in vertex_terms]
    fact = [1] * (e + 1)
    for i in range(1, e + 1):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [pow(x, -1, p) for x in fact]
    coeffs = [0] * p
    for total in range(e + 1):
        # budget 'total' on the vertex monomials, the rest on psi * x^0
        for a in zero_sum_exponents(exps, total):
            contrib = fact[e] * inv_fact[e - total] % p
            for ai, (_, c) in zip(a, vertex_terms):
                contrib = contrib * inv_fact[ai] % p
                if ai:
                    contrib = contrib * pow(c, ai, p) % p
            coeffs[e - total] = (coeffs[e - total] + contrib) % p
    return tuple(coeffs)


def period_coefficients(delta: LatticePolytope, n_max: int) -> PeriodCoefficients:
    """b_n = constant term of (sum of dual-vertex monomials)^n, exactly.

    These are the integer Taylor coefficients of the holomorphic-period
    expansion at the large complex structure limit.
    """
    exps = list(polar_dual(delta).vertices)
    values = []
    for n in range(n_max + 1):
        total = 0
        for a in zero_sum_exponents(exps, n):
            contrib = factorial(n)
            for ai in a:
                contrib //= factorial(ai)
            total += contrib
        values.append(total)
    return PeriodCoefficients(tuple(values))


def key_lemma_check(delta: LatticePolytope, gamma: LatticePolytope,
                    psi, p: int) -> Tuple[bool, HWInvariant, HWInvariant]:
    """Compare Hasse-Witt invariants of the two vertex pencils at (psi, p).

    The hypotheses are enforced: (delta, gamma) must be a kernel pair whose
    polar duals are also a kernel pair.  A False first component would be a
    counterexample -- equality is a theorem for such pairs.
    """
    ok, _ = is_kernel_pair(delta, gamma)
    if not ok:
        raise NotKernelPair("polytopes are not a kernel pair")
    ok, _ = is_kernel_pair(polar_dual(delta), polar_dual(gamma))
    if not ok:
        raise NotKernelPair("polar duals are not a kernel pair")
    hw_d = hasse_witt(build_vertex_pencil(delta), psi, p)
    hw_g = hasse_witt(build_vertex_pencil(gamma), psi, p)
    return hw_d.value == hw_g.value, hw_d, hw_g


def truncation_relation_check(delta_or_family, psi, p: int) -> bool:
    """Verify HW_p == sum_n binom(p-1, n) b_n psi^(p-1-n) mod p, and, when
    the polytope belongs to a named family, that HW_p matches the family's
    truncated hypergeometric value."""
    psi = Fraction(psi)
    if isinstance(delta_or_family, LatticePolytope):
        fam = identify_family(delta_or_family)
        delta = delta_or_family
    else:
        fam = get_family(delta_or_family)
        delta = fam.polytope
    if fam is not None and not fam.is_smooth(psi):
        raise SingularMember(f"member at psi = {psi} is singular")
    hw = hasse_witt(build_vertex_pencil(delta), psi, p)
    b = period_coefficients(delta, p - 1).values
    psi_mod = frac_mod(psi, p)
    rhs = 0
    for n in range(p):
        rhs = (rhs + comb(p - 1, n) * (b[n] % p) * pow(psi_mod, p - 1 - n, p)) % p
    if hw.value != rhs:
        return False
    if fam is not None:
        if hw.value != truncated_pFq(fam.hg, psi, p).value:
            return False
    return True
