"""Vertex pencils as Laurent polynomials and homogeneous forms.

A vertex pencil sums one monomial per vertex of the polar dual polytope and
deforms by psi times the origin monomial.  The deformation parameter is
carried symbolically (each coefficient is a degree <= 1 polynomial in psi)
until specialization, so Hasse-Witt computations can produce polynomials
in psi.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import UnsupportedMonomial
from .polytope import LatticePolytope, lattice_points, polar_dual

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class LaurentTerm:
    """coefficient * x^exponent, coefficient = const + psi_coeff * psi."""

    exponent: Exponent
    const: Fraction
    psi_coeff: Fraction = Fraction(0)

    def coefficient_at(self, psi: Fraction) -> Fraction:
        return self.const + self.psi_coeff * psi


@dataclass(frozen=True)
class LaurentPencil:
    """One-parameter Laurent family: dual-vertex monomials plus psi * x^0."""

    n: int
    terms: Tuple[LaurentTerm, ...]
    psi_term_index: int

    def __post_init__(self):
        exps = [t.exponent for t in self.terms]
        assert len(set(exps)) == len(exps), "exponents must be distinct"
        origin = self.terms[self.psi_term_index]
        assert origin.exponent == (0,) * self.n and origin.psi_coeff != 0


@dataclass(frozen=True)
class LaurentPolynomial:
    """Specialized Laurent polynomial over Q (list of exponent/coefficient)."""

    n: int
    terms: Tuple[Tuple[Exponent, Fraction], ...]


@dataclass(frozen=True)
class HomogeneousForm:
    """Polynomial in generalized homogeneous coordinates.

    One variable per chosen lattice point v_j of Delta; the monomial
    attached to a dual point m has exponent <v_j, m> + 1 in variable j.
    """

    variables: Tuple[Exponent, ...]
    monomials: Tuple[Tuple[Exponent, Fraction], ...]


def build_vertex_pencil(delta: LatticePolytope) -> LaurentPencil:
    """Vertex pencil of delta: coefficient 1 on each polar-dual vertex
    monomial, psi on the origin monomial."""
    dual = polar_dual(delta)
    terms = [LaurentTerm(v, Fraction(1)) for v in dual.vertices]
    terms.append(LaurentTerm((0,) * delta.dim, Fraction(0), Fraction(1)))
    return LaurentPencil(delta.dim, tuple(terms), len(terms) - 1)


def specialize(pencil: LaurentPencil, psi) -> LaurentPolynomial:
    """Substitute a rational value for psi; zero coefficients are dropped."""
    psi = Fraction(psi)
    terms = []
    for t in pencil.terms:
        c = t.coefficient_at(psi)
        if c:
            terms.append((t.exponent, c))
    return LaurentPolynomial(pencil.n, tuple(terms))


def homogeneous_form(
    delta: LatticePolytope,
    coeffs: Dict[Exponent, Fraction],
    points: Optional[Tuple[Exponent, ...]] = None,
) -> HomogeneousForm:
    """Homogeneous form of a coefficient vector supported on the dual.

    `points` selects which lattice points of delta index the variables; by
    default every non-origin lattice point is used.  Restricting to the
    vertices reproduces the familiar (weighted) projective equations for
    simplex families.
    """
    origin = (0,) * delta.dim
    if points is None:
        points = tuple(v for v in lattice_points(delta) if v != origin)
    support = set(lattice_points(polar_dual(delta)))
    monomials = []
    for m, c in coeffs.items():
        m = tuple(m)
        if m not in support:
            raise UnsupportedMonomial(f"monomial point {m} lies outside the dual")
        exps = tuple(
            sum(v[i] * m[i] for i in range(delta.dim)) + 1 for v in points
        )
        assert all(e >= 0 for e in exps)  # guaranteed by reflexivity
        monomials.append((exps, Fraction(c)))
    return HomogeneousForm(tuple(points), tuple(monomials))


def is_smooth_member(family, psi) -> bool:
    """False exactly when the family's hypergeometric argument equals 1 at
    psi, or psi = 0 (the singular fibers of the pencil)."""
    from .families import get_family

    return get_family(family).is_smooth(Fraction(psi))
