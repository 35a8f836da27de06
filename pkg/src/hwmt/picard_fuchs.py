"""From Picard-Fuchs ODE to hypergeometric parameters.

The pipeline: companion matrix -> diagonal psi-power gauge (regular
singular points at 0 and infinity) -> variable substitution z = psi^k ->
rescaling z = c*lambda (singularity to lambda = 1) -> residue matrices at
0 and infinity -> rational eigenvalues -> parameter extraction -> MUM
normalization.  Every step is exact; every intermediate matrix is kept so
the published displays can be compared entry for entry.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import (
    IrrationalEigenvalue,
    NoZeroExponent,
    NotMUMAtInfinity,
    PoleAtInfinity,
    PoleAtZero,
    UnknownFamily,
    ZeroLeadingCoefficient,
)
from .families import get_family
from .hypergeometric import HypergeometricData
from .ratfunc import ONE, Poly, RatFunc, RF_ONE, RF_ZERO

Matrix = Tuple[Tuple[RatFunc, ...], ...]


@dataclass(frozen=True)
class FuchsianSystem:
    """First-order system dy/dt = M y (raw) or dy/dt = (1/t) M y (scaled)."""

    size: int
    matrix: Matrix
    form: str = "raw"  # raw | scaled
    var: str = "psi"

    def entry_strings(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(
            tuple(str(e).replace("t", self.var) for e in row)
            for row in self.matrix
        )


@dataclass(frozen=True)
class ExponentData:
    exponents_at_zero: Tuple[Fraction, ...]
    exponents_at_infinity: Tuple[Fraction, ...]


def _to_ratfunc(coeff) -> RatFunc:
    if isinstance(coeff, RatFunc):
        return coeff
    num, den = coeff
    return RatFunc(Poly.of(*num), Poly.of(*den))


def companion_matrix(ode_coeffs) -> FuchsianSystem:
    """Companion system of the monic ODE F^(n) + c_{n-1} F^(n-1) + ... +
    c_0 F = 0; coefficients are RatFuncs or (num_coeffs, den_coeffs) pairs."""
    coeffs = [_to_ratfunc(c) for c in ode_coeffs]
    n = len(coeffs)
    if n == 0:
        raise ZeroLeadingCoefficient("empty coefficient list")
    rows = []
    for i in range(n - 1):
        rows.append(tuple(RF_ONE if j == i + 1 else RF_ZERO for j in range(n)))
    rows.append(tuple(-c for c in coeffs))
    return FuchsianSystem(n, tuple(rows), "raw", "psi")


def gauge_shear(system: FuchsianSystem) -> FuchsianSystem:
    """Gauge by the diagonal of psi-powers diag(1, psi, ..., psi^(n-1)).

    With u = diag(psi^i) y the system becomes du/dpsi = (1/psi) M u where
    M_ij = psi^(1+i-j) A_ij + delta_ij * i; the result has regular singular
    points at 0 and infinity.
    """
    assert system.form == "raw"
    n = system.size
    a = system.matrix
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = 1 + i - j
            if e >= 0:
                entry = a[i][j] * RatFunc(Poly((Fraction(0),) * e + (Fraction(1),)), ONE)
            else:
                entry = a[i][j] / RatFunc(Poly((Fraction(0),) * (-e) + (Fraction(1),)), ONE)
            if i == j:
                entry = entry + RatFunc.of(i)
            row.append(entry)
        rows.append(tuple(row))
    return FuchsianSystem(n, tuple(rows), "scaled", "psi")


def substitute_power(system: FuchsianSystem, k: int) -> FuchsianSystem:
    """Rewrite a scaled system whose matrix depends only on psi^k in the
    variable z = psi^k; dz/z = k dpsi/psi divides the matrix by k."""
    assert system.form == "scaled"
    if k == 1:
        return system
    rows = tuple(
        tuple(e.power_substitute(k) * Fraction(1, k) for e in row)
        for row in system.matrix
    )
    return FuchsianSystem(system.size, rows, "scaled", "z")


def rescale(system: FuchsianSystem, c) -> FuchsianSystem:
    """Substitute z = c * lambda, moving the singularity at z = c to 1."""
    assert system.form == "scaled"
    c = Fraction(c)
    if c == 0:
        raise ZeroDivisionError("rescale constant must be nonzero")
    rows = tuple(
        tuple(e.scale_variable(c) for e in row) for row in system.matrix
    )
    return FuchsianSystem(system.size, rows, "scaled", "lambda")


def invert_system(system: FuchsianSystem) -> FuchsianSystem:
    """The system at 1/t: lambda = 1/zeta turns (1/lambda) M(lambda) into
    (1/zeta) (-M(1/zeta))."""
    assert system.form == "scaled"
    rows = tuple(
        tuple(-(e.invert_variable()) for e in row) for row in system.matrix
    )
    return FuchsianSystem(system.size, rows, "scaled", "zeta")


def residue_at_zero(system: FuchsianSystem):
    """M(0) for a scaled system regular at 0."""
    assert system.form == "scaled"
    for row in system.matrix:
        for e in row:
            if e.has_pole_at(0):
                raise PoleAtZero(f"entry {e} has a pole at 0")
    return tuple(tuple(e(0) for e in row) for row in system.matrix)


def residue_at_infinity(system: FuchsianSystem):
    """Residue at infinity: -M(1/zeta) evaluated at zeta = 0."""
    inverted = invert_system(system)
    for row in inverted.matrix:
        for e in row:
            if e.has_pole_at(0):
                raise PoleAtInfinity(f"entry {e} has a pole at infinity")
    return tuple(tuple(e(0) for e in row) for row in inverted.matrix)


def residue_at_point(system: FuchsianSystem, a):
    """Residue of (1/t) M(t) dt at a finite nonzero point a."""
    assert system.form == "scaled"
    a = Fraction(a)
    shift = RatFunc(Poly.of(-a, 1), ONE)
    out = []
    for row in system.matrix:
        new_row = []
        for e in row:
            g = e * shift
            new_row.append(g(a) / a)
        out.append(tuple(new_row))
    return tuple(out)


def _char_poly(matrix) -> Poly:
    """det(x I - A) for a matrix of Fractions, as a Poly in x."""
    n = len(matrix)
    entries = [
        [Poly.of(-matrix[i][j]) if i != j else Poly.of(-matrix[i][j], 1)
         for j in range(n)]
        for i in range(n)
    ]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total = Poly(())
        for k, c in enumerate(cols):
            minor = det(rows[1:], cols[:k] + cols[k + 1:])
            term = entries[rows[0]][c] * minor
            total = total + term if k % 2 == 0 else total - term
        return total

    return det(tuple(range(n)), tuple(range(n)))


def rational_eigenvalues(matrix) -> Tuple[Fraction, ...]:
    """All eigenvalues, found by the rational-root theorem, with
    multiplicity; IrrationalEigenvalue if any root is not rational."""
    chi = _char_poly(matrix)
    roots: List[Fraction] = []
    # factor out roots at zero first
    coeffs = list(chi.coeffs)
    while coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
        coeffs.pop(0)
    poly = Poly(tuple(coeffs))
    while poly.degree > 0:
        lcm = 1
        for c in poly.coeffs:
            lcm = lcm * c.denominator // __import__("math").gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in poly.coeffs]
        a0, an = abs(ints[0]), abs(ints[-1])
        root = None
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if poly(cand) == 0:
                        root = cand
                        break
                if root is not None:
                    break
            if root is not None:
                break
        if root is None:
            raise IrrationalEigenvalue(
                f"characteristic polynomial {chi} has an irrational factor"
            )
        roots.append(root)
        poly = poly.divmod(Poly.of(-root, 1))[0]
    return tuple(sorted(roots))


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [0]
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def extract_parameters(exponents: ExponentData,
                       argument=(Fraction(1), 1)) -> HypergeometricData:
    """Read pFq parameters off local exponents: upper parameters are the
    exponents at infinity; lower parameters are 1 - e for the exponents e
    at 0 other than one mandatory copy of 0."""
    at_zero = list(exponents.exponents_at_zero)
    if Fraction(0) not in at_zero:
        raise NoZeroExponent(f"no zero exponent among {at_zero}")
    at_zero.remove(Fraction(0))
    return HypergeometricData(
        tuple(exponents.exponents_at_infinity),
        tuple(1 - e for e in at_zero),
        argument,
    )


def mum_normalize(exponents: ExponentData, argument) -> HypergeometricData:
    """Invert the variable so monodromy at 0 is maximally unipotent.

    Requires all exponents at infinity equal (a single value mu); the new
    upper parameters are mu + (exponents at 0), all lower parameters are 1,
    and the argument (c, k) becomes c / psi^k.
    """
    mus = set(exponents.exponents_at_infinity)
    if len(mus) != 1:
        raise NotMUMAtInfinity(
            f"exponents at infinity {sorted(mus)} are not all equal"
        )
    mu = mus.pop()
    c, k = Fraction(argument[0]), int(argument[1])
    return HypergeometricData(
        tuple(e + mu for e in exponents.exponents_at_zero),
        (Fraction(1),) * (len(exponents.exponents_at_zero) - 1),
        (c, -k),
    )


@dataclass
class PipelineReport:
    """Everything analyze_family computes, step by step."""

    family: str
    companion: FuchsianSystem
    sheared: FuchsianSystem
    powered: FuchsianSystem
    rescaled: FuchsianSystem
    inverted: FuchsianSystem
    residue_zero: Tuple[Tuple[Fraction, ...], ...]
    residue_infinity: Tuple[Tuple[Fraction, ...], ...]
    exponents: ExponentData
    intermediate: HypergeometricData
    final: HypergeometricData
    mum_argument: Tuple[Fraction, int]
    notes: List[str] = field(default_factory=list)

    def as_dict(self) -> Dict:
        def mat(m):
            return [[str(x) for x in row] for row in m]

        return {
            "family": self.family,
            "companion": [list(r) for r in self.companion.entry_strings()],
            "sheared": [list(r) for r in self.sheared.entry_strings()],
            "powered": [list(r) for r in self.powered.entry_strings()],
            "rescaled": [list(r) for r in self.rescaled.entry_strings()],
            "inverted": [list(r) for r in self.inverted.entry_strings()],
            "residue_zero": mat(self.residue_zero),
            "residue_infinity": mat(self.residue_infinity),
            "exponents_at_zero": [str(e) for e in self.exponents.exponents_at_zero],
            "exponents_at_infinity": [
                str(e) for e in self.exponents.exponents_at_infinity
            ],
            "intermediate": str(self.intermediate),
            "final": str(self.final),
            "mum_argument": [str(self.mum_argument[0]), self.mum_argument[1]],
            "notes": list(self.notes),
        }


def analyze_family(family) -> PipelineReport:
    """Run the whole parameter-extraction pipeline on a stored family."""
    fam = get_family(family)
    if fam.pf_ode is None:
        raise UnknownFamily(
            f"family {fam.name} has no stored Picard-Fuchs equation"
        )
    k, c = fam.substitution_k, fam.rescale_c
    companion = companion_matrix(fam.pf_ode)
    sheared = gauge_shear(companion)
    powered = substitute_power(sheared, k)
    rescaled = rescale(powered, c)
    inverted = invert_system(rescaled)
    res0 = residue_at_zero(rescaled)
    res_inf = residue_at_infinity(rescaled)
    exponents = ExponentData(
        rational_eigenvalues(res0), rational_eigenvalues(res_inf)
    )
    intermediate = extract_parameters(exponents, (1 / c, k))
    final = mum_normalize(exponents, (c, k))
    notes = []
    if fam.mum_note:
        notes.append(fam.mum_note)
    if fam.intermediate_note:
        notes.append(fam.intermediate_note)
    if final.argument != fam.hg.argument:
        # keep the family's printed orientation as the reported argument
        final = HypergeometricData(
            final.numerators, final.denominators, fam.hg.argument
        )
        notes.append(
            "argument reported in the printed orientation "
            f"{fam.hg.argument_str()}; the generic inversion gives "
            f"{mum_normalize(exponents, (c, k)).argument_str()}"
        )
    return PipelineReport(
        family=fam.name,
        companion=companion,
        sheared=sheared,
        powered=powered,
        rescaled=rescaled,
        inverted=inverted,
        residue_zero=res0,
        residue_infinity=res_inf,
        exponents=exponents,
        intermediate=intermediate,
        final=final,
        mum_argument=(c, -k),
        notes=notes,
    )
