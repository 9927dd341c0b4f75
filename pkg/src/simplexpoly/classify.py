"""Reducibility decisions with verifiable factorization certificates.

Every reducible input yields a certificate (unit, factor powers, rule) whose
product is re-checked exactly against the input at construction time;
irreducible inputs yield a distinct verdict naming the rule that applies.
Characteristic 2 is handled symbolically: parameters are integer literals
interpreted through the unique ring map into a characteristic-2 field, the
certificate factors are integer lifts, and the product check compares
coefficients modulo 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .field import (
    Char2Token,
    FieldElement,
    FieldSpec,
    RATIONAL,
    element_to_text,
    is_square,
    primitive_cube_root,
)
from .family import CayleyMengerRing, GParams, InternalCheckError, build_g, cayley_menger
from .poly import Polynomial, poly_to_text


class Claim(Enum):
    """Irreducibility status attached to a certificate factor."""

    IRREDUCIBLE = "irreducible"
    UNVERIFIED = "unverified"


@dataclass(frozen=True)
class ClassificationRule:
    """Which case fired, with the hypotheses that were actually verified."""

    tag: str
    conditions: Mapping[str, str]


@dataclass(frozen=True)
class Factor:
    polynomial: Polynomial
    multiplicity: int
    claim: Claim


@dataclass(frozen=True)
class FactorizationCertificate:
    """unit * prod(factor^multiplicity) reconstructs the input exactly."""

    input: Polynomial
    unit: FieldElement
    factors: Tuple[Factor, ...]
    rule: ClassificationRule


@dataclass(frozen=True)
class Irreducible:
    input: Optional[Polynomial]
    rule: ClassificationRule


@dataclass(frozen=True)
class ZeroPolynomial:
    """The input collapses to the zero polynomial; factorization is undefined."""

    rule: ClassificationRule


Verdict = Union[FactorizationCertificate, Irreducible, ZeroPolynomial]


@dataclass(frozen=True)
class Char2GParams:
    """Family parameters over an unspecified characteristic-2 field.

    a and t are integer literals; only their images mod 2 are meaningful.
    """

    m: int
    a: int
    t: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ValueError(f"the family is only classified for m >= 3, got m={self.m}")


def _char_str(field: Union[FieldSpec, Char2Token]) -> str:
    return str(field.characteristic())


def _congruent_mod_2(p: Polynomial, q: Polynomial) -> bool:
    """Coefficientwise congruence mod 2 for rational polynomials."""
    diff = p - q
    for c in diff.terms.values():
        frac: Fraction = c.value
        if frac.denominator % 2 == 0 or frac.numerator % 2 != 0:
            return False
    return True


def verify_certificate(cert: FactorizationCertificate) -> bool:
    """Re-multiply the certificate and compare with its input exactly."""
    product = Polynomial.constant(cert.input.field, cert.input.arity, cert.unit)
    for f in cert.factors:
        product = product * f.polynomial**f.multiplicity
    if cert.rule.conditions.get("char") == "2":
        return _congruent_mod_2(product, cert.input)
    return product == cert.input


def _certify(
    input_poly: Polynomial,
    unit: FieldElement,
    factors: Sequence[Tuple[Polynomial, int, Claim]],
    rule: ClassificationRule,
) -> FactorizationCertificate:
    """Normalize factors monic (unit absorbs the scaling) and product-check."""
    normalized: List[Factor] = []
    for poly, mult, claim in factors:
        lc = poly.leading_coefficient()
        if not lc.is_one():
            poly = poly.scale(lc.inverse())
            unit = unit * lc**mult
        normalized.append(Factor(poly, mult, claim))
    cert = FactorizationCertificate(input_poly, unit, tuple(normalized), rule)
    if not verify_certificate(cert):
        raise InternalCheckError(f"certificate product check failed for rule {rule.tag}")
    return cert


# -- quadratics ------------------------------------------------------------------


def factor_quadratic(a: FieldElement, b: FieldElement, c: FieldElement) -> Verdict:
    """Factor a x^2 + b x + c over its field by the discriminant criterion.

    Reducible exactly when b^2 - 4ac is a square; equal roots are reported
    as one factor of multiplicity 2.
    """
    if a.spec != b.spec or a.spec != c.spec:
        raise ValueError("quadratic coefficients must share one field")
    if a.is_zero():
        raise ValueError("not a quadratic: leading coefficient is zero")
    spec = a.spec
    x = Polynomial.variable(spec, 1, 0)
    quad = x.scale(a) * x + x.scale(b) + Polynomial.constant(spec, 1, c)
    disc = b * b - a * c * 4
    delta = is_square(disc)
    base = {
        "char": _char_str(spec),
        "discriminant": element_to_text(disc),
    }
    if delta is None:
        return Irreducible(
            quad,
            ClassificationRule("QuadraticDiscriminant", {**base, "square": "false"}),
        )
    rule = ClassificationRule("QuadraticDiscriminant", {**base, "square": "true"})
    alpha = (-b + delta) / (a * 2)
    beta = (-b - delta) / (a * 2)
    root_factor = lambda r: x - Polynomial.constant(spec, 1, r)
    if alpha == beta:
        factors = [(root_factor(alpha), 2, Claim.IRREDUCIBLE)]
    else:
        factors = [
            (root_factor(alpha), 1, Claim.IRREDUCIBLE),
            (root_factor(beta), 1, Claim.IRREDUCIBLE),
        ]
    return _certify(quad, a, factors, rule)


def _diagonal_poly(field: FieldSpec, coeffs: Sequence[FieldElement]) -> Polynomial:
    m = len(coeffs) - 1
    p = Polynomial.constant(field, m, coeffs[0])
    for j in range(1, m + 1):
        p = p + Polynomial.variable(field, m, j - 1, 2).scale(coeffs[j])
    return p


def classify_diagonal_quadratic(
    field: Union[FieldSpec, Char2Token],
    coeffs: Sequence[Union[FieldElement, int, Fraction, str]],
) -> Verdict:
    """Classify c_0 + c_1 x_1^2 + ... + c_m x_m^2 with all c_j nonzero (j >= 1).

    After normalizing by c_m, the form is reducible exactly when every
    -c_j/c_m is a square and either m = 1, or m = 2 with zero constant term
    (or the field has characteristic 2, where it collapses to a square).
    """
    if len(coeffs) < 2:
        raise ValueError("need a constant term and at least one square coefficient")
    m = len(coeffs) - 1

    if isinstance(field, Char2Token):
        ints = [int(c) for c in coeffs]
        if any(c % 2 == 0 for c in ints[1:]):
            raise ValueError("a square coefficient vanishes in characteristic 2")
        t0 = ints[0] % 2
        lift = _diagonal_poly(RATIONAL, [RATIONAL.from_int(t0)] + [RATIONAL.one()] * m)
        linear = Polynomial.constant(RATIONAL, m, t0)
        for j in range(m):
            linear = linear + Polynomial.variable(RATIONAL, m, j)
        rule = ClassificationRule(
            "DiagonalQuadratic", {"char": "2", "case": "1", "m": str(m)}
        )
        return _certify(lift, RATIONAL.one(), [(linear, 2, Claim.IRREDUCIBLE)], rule)

    cs = [field.coerce(c) for c in coeffs]
    if any(c.is_zero() for c in cs[1:]):
        raise ValueError("square coefficients must be nonzero")
    poly = _diagonal_poly(field, cs)
    inv = cs[m].inverse()
    ratios = [c * inv for c in cs]  # t_j = c_j / c_m
    roots = [is_square(-ratios[j]) for j in range(m)]
    all_square = all(r is not None for r in roots)
    base = {"char": _char_str(field), "m": str(m)}

    if all_square and m == 1:
        s = roots[0]
        x1 = Polynomial.variable(field, 1, 0)
        s_const = Polynomial.constant(field, 1, s)
        rule = ClassificationRule(
            "DiagonalQuadratic", {**base, "case": "2", "neg_t0_square": "true"}
        )
        if s.is_zero():
            factors = [(x1, 2, Claim.IRREDUCIBLE)]
        else:
            factors = [(x1 - s_const, 1, Claim.IRREDUCIBLE), (x1 + s_const, 1, Claim.IRREDUCIBLE)]
        return _certify(poly, cs[1], factors, rule)

    if all_square and m == 2 and cs[0].is_zero():
        s = roots[1]
        x1 = Polynomial.variable(field, 2, 0)
        x2 = Polynomial.variable(field, 2, 1)
        rule = ClassificationRule(
            "DiagonalQuadratic",
            {**base, "case": "3", "t0": "0", "neg_t1_square": "true"},
        )
        factors = [
            (x2 - x1.scale(s), 1, Claim.IRREDUCIBLE),
            (x2 + x1.scale(s), 1, Claim.IRREDUCIBLE),
        ]
        return _certify(poly, cs[2], factors, rule)

    if not all_square:
        reason = "some -c_j/c_m is a non-square"
    elif m == 2:
        reason = "nonzero constant term with m = 2"
    else:
        reason = "more than two square terms"
    rule = ClassificationRule(
        "DiagonalQuadratic", {**base, "case": "irreducible", "reason": reason}
    )
    return Irreducible(poly, rule)


# -- the quartic family ------------------------------------------------------------


def _classify_g_char2(params: Char2GParams) -> Verdict:
    a, t, m = params.a % 2, params.t % 2, params.m
    if t == 1:
        rule = ClassificationRule(
            "Char2Collapse", {"char": "2", "t": "1", "m": str(m)}
        )
        return ZeroPolynomial(rule)
    lift = build_g(GParams.of(RATIONAL, m, a, t))
    linear = Polynomial.constant(RATIONAL, m, a)
    for j in range(m):
        linear = linear + Polynomial.variable(RATIONAL, m, j)
    rule = ClassificationRule(
        "Char2Collapse", {"char": "2", "t": str(t), "a": str(a), "m": str(m)}
    )
    return _certify(lift, RATIONAL.one(), [(linear, 4, Claim.IRREDUCIBLE)], rule)


def classify_g(params: Union[GParams, Char2GParams]) -> Verdict:
    """Complete reducibility decision for the quartic family.

    Decision table (characteristic not 2, parameters compared through the
    canonical image of integers in the field):

    * t = 0: the square of the irreducible quadric a^2 + sum x_i^2;
    * a != 0: irreducible for every t != 0;
    * a = 0, (m, t) = (3, 2): four linear factors;
    * a = 0, (m, t) = (3, 3): two quadratic factors when the field has a
      primitive cube root of unity, irreducible otherwise;
    * all other (m, t) with a = 0: irreducible.

    Over characteristic 2 the polynomial collapses to
    (1 - t)(a + x_1 + ... + x_m)^4, the zero polynomial when t = 1.
    """
    if isinstance(params, Char2GParams):
        return _classify_g_char2(params)

    field, m = params.field, params.m
    g = build_g(params)
    base = {"char": _char_str(field), "m": str(m)}

    if params.t.is_zero():
        quadric = Polynomial.constant(field, m, params.a**2)
        for i in range(m):
            quadric = quadric + Polynomial.variable(field, m, i, 2)
        rule = ClassificationRule("TZeroSquare", {**base, "t": "0"})
        return _certify(g, field.one(), [(quadric, 2, Claim.IRREDUCIBLE)], rule)

    t_text = element_to_text(params.t)
    if not params.a.is_zero():
        rule = ClassificationRule(
            "IrreducibleInhomogeneous",
            {**base, "a": element_to_text(params.a), "t": t_text},
        )
        return Irreducible(g, rule)

    xs = [Polynomial.variable(field, m, i) for i in range(m)]
    if m == 3 and params.t == field.from_int(2):
        x, y, z = xs
        rule = ClassificationRule("HeronCase", {**base, "a": "0", "t": "2"})
        factors = [
            (x + y + z, 1, Claim.IRREDUCIBLE),
            (-x + y + z, 1, Claim.IRREDUCIBLE),
            (x - y + z, 1, Claim.IRREDUCIBLE),
            (x + y - z, 1, Claim.IRREDUCIBLE),
        ]
        return _certify(g, field.one(), factors, rule)

    if m == 3 and params.t == field.from_int(3):
        omega = primitive_cube_root(field)
        if omega is None:
            rule = ClassificationRule(
                "IrreducibleHomogeneous",
                {**base, "a": "0", "t": "3", "omega_exists": "false"},
            )
            return Irreducible(g, rule)
        x, y, z = xs
        omega2 = omega * omega
        rule = ClassificationRule(
            "OmegaCase",
            {**base, "a": "0", "t": "3", "omega": element_to_text(omega)},
        )
        factors = [
            (x**2 + y.scale(omega) * y + z.scale(omega2) * z, 1, Claim.IRREDUCIBLE),
            (x**2 + y.scale(omega2) * y + z.scale(omega) * z, 1, Claim.IRREDUCIBLE),
        ]
        return _certify(g, field.from_int(-2), factors, rule)

    rule = ClassificationRule(
        "IrreducibleHomogeneous", {**base, "a": "0", "t": t_text}
    )
    return Irreducible(g, rule)


def classify_cayley_menger(field: Union[FieldSpec, Char2Token], n: int) -> Verdict:
    """The Cayley-Menger determinant is reducible exactly when n = 2."""
    if isinstance(field, Char2Token):
        raise ValueError(
            "the Cayley-Menger classification assumes characteristic != 2"
        )
    if n < 2:
        raise ValueError(f"simplex dimension must be at least 2, got {n}")
    base = {"char": _char_str(field), "n": str(n)}
    if n >= 3:
        # the verdict holds for every n >= 3; the symbolic determinant is
        # attached only within the constructor's size guard
        poly = cayley_menger(n, field) if n <= 6 else None
        return Irreducible(poly, ClassificationRule("IrreducibleCayleyMenger", base))
    m = cayley_menger(n, field)
    ring = CayleyMengerRing(2)
    z = Polynomial.variable(field, 3, ring.position(1, 2))
    y = Polynomial.variable(field, 3, ring.position(1, 3))
    x = Polynomial.variable(field, 3, ring.position(2, 3))
    rule = ClassificationRule("HeronCayleyMenger", base)
    factors = [
        (x + y + z, 1, Claim.IRREDUCIBLE),
        (-x + y + z, 1, Claim.IRREDUCIBLE),
        (x - y + z, 1, Claim.IRREDUCIBLE),
        (x + y - z, 1, Claim.IRREDUCIBLE),
    ]
    return _certify(m, field.from_int(-1), factors, rule)


# -- reporting ---------------------------------------------------------------------


def verdict_to_json(
    verdict: Verdict, names: Optional[Sequence[str]] = None
) -> Dict[str, object]:
    """Machine-readable rendering shared by the CLI and the test suite."""
    if isinstance(verdict, ZeroPolynomial):
        return {
            "verdict": "zero-polynomial",
            "rule": verdict.rule.tag,
            "conditions": dict(verdict.rule.conditions),
        }
    if isinstance(verdict, Irreducible):
        out: Dict[str, object] = {
            "verdict": "irreducible",
            "rule": verdict.rule.tag,
            "conditions": dict(verdict.rule.conditions),
        }
        if verdict.input is not None:
            out["input"] = poly_to_text(verdict.input, names)
        return out
    return {
        "verdict": "reducible",
        "rule": verdict.rule.tag,
        "conditions": dict(verdict.rule.conditions),
        "input": poly_to_text(verdict.input, names),
        "unit": element_to_text(verdict.unit),
        "factors": [
            {
                "polynomial": poly_to_text(f.polynomial, names),
                "multiplicity": f.multiplicity,
                "claim": f.claim.value,
            }
            for f in verdict.factors
        ],
        "product_check": verify_certificate(verdict),
    }
