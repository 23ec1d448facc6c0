"""
src/symmetra/algebra/autgroup.py

Automorphisms of the Laurent quantum plane, SL(2,Z) |x unit pairs:

    Auto(sigma=[[k,l],[m,n]], alpha, beta):  x -> alpha x^k y^m,  y -> beta x^l y^n

compose(phi1, phi2) is phi1 o phi2 (phi2 applied first). Units act on
monomials without touching exponents; SL(2,Z) twists unit pairs by
twist_units(). All group-level arithmetic stays on Units, so it does not
depend on a ScalarField.
"""
import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Tuple

import numpy as np
import sympy
from sympy import QQ, Poly, Symbol

from symmetra.algebra.qalgebra import LineElement, PlaneElement, monomial_pow
from symmetra.algebra.scalars import Unit
from symmetra.core.errors import NotHyperbolic, ParseError

logger = logging.getLogger(__name__)

Matrix2 = Tuple[Tuple[int, int], Tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))
MINUS_IDENTITY: Matrix2 = ((-1, 0), (0, -1))


# --- Integral 2x2 matrices ---

def as_matrix(entries) -> Matrix2:
    """Accepts [[k,l],[m,n]], (k,l,m,n) or the text 'k,l,m,n'."""
    if isinstance(entries, str):
        try:
            entries = [int(v) for v in entries.replace(" ", "").split(",")]
        except ValueError as e:
            raise ParseError(f"Malformed matrix {entries!r}") from e
    arr = np.array(entries, dtype=object).reshape(-1)
    if arr.size != 4:
        raise ParseError(f"A 2x2 matrix needs four entries, got {entries!r}")
    k, l, m, n = (int(v) for v in arr)
    return ((k, l), (m, n))


def mat_mul(a: Matrix2, b: Matrix2) -> Matrix2:
    prod = np.array(a, dtype=object) @ np.array(b, dtype=object)
    return as_matrix(prod)


def det(a: Matrix2) -> int:
    (k, l), (m, n) = a
    return k * n - l * m


def trace(a: Matrix2) -> int:
    return a[0][0] + a[1][1]


def mat_inv(a: Matrix2) -> Matrix2:
    """Inverse of a unimodular integral matrix (adjugate up to the sign of det)."""
    d = det(a)
    if d not in (1, -1):
        raise ValueError(f"Matrix {a} is not invertible over Z")
    (k, l), (m, n) = a
    return ((n * d, -l * d), (-m * d, k * d))


def mat_sub(a: Matrix2, b: Matrix2) -> Matrix2:
    return as_matrix(np.array(a, dtype=object) - np.array(b, dtype=object))


def mat_power_iterated(a: Matrix2, n: int) -> Matrix2:
    base = a if n >= 0 else mat_inv(a)
    result = IDENTITY
    for _ in range(abs(n)):
        result = mat_mul(result, base)
    return result


def sl2z_matrices(bound: int) -> List[Matrix2]:
    """All determinant-one matrices with entries in [-bound, bound]."""
    found = []
    values = range(-bound, bound + 1)
    for k, l, m, n in itertools.product(values, repeat=4):
        if k * n - l * m == 1:
            found.append(((k, l), (m, n)))
    return found


def twist_units(units: Tuple[Unit, Unit], a: Matrix2) -> Tuple[Unit, Unit]:
    """(alpha, beta) . A = (alpha^A11 beta^A21, alpha^A12 beta^A22), a right action."""
    alpha, beta = units
    (a11, a12), (a21, a22) = a
    return (alpha ** a11 * beta ** a21, alpha ** a12 * beta ** a22)


# --- Automorphisms of the plane ---

@dataclass(frozen=True)
class Auto:
    sigma: Matrix2
    alpha: Unit = dc_field(default_factory=Unit.one)
    beta: Unit = dc_field(default_factory=Unit.one)

    def __post_init__(self):
        object.__setattr__(self, "sigma", as_matrix(self.sigma))
        object.__setattr__(self, "alpha", Unit.parse(self.alpha))
        object.__setattr__(self, "beta", Unit.parse(self.beta))
        if det(self.sigma) != 1:
            raise ValueError(f"sigma must have determinant 1, got {self.sigma}")

    @classmethod
    def identity(cls) -> 'Auto':
        return cls(IDENTITY)

    @classmethod
    def units_only(cls, alpha, beta) -> 'Auto':
        return cls(IDENTITY, alpha, beta)

    @classmethod
    def from_matrix(cls, sigma) -> 'Auto':
        return cls(as_matrix(sigma))

    @property
    def units(self) -> Tuple[Unit, Unit]:
        return (self.alpha, self.beta)

    @property
    def is_identity(self) -> bool:
        return self.sigma == IDENTITY and self.alpha.is_one and self.beta.is_one

    def __str__(self):
        (k, l), (m, n) = self.sigma
        return f"Auto([[{k},{l}],[{m},{n}]], alpha={self.alpha}, beta={self.beta})"

    def to_json(self) -> dict:
        return {"sigma": [list(r) for r in self.sigma], "alpha": str(self.alpha), "beta": str(self.beta)}

    @classmethod
    def from_json(cls, doc: dict) -> 'Auto':
        try:
            return cls(as_matrix(doc["sigma"]), Unit.parse(doc.get("alpha", "1")), Unit.parse(doc.get("beta", "1")))
        except (KeyError, TypeError) as e:
            raise ParseError(f"Malformed automorphism JSON: {e}") from e


def monomial_exponents(phi: Auto, i: int, j: int) -> Tuple[int, int]:
    (k, l), (m, n) = phi.sigma
    return (k * i + l * j, m * i + n * j)


def monomial_unit(phi: Auto, i: int, j: int) -> Unit:
    """
    The unit c with phi(x^i y^j) = c x^{ki+lj} y^{mi+nj}:
    alpha^i beta^j q^{i(i-1)km/2 + j(j-1)ln/2 + (mi)(lj)}.
    """
    (k, l), (m, n) = phi.sigma
    twist = i * (i - 1) // 2 * k * m + j * (j - 1) // 2 * l * n + (m * i) * (l * j)
    return phi.alpha ** i * phi.beta ** j * Unit.q_power(twist)


def monomial_image(phi: Auto, i: int, j: int, field) -> PlaneElement:
    """phi(x^i y^j) computed in the plane, as the product of powers of phi(x), phi(y)."""
    k, m = phi.sigma[0][0], phi.sigma[1][0]
    l, n = phi.sigma[0][1], phi.sigma[1][1]
    img_x = PlaneElement.monomial(field, k, m, field.unit(phi.alpha))
    img_y = PlaneElement.monomial(field, l, n, field.unit(phi.beta))
    return monomial_pow(img_x, i) * monomial_pow(img_y, j)


def apply(phi: Auto, p: PlaneElement) -> PlaneElement:
    """Algebra automorphism of the plane; linear extension of the monomial formula."""
    field = p.field
    out = {}
    for (i, j), c in p.terms.items():
        key = monomial_exponents(phi, i, j)
        out[key] = out.get(key, field.zero) + c * field.unit(monomial_unit(phi, i, j))
    return PlaneElement(field, out)


def compose(phi1: Auto, phi2: Auto) -> Auto:
    """phi1 o phi2."""
    (k2, l2), (m2, n2) = phi2.sigma
    alpha = phi2.alpha * monomial_unit(phi1, k2, m2)
    beta = phi2.beta * monomial_unit(phi1, l2, n2)
    return Auto(mat_mul(phi1.sigma, phi2.sigma), alpha, beta)


def inverse(phi: Auto) -> Auto:
    sigma = mat_inv(phi.sigma)
    (k, l), (m, n) = sigma
    alpha = monomial_unit(phi, k, m).inverse()
    beta = monomial_unit(phi, l, n).inverse()
    return Auto(sigma, alpha, beta)


def power(phi: Auto, n: int) -> Auto:
    base = phi if n >= 0 else inverse(phi)
    result = Auto.identity()
    for _ in range(abs(n)):
        result = compose(result, base)
    return result


def order(phi: Auto, max_order: int = 24) -> Optional[int]:
    """Smallest n <= max_order with phi^n = id (structural comparison), else None."""
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    current = phi
    for n in range(1, max_order + 1):
        if current.is_identity:
            return n
        current = compose(current, phi)
    logger.debug("order: no finite order up to %d for %s", max_order, phi)
    return None


def fo_conjugator(sigma, alpha: Unit, beta: Unit) -> Tuple[Unit, Unit]:
    """
    For tr(sigma) = 1, (sigma - I) is unimodular and the unit pair
    (alpha', beta') = (alpha, beta) . (sigma - I)^-1 satisfies
    D' o phi_sigma o D'^-1 = Auto(sigma, alpha, beta) with D' = units_only(alpha', beta').
    """
    sigma = as_matrix(sigma)
    if trace(sigma) != 1:
        raise ValueError(f"fo_conjugator needs trace 1, got {sigma}")
    shifted = mat_inv(mat_sub(sigma, IDENTITY))
    return twist_units((Unit.parse(alpha), Unit.parse(beta)), shifted)


# --- Automorphisms of the line ---

@dataclass(frozen=True)
class LineAuto:
    """z -> gamma z^sign."""
    sign: int
    gamma: Unit = dc_field(default_factory=Unit.one)

    def __post_init__(self):
        object.__setattr__(self, "gamma", Unit.parse(self.gamma))
        if self.sign not in (1, -1):
            raise ValueError(f"LineAuto sign must be +-1, got {self.sign}")

    @classmethod
    def identity(cls) -> 'LineAuto':
        return cls(1)

    def monomial_unit(self, p: int) -> Unit:
        return self.gamma ** p

    def apply(self, a: LineElement) -> LineElement:
        field = a.field
        out = {}
        for p, c in a.terms.items():
            out[self.sign * p] = out.get(self.sign * p, field.zero) + c * field.unit(self.gamma ** p)
        return LineElement(field, out)

    def compose(self, other: 'LineAuto') -> 'LineAuto':
        """self o other."""
        return LineAuto(self.sign * other.sign, other.gamma * self.gamma ** other.sign)

    def inverse(self) -> 'LineAuto':
        return LineAuto(self.sign, self.gamma ** (-self.sign))

    def to_json(self) -> dict:
        return {"sign": self.sign, "gamma": str(self.gamma)}

    @classmethod
    def from_json(cls, doc: dict) -> 'LineAuto':
        try:
            return cls(int(doc["sign"]), Unit.parse(doc.get("gamma", "1")))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed line automorphism JSON: {e}") from e


# --- sigma^N in Q[lambda]/(lambda^2 - t lambda + 1) ---

_LAMBDA = Symbol("lambda")


class QuadraticElement:
    """Element of Q[lambda]/(lambda^2 - trace*lambda + 1), kept reduced."""

    __slots__ = ("poly", "modulus")

    def __init__(self, poly, modulus: Poly):
        self.modulus = modulus
        if not isinstance(poly, Poly):
            poly = Poly(poly, _LAMBDA, domain=QQ)
        self.poly = poly.rem(modulus)

    @classmethod
    def constant(cls, value, modulus: Poly) -> 'QuadraticElement':
        return cls(Poly(sympy.Rational(value), _LAMBDA, domain=QQ), modulus)

    @classmethod
    def generator(cls, modulus: Poly) -> 'QuadraticElement':
        return cls(Poly(_LAMBDA, _LAMBDA, domain=QQ), modulus)

    def _lift(self, other) -> 'QuadraticElement':
        if isinstance(other, QuadraticElement):
            return other
        return QuadraticElement.constant(other, self.modulus)

    def __add__(self, other):
        return QuadraticElement(self.poly + self._lift(other).poly, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.poly, self.modulus)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return QuadraticElement(self.poly * self._lift(other).poly, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> 'QuadraticElement':
        if self.poly.is_zero:
            raise ZeroDivisionError("Inverse of zero in the quadratic ring")
        return QuadraticElement(self.poly.invert(self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        result = QuadraticElement.constant(1, self.modulus)
        for _ in range(abs(int(n))):
            result = result * base
        return result

    def __eq__(self, other):
        if not isinstance(other, QuadraticElement):
            other = self._lift(other)
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def rational_value(self) -> sympy.Rational:
        """The value when the lambda-coefficient vanishes."""
        coeffs = self.poly.all_coeffs()
        if len(coeffs) > 1 and coeffs[0] != 0:
            raise ValueError(f"{self} is not rational")
        return sympy.Rational(coeffs[-1]) if coeffs else sympy.Rational(0)

    def __str__(self):
        return str(self.poly.as_expr())


@dataclass(frozen=True)
class SigmaPowerForm:
    """sigma^N = lambda^N P + lambda^-N (I - P), P = (sigma - lambda^-1 I)/(lambda - lambda^-1)."""
    sigma: Matrix2
    lam: QuadraticElement
    a: QuadraticElement
    b: QuadraticElement
    c: QuadraticElement
    d: QuadraticElement

    @classmethod
    def of(cls, sigma) -> 'SigmaPowerForm':
        sigma = as_matrix(sigma)
        if det(sigma) != 1:
            raise ValueError(f"sigma must have determinant 1, got {sigma}")
        t = trace(sigma)
        if abs(t) <= 2:
            raise NotHyperbolic(f"|trace| must exceed 2, got trace {t}")
        modulus = Poly(_LAMBDA ** 2 - t * _LAMBDA + 1, _LAMBDA, domain=QQ)
        lam = QuadraticElement.generator(modulus)
        lam_inv = lam.inverse()
        gap = (lam - lam_inv).inverse()
        (k, l), (m, n) = sigma
        a = (lam_inv * -1 + k) * gap
        b = gap * l
        c = gap * m
        d = (lam_inv * -1 + n) * gap
        return cls(sigma, lam, a, b, c, d)

    def check_identities(self) -> bool:
        """d = 1 - a and c = a(1 - a)/b hold in the quadratic ring."""
        return self.d == 1 - self.a and self.c == self.a * (1 - self.a) / self.b

    def entries(self, N: int) -> Matrix2:
        up, down = self.lam ** N, self.lam ** (-N)
        a_n = self.a * up + (1 - self.a) * down
        b_n = self.b * (up - down)
        c_n = self.c * (up - down)
        d_n = (1 - self.a) * up + self.a * down
        values = [v.rational_value() for v in (a_n, b_n, c_n, d_n)]
        if any(not v.is_Integer for v in values):
            raise ArithmeticError(f"sigma^{N} produced non-integral entries {values}")
        return as_matrix([int(v) for v in values])


def sigma_power(sigma, N: int) -> Matrix2:
    """sigma^N for hyperbolic sigma (|tr| > 2) from the eigenvalue closed form."""
    return SigmaPowerForm.of(sigma).entries(int(N))
