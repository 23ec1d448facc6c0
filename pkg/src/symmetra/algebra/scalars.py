"""
src/symmetra/algebra/scalars.py

The coefficient field. A ScalarField is the explicit context every element
carries: in exact mode it wraps a sympy field of rational functions over QQ
in a fixed ordered list of indeterminates (q first, graded-lex order); in
numeric mode each indeterminate is specialised to a rational number, so
arithmetic still happens exactly over QQ and tolerances only enter
eval_numeric().

Scalars are the raw sympy domain elements (FracElement in exact mode,
QQ elements in numeric mode). Units are field-independent invertible
monomials c * q^e1 * t^e2 * ... with a rational c.
"""
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from sympy import QQ, Matrix, Symbol, factorint
from sympy.parsing.sympy_parser import parse_expr, standard_transformations
from sympy.polys.fields import field as frac_field
from sympy.polys.orderings import grlex

from symmetra.core.config import DEFAULT_INDETERMINATES
from symmetra.core.errors import (
    ConfigError,
    DegenerateRatio,
    DivisionByZero,
    NumericDenominatorVanishes,
    ParseError,
    RootOfUnityQ,
)

Scalar = Any


def to_rational(value: Union[int, str, Any]):
    """Converts an int, a 'p/q' string or a sympy Rational to a QQ element."""
    if isinstance(value, str):
        text = value.strip()
        try:
            value = sympy.Rational(text)
        except (TypeError, ValueError, SyntaxError) as e:
            raise ParseError(f"Not a rational number: {text!r}") from e
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise ParseError(f"Not a rational number: {value}")
        return QQ.from_sympy(value)
    return QQ.convert(value)


def format_rational(value) -> str:
    return str(QQ.to_sympy(value))


# --- Units ---

_FACTOR_RE = re.compile(r"^([A-Za-z_]\w*)(?:\^(-?\d+))?$")
_RATIONAL_RE = re.compile(r"^\d+(?:/\d+)?$")


@dataclass(frozen=True)
class Unit:
    """
    An invertible scalar c * prod(name^exp). `powers` is sorted by name and
    holds no zero exponents, so dataclass equality is structural equality.
    """
    coeff: Any
    powers: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        if not self.coeff:
            raise ValueError("A Unit needs a non-zero coefficient")

    @classmethod
    def make(cls, coeff=1, powers: Optional[Dict[str, int]] = None) -> 'Unit':
        cleaned = tuple(sorted((n, int(e)) for n, e in (powers or {}).items() if e != 0))
        return cls(to_rational(coeff), cleaned)

    @classmethod
    def one(cls) -> 'Unit':
        return cls.make(1)

    @classmethod
    def of(cls, name: str, exp: int = 1) -> 'Unit':
        return cls.make(1, {name: exp})

    @classmethod
    def q_power(cls, exp: int) -> 'Unit':
        return cls.of("q", exp)

    @classmethod
    def parse(cls, text: Union[str, int, 'Unit']) -> 'Unit':
        """Parses '2*q^-1*t', '-q^2', '7/5' or '1'."""
        if isinstance(text, Unit):
            return text
        if isinstance(text, int):
            return cls.make(text)
        source = str(text).replace("**", "^").replace(" ", "")
        if not source:
            raise ParseError("Empty unit")
        sign = 1
        if source.startswith("-"):
            sign, source = -1, source[1:]
        coeff = QQ(sign)
        powers: Dict[str, int] = {}
        for factor in source.split("*"):
            if _RATIONAL_RE.match(factor):
                coeff *= to_rational(factor)
                continue
            match = _FACTOR_RE.match(factor)
            if match is None:
                raise ParseError(f"Malformed unit factor {factor!r} in {text!r}")
            name, exp = match.group(1), int(match.group(2) or 1)
            powers[name] = powers.get(name, 0) + exp
        if not coeff:
            raise ParseError(f"A unit cannot be zero: {text!r}")
        return cls.make(coeff, powers)

    def exponent(self, name: str) -> int:
        return dict(self.powers).get(name, 0)

    def names(self) -> List[str]:
        return [n for n, _ in self.powers]

    @property
    def is_one(self) -> bool:
        return self.coeff == 1 and not self.powers

    def __mul__(self, other: 'Unit') -> 'Unit':
        merged = dict(self.powers)
        for n, e in other.powers:
            merged[n] = merged.get(n, 0) + e
        return Unit.make(self.coeff * other.coeff, merged)

    def __pow__(self, n: int) -> 'Unit':
        n = int(n)
        return Unit.make(self.coeff ** n, {name: e * n for name, e in self.powers})

    def inverse(self) -> 'Unit':
        return self ** -1

    def __truediv__(self, other: 'Unit') -> 'Unit':
        return self * other.inverse()

    def __str__(self) -> str:
        factors = [n if e == 1 else f"{n}^{e}" for n, e in self.powers]
        if not factors:
            return format_rational(self.coeff)
        if self.coeff == 1:
            return "*".join(factors)
        if self.coeff == -1:
            return "-" + "*".join(factors)
        return "*".join([format_rational(self.coeff)] + factors)

    def __repr__(self):
        return f"Unit({self})"


def _lattice_row(u: Unit, keys: Sequence[Any]) -> List[int]:
    coords: Dict[Any, int] = dict(u.powers)
    num, den = int(abs(u.coeff.numerator)), int(u.coeff.denominator)
    for p, e in factorint(num).items():
        coords[p] = coords.get(p, 0) + e
    for p, e in factorint(den).items():
        coords[p] = coords.get(p, 0) - e
    return [coords.get(k, 0) for k in keys]


def multiplicatively_independent(*units: Unit) -> bool:
    """
    True when no non-trivial product of integer powers of `units` is a root
    of unity, i.e. their exponent vectors over (indeterminates and primes of
    the coefficients) have full rank. For two units this is the genericity
    condition alpha^m != beta^n for non-zero m, n (and rules out +-1).
    """
    keys: List[Any] = []
    for u in units:
        keys.extend(n for n in u.names() if n not in keys)
        for c in (int(abs(u.coeff.numerator)), int(u.coeff.denominator)):
            keys.extend(p for p in factorint(c) if p not in keys)
    if not keys:
        return False
    rows = Matrix([_lattice_row(u, keys) for u in units])
    return rows.rank() == len(units)


# --- The field ---

class ScalarField:
    """
    Field context for scalars. Build with ScalarField.exact(...) or
    ScalarField.numeric(...).
    """

    def __init__(self, mode: str, names: Sequence[str], values: Optional[Dict[str, Any]] = None,
                 tolerance: float = 1e-9, guard_bound: int = 64):
        names = tuple(names)
        if not names or names[0] != "q":
            raise ConfigError(f"'q' must be the first indeterminate, got {list(names)}")
        if len(set(names)) != len(names):
            raise ConfigError(f"Duplicate indeterminates in {list(names)}")
        self.mode = mode
        self.names = names
        self.tolerance = tolerance
        self.guard_bound = guard_bound
        self._symbols = {n: Symbol(n) for n in names}

        if mode == "exact":
            K, *gens = frac_field(",".join(names), QQ, grlex)
            self._K = K
            self._gens = dict(zip(names, gens))
            self.values: Dict[str, Any] = {}
            self.one = K.one
            self.zero = K.zero
        elif mode == "numeric":
            self._K = QQ
            self.values = {n: to_rational(v) for n, v in (values or {}).items()}
            unknown = set(self.values) - set(names)
            if unknown:
                raise ConfigError(f"Values given for unknown indeterminates {sorted(unknown)}")
            if "q" not in self.values:
                raise ConfigError("Numeric mode needs a value for q")
            self._gens = dict(self.values)
            self.one = QQ.one
            self.zero = QQ.zero
            check_not_root_of_unity(complex(QQ.to_sympy(self.values["q"])), guard_bound, tolerance)
        else:
            raise ConfigError(f"Unknown scalar mode {mode!r}")

    @classmethod
    def exact(cls, names: Sequence[str] = DEFAULT_INDETERMINATES) -> 'ScalarField':
        return cls("exact", names)

    @classmethod
    def numeric(cls, values: Dict[str, Any], names: Sequence[str] = DEFAULT_INDETERMINATES,
                tolerance: float = 1e-9, guard_bound: int = 64) -> 'ScalarField':
        return cls("numeric", names, values, tolerance, guard_bound)

    @classmethod
    def from_config(cls, config) -> 'ScalarField':
        """The field a JobConfig asks for; a rejected q becomes a ConfigError."""
        if config.mode == "exact":
            return cls.exact(config.indeterminates)
        values = {"q": config.q, **config.values}
        try:
            return cls.numeric(values, config.indeterminates, tolerance=config.tolerance,
                               guard_bound=config.guard_bound)
        except RootOfUnityQ as exc:
            raise ConfigError(f"q = {config.q} is rejected: {exc}") from exc

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    # --- Construction ---

    def gen(self, name: str) -> Scalar:
        if name not in self._gens:
            if name in self.names:
                raise ConfigError(f"Indeterminate {name!r} has no value in numeric mode")
            raise ConfigError(f"Unknown indeterminate {name!r}")
        return self._gens[name]

    @property
    def q(self) -> Scalar:
        return self.gen("q")

    def q_pow(self, n: int) -> Scalar:
        return self.q ** int(n)

    def convert(self, value) -> Scalar:
        """Coerces ints, rationals, Units and own scalars into the field."""
        if isinstance(value, Unit):
            return self.unit(value)
        if self.is_exact:
            if isinstance(value, type(self.one)) and value.field == self._K:
                return value
            return self.one * to_rational(value)
        return to_rational(value)

    def unit(self, u: Unit) -> Scalar:
        result = self.one * u.coeff
        for name, exp in u.powers:
            result = result * self.gen(name) ** exp
        return result

    # --- Arithmetic helpers ---

    def is_zero(self, s: Scalar) -> bool:
        return not s

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        try:
            return a / b
        except ZeroDivisionError as e:
            raise DivisionByZero(f"Division of {self.format(a)} by zero") from e

    def inv(self, a: Scalar) -> Scalar:
        return self.div(self.one, a)

    def geom_ratio(self, gamma, p: int) -> Scalar:
        """(gamma^p - 1)/(gamma - 1), exactly; 0 at p = 0."""
        g = self.convert(gamma)
        if g == self.one:
            raise DegenerateRatio("geom_ratio is undefined at gamma = 1")
        return self.div(g ** int(p) - self.one, g - self.one)

    # --- Text ---

    def parse(self, text: Union[str, int]) -> Scalar:
        if isinstance(text, int):
            return self.convert(text)
        source = str(text).strip().replace("^", "**")
        if not source:
            raise ParseError("Empty scalar")
        try:
            expr = parse_expr(source, local_dict=dict(self._symbols),
                              transformations=standard_transformations)
        except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
            raise ParseError(f"Malformed scalar {text!r}: {e}") from e
        return self.from_sympy(expr)

    def from_sympy(self, expr) -> Scalar:
        expr = sympy.sympify(expr)
        if expr.has(sympy.zoo, sympy.nan, sympy.oo):
            raise DivisionByZero(f"Scalar expression {expr} divides by zero")
        stray = {str(s) for s in expr.free_symbols} - set(self.names)
        if stray:
            raise ParseError(f"Unknown indeterminates {sorted(stray)} in {expr}")
        if self.is_exact:
            try:
                return self._K.from_expr(expr)
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"Not a rational function: {expr}") from e
        subs = {self._symbols[n]: QQ.to_sympy(v) for n, v in self.values.items()}
        missing = {str(s) for s in expr.free_symbols} - set(self.values)
        if missing:
            raise ConfigError(f"Indeterminates {sorted(missing)} have no value in numeric mode")
        value = expr.subs(subs) if subs else expr
        if value.has(sympy.zoo, sympy.nan):
            raise DivisionByZero(f"Scalar expression {expr} divides by zero at {self.describe()}")
        return to_rational(value)

    def format(self, s: Scalar) -> str:
        """Canonical text: 'numer' or '(numer)/(denom)' with '^' powers."""
        if not self.is_exact:
            return format_rational(s)
        numer = str(s.numer).replace("**", "^")
        if s.denom == s.denom.ring.one:
            return numer
        denom = str(s.denom).replace("**", "^")
        return f"({numer})/({denom})"

    def describe(self) -> str:
        if self.is_exact:
            return f"QQ({', '.join(self.names)})"
        return ", ".join(f"{n}={format_rational(v)}" for n, v in sorted(self.values.items()))

    # --- Numeric evaluation ---

    def eval_numeric(self, s: Scalar, point: Optional[Dict[str, complex]] = None) -> complex:
        """
        Evaluates a scalar at a complex point (name -> value). The value of q
        must pass the root-of-unity guard and the denominator must stay above
        the tolerance. A numeric field is already specialised, so a point may
        only repeat its values.
        """
        fixed = {n: complex(QQ.to_sympy(v)) for n, v in self.values.items()}
        if point is None:
            point = fixed
        elif not self.is_exact:
            for n, v in point.items():
                if n not in fixed or abs(complex(v) - fixed[n]) > self.tolerance:
                    raise ConfigError(f"Point value {n}={v} disagrees with the numeric field "
                                      f"{self.describe()}")
            point = fixed
        if "q" not in point:
            raise ConfigError("eval_numeric needs a value for q")
        check_not_root_of_unity(complex(point["q"]), self.guard_bound, self.tolerance)
        if not self.is_exact:
            return complex(QQ.to_sympy(s))
        numer = self._eval_poly(s.numer, point)
        denom = self._eval_poly(s.denom, point)
        if abs(denom) <= self.tolerance:
            raise NumericDenominatorVanishes(f"Denominator of {self.format(s)} vanishes at {point}")
        return numer / denom

    def _eval_poly(self, poly, point: Dict[str, complex]) -> complex:
        values = []
        for n in self.names:
            values.append(complex(point[n]) if n in point else None)
        total = 0j
        for monom, coeff in poly.terms():
            factors = []
            for v, e in zip(values, monom):
                if e == 0:
                    continue
                if v is None:
                    raise ConfigError(f"eval_numeric: no value for an indeterminate of {poly}")
                factors.append(v ** e)
            total += complex(QQ.to_sympy(coeff)) * complex(np.prod(factors) if factors else 1)
        return total

    # --- Serialization ---

    def to_json(self) -> dict:
        doc = {"mode": self.mode, "indeterminates": list(self.names)}
        if not self.is_exact:
            doc["values"] = {n: format_rational(v) for n, v in sorted(self.values.items())}
        return doc

    @classmethod
    def from_json(cls, doc: dict, tolerance: float = 1e-9, guard_bound: int = 64) -> 'ScalarField':
        try:
            return cls(doc["mode"], doc["indeterminates"], doc.get("values"), tolerance, guard_bound)
        except KeyError as e:
            raise ParseError(f"Field block is missing {e}") from e

    def __eq__(self, other):
        if not isinstance(other, ScalarField):
            return NotImplemented
        return (self.mode, self.names, self.values) == (other.mode, other.names, other.values)

    def __hash__(self):
        return hash((self.mode, self.names, tuple(sorted(self.values.items()))))

    def __repr__(self):
        return f"ScalarField({self.mode}: {self.describe()})"


def check_not_root_of_unity(q: complex, bound: int, tolerance: float):
    """Raises RootOfUnityQ if |q| = 1 and q^n = 1 for some n <= bound."""
    if abs(abs(q) - 1.0) > tolerance:
        return
    power = 1 + 0j
    for n in range(1, bound + 1):
        power *= q
        if abs(power - 1) <= tolerance:
            raise RootOfUnityQ(f"q = {q} is a root of unity of order {n}")
