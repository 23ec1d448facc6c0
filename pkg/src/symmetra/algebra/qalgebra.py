"""
src/symmetra/algebra/qalgebra.py

Normal-ordered arithmetic in the Laurent quantum plane C_q[x^{+-1}, y^{+-1}]
(yx = qxy, every x-power written left of every y-power) and in the
commutative Laurent ring C[z^{+-1}].

Elements are sparse maps exponent -> non-zero scalar. The zero element is the
empty map; a zero coefficient is never stored, so equality is structural.
"""
from typing import Any, Dict, Iterable, List, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import implicit_multiplication, parse_expr, standard_transformations

from symmetra.algebra.scalars import Scalar, ScalarField
from symmetra.core.errors import NotAMonomial, NotAUnit, ParseError

_TRANSFORMS = standard_transformations + (implicit_multiplication,)


class _LaurentElement:
    """Shared linear structure of PlaneElement and LineElement."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: ScalarField, terms: Union[Dict, Iterable] = ()):
        self.field = field
        cleaned: Dict[Any, Scalar] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coef in items:
            key = self._check_key(key)
            total = cleaned.get(key, field.zero) + field.convert(coef)
            if total:
                cleaned[key] = total
            else:
                cleaned.pop(key, None)
        self.terms = cleaned
        self._hash = None

    @staticmethod
    def _check_key(key):
        raise NotImplementedError

    def _new(self, terms) -> '_LaurentElement':
        return type(self)(self.field, terms)

    # --- Vector space ---

    def __add__(self, other):
        other = self._coerce(other)
        merged = dict(self.terms)
        for key, coef in other.terms.items():
            merged[key] = merged.get(key, self.field.zero) + coef
        return self._new(merged)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s) -> '_LaurentElement':
        s = self.field.convert(s)
        if not s:
            return self._new({})
        return self._new({k: c * s for k, c in self.terms.items()})

    def __rmul__(self, other):
        # scalars only; element * element goes through __mul__
        return self.scale(other)

    def _coerce(self, other) -> '_LaurentElement':
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _LaurentElement):
            raise TypeError(f"Cannot combine {type(self).__name__} with {type(other).__name__}")
        return self._new({self._one_key(): other})

    @classmethod
    def _one_key(cls):
        raise NotImplementedError

    # --- Inspection ---

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List:
        return sorted(self.terms)

    def coefficient(self, key) -> Scalar:
        return self.terms.get(self._check_key(key), self.field.zero)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self) -> Tuple[Any, Scalar]:
        """The term with the largest exponent key."""
        if not self.terms:
            raise NotAMonomial("The zero element has no leading term")
        key = max(self.terms)
        return key, self.terms[key]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, _LaurentElement):
            return type(self) is type(other) and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self})"


# --- The quantum plane ---

class PlaneElement(_LaurentElement):
    """Sum of c_ij x^i y^j in normal order."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        i, j = key
        return (int(i), int(j))

    @classmethod
    def _one_key(cls):
        return (0, 0)

    # --- Constructors ---

    @classmethod
    def zero(cls, field: ScalarField) -> 'PlaneElement':
        return cls(field)

    @classmethod
    def one(cls, field: ScalarField) -> 'PlaneElement':
        return cls(field, {(0, 0): field.one})

    @classmethod
    def monomial(cls, field: ScalarField, i: int, j: int, coef=1) -> 'PlaneElement':
        return cls(field, {(i, j): coef})

    @classmethod
    def x(cls, field: ScalarField) -> 'PlaneElement':
        return cls.monomial(field, 1, 0)

    @classmethod
    def y(cls, field: ScalarField) -> 'PlaneElement':
        return cls.monomial(field, 0, 1)

    # --- Ring structure ---

    def __mul__(self, other):
        if not isinstance(other, PlaneElement):
            return self.scale(other)
        field = self.field
        q = field.q
        out: Dict[Tuple[int, int], Scalar] = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                # y^j x^k = q^{jk} x^k y^j
                coef = c * d * q ** (j * k) if j * k else c * d
                key = (i + k, j + l)
                out[key] = out.get(key, field.zero) + coef
        return PlaneElement(field, out)

    # --- Text and JSON ---

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in self.support():
            parts.append(f"({self.field.format(self.terms[(i, j)])}) * x^{i} y^{j}")
        return " + ".join(parts)

    def to_json(self) -> List[dict]:
        return [{"i": i, "j": j, "coef": self.field.format(self.terms[(i, j)])}
                for (i, j) in self.support()]

    @classmethod
    def from_json(cls, field: ScalarField, doc: List[dict]) -> 'PlaneElement':
        try:
            return cls(field, [((t["i"], t["j"]), field.parse(t["coef"])) for t in doc])
        except (KeyError, TypeError) as e:
            raise ParseError(f"Malformed plane element JSON: {e}") from e

    @classmethod
    def parse(cls, field: ScalarField, text: str) -> 'PlaneElement':
        """Reads the normal-ordered text form 'c * x^i y^j + ...'."""
        return cls(field, _parse_laurent(field, text, ("x", "y")))


def monomial_pow(m: PlaneElement, i: int) -> PlaneElement:
    """(c x^r y^s)^i = c^i q^{i(i-1)rs/2} x^{ri} y^{si}, any integer i."""
    if not m.is_monomial():
        raise NotAMonomial(f"monomial_pow needs a single term, got {m}")
    field = m.field
    (r, s), c = next(iter(m.terms.items()))
    i = int(i)
    coef = field.div(field.one, c ** -i) if i < 0 else c ** i
    twist = i * (i - 1) // 2 * r * s
    if twist:
        coef = coef * field.q_pow(twist)
    return PlaneElement(field, {(r * i, s * i): coef})


def invert(a: PlaneElement) -> PlaneElement:
    """Inverse of a unit of the plane (a single non-zero term)."""
    if not a.is_monomial():
        raise NotAUnit(f"Only single-term elements are invertible, got {a}")
    return monomial_pow(a, -1)


# --- The Laurent line ---

class LineElement(_LaurentElement):
    """Sum of c_p z^p; commutative."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        return int(key)

    @classmethod
    def _one_key(cls):
        return 0

    @classmethod
    def zero(cls, field: ScalarField) -> 'LineElement':
        return cls(field)

    @classmethod
    def one(cls, field: ScalarField) -> 'LineElement':
        return cls(field, {0: field.one})

    @classmethod
    def monomial(cls, field: ScalarField, p: int, coef=1) -> 'LineElement':
        return cls(field, {p: coef})

    @classmethod
    def z(cls, field: ScalarField) -> 'LineElement':
        return cls.monomial(field, 1)

    def __mul__(self, other):
        if not isinstance(other, LineElement):
            return self.scale(other)
        out: Dict[int, Scalar] = {}
        for p, c in self.terms.items():
            for r, d in other.terms.items():
                out[p + r] = out.get(p + r, self.field.zero) + c * d
        return LineElement(self.field, out)

    def monomial_pow(self, i: int) -> 'LineElement':
        if not self.is_monomial():
            raise NotAMonomial(f"monomial_pow needs a single term, got {self}")
        (p, c), = self.terms.items()
        i = int(i)
        coef = self.field.div(self.field.one, c ** -i) if i < 0 else c ** i
        return LineElement(self.field, {p * i: coef})

    def invert(self) -> 'LineElement':
        if not self.is_monomial():
            raise NotAUnit(f"Only single-term elements are invertible, got {self}")
        return self.monomial_pow(-1)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.field.format(self.terms[p])}) * z^{p}" for p in self.support())

    def to_json(self) -> List[dict]:
        return [{"p": p, "coef": self.field.format(self.terms[p])} for p in self.support()]

    @classmethod
    def from_json(cls, field: ScalarField, doc: List[dict]) -> 'LineElement':
        try:
            return cls(field, [(t["p"], field.parse(t["coef"])) for t in doc])
        except (KeyError, TypeError) as e:
            raise ParseError(f"Malformed line element JSON: {e}") from e

    @classmethod
    def parse(cls, field: ScalarField, text: str) -> 'LineElement':
        terms = _parse_laurent(field, text, ("z",))
        return cls(field, {key[0]: c for key, c in terms.items()})


def _parse_laurent(field: ScalarField, text: str, variables: Tuple[str, ...]) -> Dict[Tuple[int, ...], Scalar]:
    """
    Reads a text sum of 'coef * var^e ...' terms. Terms are taken as written
    in normal order, so the variables can be read as commuting symbols.
    """
    source = str(text).strip().replace("^", "**")
    symbols = {v: sympy.Symbol(v) for v in variables}
    local = {n: sympy.Symbol(n) for n in field.names}
    local.update(symbols)
    try:
        # juxtaposition 'x^1 y^0' is a product
        expr = sympy.expand(parse_expr(source, local_dict=local, transformations=_TRANSFORMS))
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise ParseError(f"Malformed element {text!r}: {e}") from e
    out: Dict[Tuple[int, ...], Scalar] = {}
    for term in sympy.Add.make_args(expr):
        powers = term.as_powers_dict()
        key = []
        for v in variables:
            e = sympy.sympify(powers.get(symbols[v], 0))
            if not e.is_Integer:
                raise ParseError(f"Non-integer exponent of {v} in {term}")
            key.append(int(e))
        rest = term
        for v, e in zip(variables, key):
            rest = rest / symbols[v] ** e
        coef = field.from_sympy(rest)
        k = tuple(key)
        out[k] = out.get(k, field.zero) + coef
    return out
