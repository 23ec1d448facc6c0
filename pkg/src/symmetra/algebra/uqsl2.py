"""
src/symmetra/algebra/uqsl2.py

U_q(sl2) with generators k, k^-1, e, f, its PBW normal form f^i k^j e^l and
the Hopf structure (coproduct, counit, antipode) on generators.

Normal form is reached by rewriting adjacent out-of-order pairs:
    k k^-1 -> 1,       k^-1 k -> 1
    e k    -> q^-2 k e, e k^-1 -> q^2 k^-1 e
    k f    -> q^-2 f k, k^-1 f -> q^2 f k^-1
    e f    -> f e + (k - k^-1)/(q - q^-1)
"""
import enum
import logging
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from symmetra.algebra.scalars import Scalar, ScalarField
from symmetra.core.errors import ParseError

logger = logging.getLogger(__name__)


class Generator(enum.Enum):
    K = "k"
    KINV = "kinv"
    E = "e"
    F = "f"

    def __str__(self):
        return self.value


Word = Tuple[Generator, ...]
Triple = Tuple[int, int, int]

# position in the PBW order f < k^{+-1} < e
_RANK = {Generator.F: 0, Generator.K: 1, Generator.KINV: 1, Generator.E: 2}

_ALIASES = {
    "k": Generator.K, "K": Generator.K,
    "kinv": Generator.KINV, "k^-1": Generator.KINV, "Kinv": Generator.KINV, "k-1": Generator.KINV,
    "e": Generator.E, "E": Generator.E,
    "f": Generator.F, "F": Generator.F,
    "1": None,
}


def parse_word(text: str) -> Word:
    """Reads a whitespace separated word such as 'k e f kinv'. '1' is the empty word."""
    word = []
    for token in str(text).split():
        if token not in _ALIASES:
            raise ParseError(f"Unknown generator {token!r} in word {text!r}")
        g = _ALIASES[token]
        if g is not None:
            word.append(g)
    return tuple(word)


def format_word(word: Sequence[Generator]) -> str:
    return " ".join(str(g) for g in word) or "1"


def triple_word(triple: Triple) -> Word:
    i, j, l = triple
    kpart = (Generator.K,) * j if j >= 0 else (Generator.KINV,) * (-j)
    return (Generator.F,) * i + kpart + (Generator.E,) * l


# --- PBW elements ---

class PBWElement:
    """Linear combination of basis triples (i, j, l) = f^i k^j e^l."""

    __slots__ = ("field", "terms")

    def __init__(self, field: ScalarField, terms: Union[Dict[Triple, Scalar], Iterable] = ()):
        self.field = field
        cleaned: Dict[Triple, Scalar] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j, l), coef in items:
            if i < 0 or l < 0:
                raise ValueError(f"Invalid PBW triple {(i, j, l)}")
            key = (int(i), int(j), int(l))
            total = cleaned.get(key, field.zero) + field.convert(coef)
            if total:
                cleaned[key] = total
            else:
                cleaned.pop(key, None)
        self.terms = cleaned

    @classmethod
    def one(cls, field: ScalarField) -> 'PBWElement':
        return cls(field, {(0, 0, 0): field.one})

    @classmethod
    def basis(cls, field: ScalarField, i: int, j: int, l: int, coef=1) -> 'PBWElement':
        return cls(field, {(i, j, l): coef})

    def __add__(self, other: 'PBWElement') -> 'PBWElement':
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, self.field.zero) + c
        return PBWElement(self.field, merged)

    def __neg__(self):
        return PBWElement(self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> 'PBWElement':
        s = self.field.convert(s)
        return PBWElement(self.field, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PBWElement):
            return self.scale(other)
        combo = []
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                combo.append((c1 * c2, triple_word(t1) + triple_word(t2)))
        return pbw_normalize(self.field, combo)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.field.format(self.terms[t])}) * f^{t[0]} k^{t[1]} e^{t[2]}"
                          for t in sorted(self.terms))

    def __repr__(self):
        return f"PBWElement({self})"

    def to_json(self) -> List[dict]:
        return [{"i": i, "j": j, "l": l, "coef": self.field.format(self.terms[(i, j, l)])}
                for (i, j, l) in sorted(self.terms)]

    @classmethod
    def from_json(cls, field: ScalarField, doc: List[dict]) -> 'PBWElement':
        try:
            return cls(field, [((t["i"], t["j"], t["l"]), field.parse(t["coef"])) for t in doc])
        except (KeyError, TypeError) as e:
            raise ParseError(f"Malformed PBW element JSON: {e}") from e


# --- Rewriting ---

def _redexes(word: Word) -> List[int]:
    """Positions p such that (word[p], word[p+1]) can be rewritten."""
    found = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if _RANK[a] > _RANK[b] or {a, b} == {Generator.K, Generator.KINV}:
            found.append(p)
    return found


def _rewrite(field: ScalarField, a: Generator, b: Generator) -> List[Tuple[Scalar, Word]]:
    q = field.q
    G = Generator
    if {a, b} == {G.K, G.KINV}:
        return [(field.one, ())]
    if a is G.E and b is G.K:
        return [(q ** -2, (G.K, G.E))]
    if a is G.E and b is G.KINV:
        return [(q ** 2, (G.KINV, G.E))]
    if a is G.K and b is G.F:
        return [(q ** -2, (G.F, G.K))]
    if a is G.KINV and b is G.F:
        return [(q ** 2, (G.F, G.KINV))]
    if a is G.E and b is G.F:
        c = field.inv(q - q ** -1)
        return [(field.one, (G.F, G.E)), (c, (G.K,)), (-c, (G.KINV,))]
    raise AssertionError(f"No rewrite rule for {a} {b}")


def _normal_triple(word: Word) -> Triple:
    i = sum(1 for g in word if g is Generator.F)
    l = sum(1 for g in word if g is Generator.E)
    j = sum(1 for g in word if g is Generator.K) - sum(1 for g in word if g is Generator.KINV)
    return (i, j, l)


def pbw_normalize(field: ScalarField, combo: Union[Word, Iterable[Tuple[Scalar, Word]], str],
                  strategy: str = "leftmost") -> PBWElement:
    """
    Brings a word, or a linear combination [(coef, word), ...], to PBW normal
    form. `strategy` picks the leftmost or rightmost redex first; the result
    does not depend on it.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"Unknown rewrite strategy {strategy!r}")
    if isinstance(combo, str):
        combo = [(field.one, parse_word(combo))]
    elif isinstance(combo, tuple) and all(isinstance(g, Generator) for g in combo):
        combo = [(field.one, combo)]

    pending: Dict[Word, Scalar] = {}
    for coef, word in combo:
        word = tuple(word)
        pending[word] = pending.get(word, field.zero) + field.convert(coef)

    result: Dict[Triple, Scalar] = {}
    steps = 0
    while pending:
        word, coef = pending.popitem()
        if not coef:
            continue
        spots = _redexes(word)
        if not spots:
            key = _normal_triple(word)
            result[key] = result.get(key, field.zero) + coef
            continue
        p = spots[0] if strategy == "leftmost" else spots[-1]
        for c, middle in _rewrite(field, word[p], word[p + 1]):
            new = word[:p] + middle + word[p + 2:]
            pending[new] = pending.get(new, field.zero) + coef * c
        steps += 1
    logger.debug("pbw_normalize finished after %d rewrites", steps)
    return PBWElement(field, result)


# --- Hopf structure ---

class TensorElement:
    """Linear combination of pairs of PBW basis triples, u (x) v."""

    __slots__ = ("field", "terms")

    def __init__(self, field: ScalarField, terms: Union[Dict[Tuple[Triple, Triple], Scalar], Iterable] = ()):
        self.field = field
        cleaned: Dict[Tuple[Triple, Triple], Scalar] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coef in items:
            total = cleaned.get(key, field.zero) + field.convert(coef)
            if total:
                cleaned[key] = total
            else:
                cleaned.pop(key, None)
        self.terms = cleaned

    @classmethod
    def from_pairs(cls, field: ScalarField, pairs: Iterable[Tuple[Scalar, PBWElement, PBWElement]]) -> 'TensorElement':
        out: Dict[Tuple[Triple, Triple], Scalar] = {}
        for coef, left, right in pairs:
            for t1, c1 in left.terms.items():
                for t2, c2 in right.terms.items():
                    out[(t1, t2)] = out.get((t1, t2), field.zero) + coef * c1 * c2
        return cls(field, out)

    def pairs(self) -> List[Tuple[Scalar, PBWElement, PBWElement]]:
        return [(c, PBWElement.basis(self.field, *t1), PBWElement.basis(self.field, *t2))
                for (t1, t2), c in sorted(self.terms.items())]

    def __mul__(self, other: 'TensorElement') -> 'TensorElement':
        pairs = []
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                left = pbw_normalize(self.field, triple_word(a1) + triple_word(b1))
                right = pbw_normalize(self.field, triple_word(a2) + triple_word(b2))
                pairs.append((c * d, left, right))
        return TensorElement.from_pairs(self.field, pairs)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.field.format(c)}) * [{format_word(triple_word(t1))}] (x) [{format_word(triple_word(t2))}]"
                          for (t1, t2), c in sorted(self.terms.items()))

    def to_json(self) -> List[dict]:
        return [{"left": list(t1), "right": list(t2), "coef": self.field.format(c)}
                for (t1, t2), c in sorted(self.terms.items())]


def _generator_coproduct(field: ScalarField, g: Generator) -> TensorElement:
    one, k, kinv, e, f = (0, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (1, 0, 0)
    table = {
        Generator.K: {(k, k): 1},
        Generator.KINV: {(kinv, kinv): 1},
        Generator.E: {(one, e): 1, (e, k): 1},
        Generator.F: {(f, one): 1, (kinv, f): 1},
    }
    return TensorElement(field, table[g])


def coproduct(field: ScalarField, word: Union[Word, str]) -> TensorElement:
    """Multiplicative extension of Delta(k) = k(x)k, Delta(e) = 1(x)e + e(x)k, Delta(f) = f(x)1 + k^-1(x)f."""
    if isinstance(word, str):
        word = parse_word(word)
    result = TensorElement(field, {((0, 0, 0), (0, 0, 0)): 1})
    for g in word:
        result = result * _generator_coproduct(field, g)
    return result


def counit(field: ScalarField, word: Union[Word, str, PBWElement]) -> Scalar:
    """eps(k) = eps(k^-1) = 1, eps(e) = eps(f) = 0, extended multiplicatively and linearly."""
    if isinstance(word, PBWElement):
        return sum((c for (i, j, l), c in word.terms.items() if i == 0 and l == 0), field.zero)
    if isinstance(word, str):
        word = parse_word(word)
    if any(g in (Generator.E, Generator.F) for g in word):
        return field.zero
    return field.one


def antipode(field: ScalarField, g: Union[Generator, Word, str]) -> PBWElement:
    """S(k) = k^-1, S(e) = -e k^-1, S(f) = -k f; anti-multiplicative on words."""
    G = Generator
    if isinstance(g, str):
        g = parse_word(g)
    if isinstance(g, Generator):
        table = {
            G.K: [(field.one, (G.KINV,))],
            G.KINV: [(field.one, (G.K,))],
            G.E: [(-field.one, (G.E, G.KINV))],
            G.F: [(-field.one, (G.K, G.F))],
        }
        return pbw_normalize(field, table[g])
    result = PBWElement.one(field)
    for gen in reversed(tuple(g)):
        result = result * antipode(field, gen)
    return result


def apply_counit_left(t: TensorElement) -> PBWElement:
    """(eps (x) id)(t)."""
    field = t.field
    out = PBWElement(field)
    for c, left, right in t.pairs():
        out = out + right.scale(c * counit(field, left))
    return out


def apply_counit_right(t: TensorElement) -> PBWElement:
    """(id (x) eps)(t)."""
    field = t.field
    out = PBWElement(field)
    for c, left, right in t.pairs():
        out = out + left.scale(c * counit(field, right))
    return out


def antipode_left(t: TensorElement) -> PBWElement:
    """m o (S (x) id)(t)."""
    field = t.field
    out = PBWElement(field)
    for c, left, right in t.pairs():
        (triple, _), = left.terms.items()
        out = out + (antipode(field, triple_word(triple)) * right).scale(c)
    return out


def antipode_right(t: TensorElement) -> PBWElement:
    """m o (id (x) S)(t)."""
    field = t.field
    out = PBWElement(field)
    for c, left, right in t.pairs():
        (triple, _), = right.terms.items()
        out = out + (left * antipode(field, triple_word(triple))).scale(c)
    return out
