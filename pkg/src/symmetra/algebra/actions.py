"""
src/symmetra/algebra/actions.py

Candidate U_q(sl2)-module-algebra structures ("symmetries") on the Laurent
quantum plane and on the Laurent line, the classified families, conjugation
by automorphisms, the coefficient-ratio check and closed forms for images of
powers of generators.

An Action is fixed by k -> Auto and the four images e(x), e(y), f(x), f(y).
Everything else follows from the twisted Leibniz rules
    e(ab) = a e(b) + e(a) k(b),     f(ab) = f(a) b + k^-1(a) f(b).
"""
import logging
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from symmetra.algebra import autgroup
from symmetra.algebra.autgroup import Auto, LineAuto, MINUS_IDENTITY, IDENTITY
from symmetra.algebra.qalgebra import LineElement, PlaneElement, invert, monomial_pow
from symmetra.algebra.report import Report
from symmetra.algebra.scalars import Scalar, ScalarField, Unit, multiplicatively_independent
from symmetra.algebra.uqsl2 import Generator, PBWElement
from symmetra.core.errors import (
    GenericityViolated,
    NotAWeightAction,
    ParseError,
    RelationViolated,
    WeightRelationViolated,
)

logger = logging.getLogger(__name__)

IMAGES = ("e_x", "e_y", "f_x", "f_y")


class Action:
    """A candidate symmetry of the plane. Immutable; generator images are memoised."""

    def __init__(self, k_auto: Auto, e_x: PlaneElement, e_y: PlaneElement,
                 f_x: PlaneElement, f_y: PlaneElement, params: Optional[Dict[str, Any]] = None):
        self.k_auto = k_auto
        self.e_x, self.e_y, self.f_x, self.f_y = e_x, e_y, f_x, f_y
        self.params = dict(params or {})
        self.field: ScalarField = e_x.field
        self.k_inv = autgroup.inverse(k_auto)
        self._powers: Dict[Tuple[str, str, int], PlaneElement] = {}

    def image(self, name: str) -> PlaneElement:
        return getattr(self, name)

    def replace(self, **images) -> 'Action':
        data = {n: images.get(n, self.image(n)) for n in IMAGES}
        return Action(images.get("k_auto", self.k_auto), params=images.get("params", self.params), **data)

    @property
    def is_weight(self) -> bool:
        return self.k_auto.sigma == IDENTITY

    def weights(self) -> Tuple[Unit, Unit]:
        if not self.is_weight:
            raise NotAWeightAction(f"k acts by {self.k_auto}, not by weights")
        return self.k_auto.units

    def __eq__(self, other):
        if not isinstance(other, Action):
            return NotImplemented
        return self.k_auto == other.k_auto and all(self.image(n) == other.image(n) for n in IMAGES)

    def __hash__(self):
        return hash((self.k_auto,) + tuple(self.image(n) for n in IMAGES))

    def __repr__(self):
        return f"<Action k={self.k_auto} params={self.params}>"

    # --- Images of powers of x and y ---

    def _gen(self, var: str) -> PlaneElement:
        return PlaneElement.x(self.field) if var == "x" else PlaneElement.y(self.field)

    def _gen_pow(self, var: str, p: int) -> PlaneElement:
        return PlaneElement.monomial(self.field, p, 0) if var == "x" else PlaneElement.monomial(self.field, 0, p)

    def k_of(self, p: PlaneElement) -> PlaneElement:
        return autgroup.apply(self.k_auto, p)

    def kinv_of(self, p: PlaneElement) -> PlaneElement:
        return autgroup.apply(self.k_inv, p)

    def e_power(self, var: str, p: int) -> PlaneElement:
        """e(var^p) by the Leibniz recursion."""
        key = ("e", var, p)
        if key in self._powers:
            return self._powers[key]
        g = self._gen(var)
        e_g = self.e_x if var == "x" else self.e_y
        k_g = self.k_of(g)
        if p == 0:
            out = PlaneElement.zero(self.field)
        elif p == 1:
            out = e_g
        elif p == -1:
            out = -(invert(g) * e_g * invert(k_g))
        elif p > 0:
            out = g * self.e_power(var, p - 1) + e_g * monomial_pow(k_g, p - 1)
        else:
            out = invert(g) * self.e_power(var, p + 1) + self.e_power(var, -1) * monomial_pow(k_g, p + 1)
        self._powers[key] = out
        return out

    def f_power(self, var: str, p: int) -> PlaneElement:
        """f(var^p) by the Leibniz recursion."""
        key = ("f", var, p)
        if key in self._powers:
            return self._powers[key]
        g = self._gen(var)
        f_g = self.f_x if var == "x" else self.f_y
        kinv_g = self.kinv_of(g)
        if p == 0:
            out = PlaneElement.zero(self.field)
        elif p == 1:
            out = f_g
        elif p == -1:
            out = -(invert(kinv_g) * f_g * invert(g))
        elif p > 0:
            out = f_g * self._gen_pow(var, p - 1) + kinv_g * self.f_power(var, p - 1)
        else:
            out = (self.f_power(var, -1) * self._gen_pow(var, p + 1)
                   + monomial_pow(kinv_g, -1) * self.f_power(var, p + 1))
        self._powers[key] = out
        return out

    def e_monomial(self, i: int, j: int) -> PlaneElement:
        key = ("e", "xy", (i, j))
        if key not in self._powers:
            x_i, y_j = self._gen_pow("x", i), self._gen_pow("y", j)
            self._powers[key] = x_i * self.e_power("y", j) + self.e_power("x", i) * self.k_of(y_j)
        return self._powers[key]

    def f_monomial(self, i: int, j: int) -> PlaneElement:
        key = ("f", "xy", (i, j))
        if key not in self._powers:
            x_i, y_j = self._gen_pow("x", i), self._gen_pow("y", j)
            self._powers[key] = self.f_power("x", i) * y_j + self.kinv_of(x_i) * self.f_power("y", j)
        return self._powers[key]


def apply_gen(act: Action, g: Union[Generator, str], p: PlaneElement) -> PlaneElement:
    """pi(g)(p) for a generator g in {k, kinv, e, f}."""
    g = Generator(g) if isinstance(g, str) else g
    if g is Generator.K:
        return act.k_of(p)
    if g is Generator.KINV:
        return act.kinv_of(p)
    monomial = act.e_monomial if g is Generator.E else act.f_monomial
    out = PlaneElement.zero(act.field)
    for (i, j), c in p.terms.items():
        out = out + monomial(i, j).scale(c)
    return out


def apply_pbw(act: Action, u: PBWElement, p: PlaneElement) -> PlaneElement:
    """pi(f^i k^j e^l)(p): e applied l times, then k^j, then f i times; linear in u."""
    out = PlaneElement.zero(act.field)
    for (i, j, l), c in u.terms.items():
        current = p
        for _ in range(l):
            current = apply_gen(act, Generator.E, current)
        k_gen = Generator.K if j >= 0 else Generator.KINV
        for _ in range(abs(j)):
            current = apply_gen(act, k_gen, current)
        for _ in range(i):
            current = apply_gen(act, Generator.F, current)
        out = out + current.scale(c)
    return out


# --- Families ---

def generic_family(field: ScalarField, u: int, v: int, alpha, beta, a="a") -> Action:
    """
    Weight action k: x -> alpha x, y -> beta y with alpha^u beta^v = q^2 and
    alpha, beta multiplicatively independent:
        e(x) = a q^{uv+3} (1 - alpha q^v)/(1 - q^2)^2  x^{u+1} y^v
        e(y) = a q^{uv+3} (q^u - beta)/(1 - q^2)^2      x^u y^{v+1}
        f(x) = -(alpha^-1 - q^-v)/a                    x^{1-u} y^-v
        f(y) = -(beta^-1 q^-u - 1)/a                   x^-u y^{1-v}
    """
    alpha, beta, a = Unit.parse(alpha), Unit.parse(beta), Unit.parse(a)
    q = field.q
    al, be, ac = field.unit(alpha), field.unit(beta), field.unit(a)
    if al ** u * be ** v != q ** 2:
        raise WeightRelationViolated(f"alpha^{u} beta^{v} != q^2 for alpha={alpha}, beta={beta}")
    if not multiplicatively_independent(alpha, beta):
        raise GenericityViolated(f"alpha={alpha} and beta={beta} are multiplicatively dependent")
    one = field.one
    lead = ac * q ** (u * v + 3) / (one - q ** 2) ** 2
    e_x = PlaneElement.monomial(field, u + 1, v, lead * (one - al * q ** v))
    e_y = PlaneElement.monomial(field, u, v + 1, lead * (q ** u - be))
    f_x = PlaneElement.monomial(field, 1 - u, -v, -(al ** -1 - q ** -v) / ac)
    f_y = PlaneElement.monomial(field, -u, 1 - v, -(be ** -1 * q ** -u - one) / ac)
    params = {"family": "generic", "u": u, "v": v, "alpha": str(alpha), "beta": str(beta), "a": str(a)}
    return Action(Auto.units_only(alpha, beta), e_x, e_y, f_x, f_y, params)


def minus_identity_family(field: ScalarField, alpha, beta) -> Action:
    """k: x -> alpha^-1 x^-1, y -> beta^-1 y^-1; e = f = 0."""
    alpha, beta = Unit.parse(alpha), Unit.parse(beta)
    zero = PlaneElement.zero(field)
    params = {"family": "minus-identity", "alpha": str(alpha), "beta": str(beta)}
    return Action(Auto(MINUS_IDENTITY, alpha.inverse(), beta.inverse()), zero, zero, zero, zero, params)


def weight_basis(act: Action, i: int, j: int) -> Tuple[PlaneElement, PlaneElement]:
    """
    (u_ij, v_ij) = alpha^i beta^j x^i y^j +- x^-i y^-j for a minus-identity
    action; k fixes u_ij and negates v_ij.
    """
    if i <= 0 or j <= 0:
        raise ValueError("weight_basis needs positive i and j")
    if act.k_auto.sigma != MINUS_IDENTITY:
        raise ValueError("weight_basis applies to actions with sigma = -I")
    field = act.field
    alpha, beta = act.k_auto.alpha.inverse(), act.k_auto.beta.inverse()
    head = PlaneElement.monomial(field, i, j, field.unit(alpha ** i * beta ** j))
    tail = PlaneElement.monomial(field, -i, -j)
    return head + tail, head - tail


# --- Conjugation, rescaling, isomorphism ---

def conjugate(act: Action, phi: Auto) -> Action:
    """phi o pi(g) o phi^-1 for every generator g."""
    phi_inv = autgroup.inverse(phi)
    k_auto = autgroup.compose(phi, autgroup.compose(act.k_auto, phi_inv))
    images = {}
    for name, g, var in (("e_x", Generator.E, "x"), ("e_y", Generator.E, "y"),
                         ("f_x", Generator.F, "x"), ("f_y", Generator.F, "y")):
        source = autgroup.apply(phi_inv, act._gen(var))
        images[name] = autgroup.apply(phi, apply_gen(act, g, source))
    params = {"family": "conjugate", "of": act.params, "by": phi.to_json()}
    return Action(k_auto, params=params, **images)


def rescale(act: Action, c) -> Action:
    """e -> c e, f -> c^-1 f; stays a symmetry."""
    field = act.field
    c = field.convert(c)
    c_inv = field.inv(c)
    return act.replace(e_x=act.e_x.scale(c), e_y=act.e_y.scale(c),
                       f_x=act.f_x.scale(c_inv), f_y=act.f_y.scale(c_inv),
                       params={"family": "rescaled", "of": act.params, "by": field.format(c)})


def rescaling_factor(first: Action, second: Action) -> Optional[Scalar]:
    """The scalar c with rescale(first, c) == second, or None."""
    if first.k_auto != second.k_auto:
        return None
    c = first.field.one
    for name in ("e_x", "e_y"):
        img = first.image(name)
        if img:
            key = img.support()[0]
            other = second.image(name).coefficient(key)
            if not other:
                return None
            c = other / img.coefficient(key)
            break
    return c if rescale(first, c) == second else None


def find_isomorphism(first: Action, second: Action, candidates: Iterable[Auto]) -> Optional[Auto]:
    """First candidate phi with conjugate(first, phi) == second."""
    for phi in candidates:
        if conjugate(first, phi) == second:
            logger.debug("find_isomorphism: conjugating by %s matches", phi)
            return phi
    return None


# --- Ratio check ---

def ratio_check(act: Action) -> Report:
    """
    For weight actions with e(x) = sum a_ij x^i y^j, e(y) = sum b_ij ...,
    f(x) = sum c_ij ..., f(y) = sum d_ij ...:
        a_{i+1,j} (q^i - beta)        = b_{i,j+1} (1 - alpha q^j)
        c_{i+1,j} (1 - beta^-1 q^i)   = d_{i,j+1} (q^j - alpha^-1)
    """
    alpha, beta = act.weights()
    field = act.field
    q, one = field.q, field.one
    al, be = field.unit(alpha), field.unit(beta)
    report = Report("ratio_check", scalar_field=field)

    spots = sorted({(i - 1, j) for i, j in act.e_x.support()} | {(i, j - 1) for i, j in act.e_y.support()})
    for i, j in spots:
        lhs = act.e_x.coefficient((i + 1, j)) * (q ** i - be)
        rhs = act.e_y.coefficient((i, j + 1)) * (one - al * q ** j)
        report.add("ab", (i, j), lhs, rhs)

    spots = sorted({(i - 1, j) for i, j in act.f_x.support()} | {(i, j - 1) for i, j in act.f_y.support()})
    for i, j in spots:
        lhs = act.f_x.coefficient((i + 1, j)) * (one - be ** -1 * q ** i)
        rhs = act.f_y.coefficient((i, j + 1)) * (q ** j - al ** -1)
        report.add("cd", (i, j), lhs, rhs)
    return report


# --- Closed forms on powers ---

def _geom(field: ScalarField, gamma: Scalar, p: int) -> Scalar:
    if gamma == field.one:
        return field.convert(p)
    return field.geom_ratio(gamma, p)


def closed_form_powers(act: Action, which: str, var: str, p: int, form: str = "weight") -> PlaneElement:
    """
    pi(which)(var^p) in closed form. form='weight' uses the weight-action
    geometric formulas (sigma = I); form='sum' uses the finite sums valid for
    any k:
        e(g^p) =  sum_{r<p}  g^{p-1-r} e(g) k(g)^r                 (p > 0)
        e(g^p) = -sum_{r<-p} g^{p+r} e(g) k(g)^{-r-1}             (p < 0)
        f(g^p) =  sum_{r<p}  k^-1(g)^r f(g) g^{p-1-r}             (p > 0)
        f(g^p) = -sum_{r<-p} k^-1(g)^{-r-1} f(g) g^{p+r}          (p < 0)
    """
    if which not in ("e", "f") or var not in ("x", "y"):
        raise ValueError(f"Unknown image {which}({var}^p)")
    field = act.field
    if p == 0:
        return PlaneElement.zero(field)
    if form == "sum":
        return _sum_form(act, which, var, p)
    if form != "weight":
        raise ValueError(f"Unknown closed form {form!r}")

    alpha, beta = act.weights()
    q = field.q
    al, be = field.unit(alpha), field.unit(beta)
    image = act.image(f"{which}_{var}")
    out: Dict[Tuple[int, int], Scalar] = {}
    for (i, j), c in image.terms.items():
        if which == "e" and var == "x":
            key, coef = (p - 1 + i, j), c * _geom(field, al * q ** j, p)
        elif which == "e":
            key, coef = (i, p - 1 + j), c * q ** (i * (p - 1)) * _geom(field, be * q ** -i, p)
        elif var == "x":
            key, coef = (p - 1 + i, j), c * q ** (j * (p - 1)) * _geom(field, al ** -1 * q ** -j, p)
        else:
            key, coef = (i, p - 1 + j), c * _geom(field, be ** -1 * q ** i, p)
        out[key] = out.get(key, field.zero) + coef
    return PlaneElement(field, out)


def _sum_form(act: Action, which: str, var: str, p: int) -> PlaneElement:
    g = act._gen(var)
    gp = lambda n: act._gen_pow(var, n)
    field = act.field
    out = PlaneElement.zero(field)
    if which == "e":
        e_g, k_g = act.image(f"e_{var}"), act.k_of(g)
        if p > 0:
            for r in range(p):
                out = out + gp(p - 1 - r) * e_g * monomial_pow(k_g, r)
        else:
            for r in range(-p):
                out = out - gp(p + r) * e_g * monomial_pow(k_g, -r - 1)
    else:
        f_g, kinv_g = act.image(f"f_{var}"), act.kinv_of(g)
        if p > 0:
            for r in range(p):
                out = out + monomial_pow(kinv_g, r) * f_g * gp(p - 1 - r)
        else:
            for r in range(-p):
                out = out - monomial_pow(kinv_g, -r - 1) * f_g * gp(p + r)
    return out


# --- The Laurent line ---

class LineAction:
    """A candidate symmetry of C[z^{+-1}]: k -> LineAuto, e(z), f(z)."""

    def __init__(self, k_auto: LineAuto, e_z: LineElement, f_z: LineElement,
                 params: Optional[Dict[str, Any]] = None):
        self.k_auto = k_auto
        self.e_z, self.f_z = e_z, f_z
        self.params = dict(params or {})
        self.field: ScalarField = e_z.field
        self.k_inv = k_auto.inverse()
        self._powers: Dict[Tuple[str, int], LineElement] = {}

    def replace(self, **images) -> 'LineAction':
        return LineAction(images.get("k_auto", self.k_auto), images.get("e_z", self.e_z),
                          images.get("f_z", self.f_z), images.get("params", self.params))

    def __eq__(self, other):
        if not isinstance(other, LineAction):
            return NotImplemented
        return (self.k_auto, self.e_z, self.f_z) == (other.k_auto, other.e_z, other.f_z)

    def __hash__(self):
        return hash((self.k_auto, self.e_z, self.f_z))

    def __repr__(self):
        return f"<LineAction k={self.k_auto} params={self.params}>"

    def k_of(self, a: LineElement) -> LineElement:
        return self.k_auto.apply(a)

    def kinv_of(self, a: LineElement) -> LineElement:
        return self.k_inv.apply(a)

    def e_power(self, p: int) -> LineElement:
        key = ("e", p)
        if key not in self._powers:
            z = LineElement.z(self.field)
            k_z = self.k_of(z)
            if p == 0:
                out = LineElement.zero(self.field)
            elif p == 1:
                out = self.e_z
            elif p == -1:
                out = -(z.invert() * self.e_z * k_z.invert())
            elif p > 0:
                out = z * self.e_power(p - 1) + self.e_z * k_z.monomial_pow(p - 1)
            else:
                out = z.invert() * self.e_power(p + 1) + self.e_power(-1) * k_z.monomial_pow(p + 1)
            self._powers[key] = out
        return self._powers[key]

    def f_power(self, p: int) -> LineElement:
        key = ("f", p)
        if key not in self._powers:
            z = LineElement.z(self.field)
            kinv_z = self.kinv_of(z)
            if p == 0:
                out = LineElement.zero(self.field)
            elif p == 1:
                out = self.f_z
            elif p == -1:
                out = -(kinv_z.invert() * self.f_z * z.invert())
            elif p > 0:
                out = self.f_z * z.monomial_pow(p - 1) + kinv_z * self.f_power(p - 1)
            else:
                out = self.f_power(-1) * z.monomial_pow(p + 1) + kinv_z.invert() * self.f_power(p + 1)
            self._powers[key] = out
        return self._powers[key]


def apply_line_gen(act: LineAction, g: Union[Generator, str], a: LineElement) -> LineElement:
    g = Generator(g) if isinstance(g, str) else g
    if g is Generator.K:
        return act.k_of(a)
    if g is Generator.KINV:
        return act.kinv_of(a)
    power = act.e_power if g is Generator.E else act.f_power
    out = LineElement.zero(act.field)
    for p, c in a.terms.items():
        out = out + power(p).scale(c)
    return out


LINE_KINDS = ("weight", "sign", "inversion")


def line_family(field: ScalarField, kind: str, gamma="q^2", a="a", r: int = 2) -> LineAction:
    """
    The symmetries of C[z^{+-1}]:
      weight    k(z) = gamma z, gamma^{r-1} = q^2,
                e(z) = a/(q^2 - 1) z^r,
                f(z) = -q^3 (gamma - 1)^2 / (gamma (q^2 - 1)) a^-1 z^{2-r}
      sign      k(z) = gamma z with gamma = +-1, e = f = 0
      inversion k(z) = gamma z^-1, e = f = 0
    """
    gamma = Unit.parse(gamma)
    zero = LineElement.zero(field)
    if kind == "weight":
        a = Unit.parse(a)
        q, one = field.q, field.one
        g, ac = field.unit(gamma), field.unit(a)
        if g ** (r - 1) != q ** 2:
            raise RelationViolated(f"gamma^(r-1) != q^2 for gamma={gamma}, r={r}")
        e_z = LineElement.monomial(field, r, ac / (q ** 2 - one))
        f_z = LineElement.monomial(field, 2 - r, -q ** 3 * (g - one) ** 2 / (g * (q ** 2 - one) * ac))
        params = {"family": "line", "kind": kind, "gamma": str(gamma), "a": str(a), "r": r}
        return LineAction(LineAuto(1, gamma), e_z, f_z, params)
    if kind == "sign":
        if gamma not in (Unit.one(), Unit.make(-1)):
            raise RelationViolated(f"The sign family needs gamma = +-1, got {gamma}")
        return LineAction(LineAuto(1, gamma), zero, zero, {"family": "line", "kind": kind, "gamma": str(gamma)})
    if kind == "inversion":
        return LineAction(LineAuto(-1, gamma), zero, zero, {"family": "line", "kind": kind, "gamma": str(gamma)})
    raise ValueError(f"Unknown line family kind {kind!r}; expected one of {LINE_KINDS}")


def conjugate_line(act: LineAction, psi: LineAuto) -> LineAction:
    psi_inv = psi.inverse()
    z = LineElement.z(act.field)
    source = psi_inv.apply(z)
    e_z = psi.apply(apply_line_gen(act, Generator.E, source))
    f_z = psi.apply(apply_line_gen(act, Generator.F, source))
    k_auto = psi.compose(act.k_auto.compose(psi_inv))
    return LineAction(k_auto, e_z, f_z, {"family": "conjugate", "of": act.params, "by": psi.to_json()})


def line_closed_form_powers(act: LineAction, which: str, p: int) -> LineElement:
    """
    For k(z) = gamma z and e(z) = sum A_s z^s, f(z) = sum B_s z^s:
        e(z^p) = (gamma^p - 1)/(gamma - 1)       sum A_s z^{p+s-1}
        f(z^p) = (gamma^-p - 1)/(gamma^-1 - 1)   sum B_s z^{p+s-1}
    """
    field = act.field
    if act.k_auto.sign != 1:
        raise NotAWeightAction("Line closed forms need k(z) = gamma z")
    if p == 0:
        return LineElement.zero(field)
    g = field.unit(act.k_auto.gamma)
    if which == "e":
        image, ratio = act.e_z, _geom(field, g, p)
    elif which == "f":
        image, ratio = act.f_z, _geom(field, field.inv(g), p)
    else:
        raise ValueError(f"Unknown image {which}(z^p)")
    return LineElement(field, {s + p - 1: c * ratio for s, c in image.terms.items()})


# --- JSON ---

def action_to_json(act: Union[Action, LineAction]) -> dict:
    if isinstance(act, LineAction):
        return {"kind": "line", "field": act.field.to_json(), "k": act.k_auto.to_json(),
                "e": act.e_z.to_json(), "f": act.f_z.to_json(), "params": act.params}
    doc = {"kind": "plane", "field": act.field.to_json(), "k": act.k_auto.to_json(), "params": act.params}
    for name in IMAGES:
        doc[name] = act.image(name).to_json()
    return doc


def action_from_json(doc: dict, field: Optional[ScalarField] = None) -> Union[Action, LineAction]:
    """Reads an action; the document's own field block wins over `field`."""
    try:
        if "field" in doc:
            field = ScalarField.from_json(doc["field"],
                                          getattr(field, "tolerance", 1e-9), getattr(field, "guard_bound", 64))
        if field is None:
            raise ParseError("Action JSON carries no field block and no field was given")
        if doc.get("kind", "plane") == "line":
            return LineAction(LineAuto.from_json(doc["k"]), LineElement.from_json(field, doc["e"]),
                              LineElement.from_json(field, doc["f"]), doc.get("params"))
        images = {n: PlaneElement.from_json(field, doc[n]) for n in IMAGES}
        return Action(Auto.from_json(doc["k"]), params=doc.get("params"), **images)
    except KeyError as e:
        raise ParseError(f"Action JSON is missing {e}") from e
