"""
src/symmetra/algebra/search.py

Bounded-support search for symmetries with a prescribed k-automorphism.

The unknowns are the coefficients of e(x), e(y), f(x), f(y) on the box
{(i, j): |i|, |j| <= B}. The linear block (k e = q^2 e k and k f = q^-2 f k
on x and y, plus the Leibniz expansion of yx = qxy) is homogeneous and splits
into an e-part and an f-part; its kernels are computed exactly. The bilinear
block (e f - f e = (k - k^-1)/(q - q^-1) on x and y) is then solved directly
when one kernel is one-dimensional.

An empty result means "no symmetry with support inside the box", nothing more.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import QQ

from symmetra.algebra import autgroup
from symmetra.algebra.actions import IMAGES, Action, action_to_json, apply_gen
from symmetra.algebra.autgroup import Auto
from symmetra.algebra.linalg import RHS, Row, nullspace, solve_affine
from symmetra.algebra.qalgebra import PlaneElement
from symmetra.algebra.scalars import ScalarField, Unit, multiplicatively_independent
from symmetra.algebra.uqsl2 import Generator
from symmetra.algebra.verifier import verify_module_algebra
from symmetra.core.errors import ConfigError, SolverBudgetExceeded

logger = logging.getLogger(__name__)

E_IMAGES = ("e_x", "e_y")
F_IMAGES = ("f_x", "f_y")
PARAMETER_NAMES = ("a", "b", "c", "g", "s", "r")

Unknown = Tuple[str, int, int]


@dataclass(frozen=True)
class SupportBox:
    bound: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("The box bound must be at least 1")

    @property
    def points(self) -> List[Tuple[int, int]]:
        B = self.bound
        return [(i, j) for i in range(-B, B + 1) for j in range(-B, B + 1)]

    def __contains__(self, key) -> bool:
        i, j = key
        return abs(i) <= self.bound and abs(j) <= self.bound


@dataclass
class ConstraintSystem:
    """Unknowns and the linear-block rows, keyed by (equation, monomial)."""
    k_auto: Auto
    box: SupportBox
    field: ScalarField
    unknowns: List[Unknown]
    rows: Dict[Tuple[str, Tuple[int, int]], Row]

    def block(self, images: Tuple[str, ...]) -> Tuple[List[Unknown], List[Row]]:
        """Unknowns of the given images, re-indexed, and the rows touching them."""
        chosen = [u for u in self.unknowns if u[0] in images]
        index = {self.unknowns.index(u): n for n, u in enumerate(chosen)}
        rows = []
        for row in self.rows.values():
            sub = {index[c]: v for c, v in row.items() if c in index}
            if sub:
                rows.append(sub)
        return chosen, rows


def _unit_action(k_auto: Auto, field: ScalarField, images: Dict[str, PlaneElement]) -> Action:
    zero = PlaneElement.zero(field)
    data = {n: images.get(n, zero) for n in IMAGES}
    return Action(k_auto, params={"family": "search-basis"}, **data)


def _residuals(act: Action, images: Tuple[str, ...], weight_only: bool) -> Dict[str, PlaneElement]:
    """Linear-block equations evaluated at act, as plane elements that must vanish."""
    field = act.field
    q = field.q
    x, y = PlaneElement.x(field), PlaneElement.y(field)
    op = lambda g, p: apply_gen(act, g, p)
    K, KINV, E, F = Generator.K, Generator.KINV, Generator.E, Generator.F
    out = {}
    if images == E_IMAGES:
        out["ke_x"] = op(K, op(E, x)) - op(E, op(K, x)).scale(q ** 2)
        out["ke_y"] = op(K, op(E, y)) - op(E, op(K, y)).scale(q ** 2)
        if not weight_only:
            out["qpr_e"] = (y * op(E, x) + op(E, y) * op(K, x)) - (x * op(E, y) + op(E, x) * op(K, y)).scale(q)
    else:
        out["kf_x"] = op(K, op(F, x)) - op(F, op(K, x)).scale(q ** -2)
        out["kf_y"] = op(K, op(F, y)) - op(F, op(K, y)).scale(q ** -2)
        if not weight_only:
            out["qpr_f"] = (op(F, y) * x + op(KINV, y) * op(F, x)) - (op(F, x) * y + op(KINV, x) * op(F, y)).scale(q)
    return out


def build_system(k_auto: Auto, box: SupportBox, field: ScalarField,
                 unknowns: Optional[List[Unknown]] = None, weight_only: bool = False) -> ConstraintSystem:
    if unknowns is None:
        unknowns = [(name, i, j) for name in IMAGES for (i, j) in box.points]
    rows: Dict[Tuple[str, Tuple[int, int]], Row] = {}
    for col, (name, i, j) in enumerate(unknowns):
        act = _unit_action(k_auto, field, {name: PlaneElement.monomial(field, i, j)})
        images = E_IMAGES if name in E_IMAGES else F_IMAGES
        for eq, residual in _residuals(act, images, weight_only).items():
            for mon, coef in residual.terms.items():
                rows.setdefault((eq, mon), {})[col] = coef
    return ConstraintSystem(k_auto, box, field, list(unknowns), rows)


def admissible_support(k_auto: Auto, box: SupportBox, field: ScalarField) -> Dict[str, List[Tuple[int, int]]]:
    """
    Box points that survive the k-twisted weight equations for each image.
    An unknown that is the only live entry of some equation is forced to
    zero; this is repeated until nothing changes.
    """
    system = build_system(k_auto, box, field, weight_only=True)
    alive = set(range(len(system.unknowns)))
    rows = list(system.rows.values())
    changed = True
    while changed:
        changed = False
        for row in rows:
            live = [c for c in row if c in alive]
            if len(live) == 1:
                alive.discard(live[0])
                changed = True
    support: Dict[str, List[Tuple[int, int]]] = {n: [] for n in IMAGES}
    for col in sorted(alive):
        name, i, j = system.unknowns[col]
        support[name].append((i, j))
    logger.info("admissible_support: %d of %d unknowns survive", len(alive), len(system.unknowns))
    return support


def _vector_images(unknowns: List[Unknown], vec: Row, field: ScalarField) -> Dict[str, PlaneElement]:
    terms: Dict[str, Dict[Tuple[int, int], object]] = {}
    for col, value in vec.items():
        name, i, j = unknowns[col]
        terms.setdefault(name, {})[(i, j)] = value
    return {name: PlaneElement(field, t) for name, t in terms.items()}


def _parameter(k_auto: Auto, field: ScalarField):
    if not field.is_exact:
        return "1", field.one
    used = set(k_auto.alpha.names()) | set(k_auto.beta.names())
    for name in PARAMETER_NAMES:
        if name in field.names and name not in used:
            return name, field.gen(name)
    raise ConfigError("No free indeterminate is left to parametrise the solution family")


def solve(k_auto: Auto, box: SupportBox, field: ScalarField, prune: bool = True,
          verify: bool = True) -> List[Action]:
    """
    All symmetries with the given k and support in the box, up to the
    one-parameter rescaling e -> s e, f -> s^-1 f (s is an indeterminate in
    exact mode and 1 in numeric mode).
    """
    if prune:
        support = admissible_support(k_auto, box, field)
        unknowns = [(name, i, j) for name in IMAGES for (i, j) in support[name]]
    else:
        unknowns = [(name, i, j) for name in IMAGES for (i, j) in box.points]
    system = build_system(k_auto, box, field, unknowns)

    e_unknowns, e_rows = system.block(E_IMAGES)
    f_unknowns, f_rows = system.block(F_IMAGES)
    e_basis = nullspace(field, e_rows, len(e_unknowns))
    f_basis = nullspace(field, f_rows, len(f_unknowns))
    de, df = len(e_basis), len(f_basis)
    logger.info("solve: %d unknowns, kernel dimensions e=%d f=%d", len(unknowns), de, df)

    q = field.q
    x, y = PlaneElement.x(field), PlaneElement.y(field)
    ratio = field.inv(q - q ** -1)
    kinv = autgroup.inverse(k_auto)
    targets = {
        "x": (autgroup.apply(k_auto, x) - autgroup.apply(kinv, x)).scale(ratio),
        "y": (autgroup.apply(k_auto, y) - autgroup.apply(kinv, y)).scale(ratio),
    }
    no_target = all(t.is_zero for t in targets.values())

    params = {"family": "solver", "k": k_auto.to_json(), "B": box.bound}
    if de == 0 or df == 0:
        if de == 0 and df == 0:
            return [_unit_action(k_auto, field, {}).replace(params=params)] if no_target else []
        if not no_target:
            return []
        raise SolverBudgetExceeded("A free e or f family with vanishing k - k^-1 is not enumerated")
    if no_target:
        raise SolverBudgetExceeded("Both kernels are non-trivial while k - k^-1 vanishes")
    if de != 1 and df != 1:
        raise SolverBudgetExceeded(f"Bilinear block with kernel dimensions {de} x {df}")

    e_parts = [_vector_images(e_unknowns, v, field) for v in e_basis]
    f_parts = [_vector_images(f_unknowns, v, field) for v in f_basis]
    name, s = _parameter(k_auto, field)
    params["parameter"] = name

    # fix the coefficient of the one-dimensional side, solve linearly for the other
    fixed_e = de == 1
    free_parts = f_parts if fixed_e else e_parts
    rows: Dict[Tuple[str, Tuple[int, int]], Row] = {}
    for col, part in enumerate(free_parts):
        images = dict(e_parts[0] if fixed_e else part)
        images.update(part if fixed_e else f_parts[0])
        act = _unit_action(k_auto, field, images)
        for var, g in (("x", x), ("y", y)):
            lhs = apply_gen(act, Generator.E, apply_gen(act, Generator.F, g)) \
                - apply_gen(act, Generator.F, apply_gen(act, Generator.E, g))
            for mon, coef in lhs.terms.items():
                rows.setdefault((var, mon), {})[col] = coef * s
    for var, target in targets.items():
        for mon, coef in target.terms.items():
            rows.setdefault((var, mon), {})[RHS] = coef

    solution, free = solve_affine(field, rows.values(), len(free_parts))
    if solution is None:
        logger.info("solve: bilinear block is inconsistent")
        return []
    if free:
        raise SolverBudgetExceeded(f"Bilinear block leaves {len(free)} free coefficients")

    combined = {n: PlaneElement.zero(field) for n in IMAGES}
    fixed_part = e_parts[0] if fixed_e else f_parts[0]
    for n, img in fixed_part.items():
        combined[n] = combined[n] + img.scale(s)
    for col, value in solution.items():
        for n, img in free_parts[col].items():
            combined[n] = combined[n] + img.scale(value)
    candidate = Action(k_auto, params=params, **combined)

    if verify:
        report = verify_module_algebra(candidate, N=box.bound)
        if not report.passed:
            logger.warning("solve: candidate failed verification at %s", report.failed_axioms())
            return []
    return [candidate]


@dataclass(frozen=True)
class Verdict:
    verdict: str
    order: Optional[int]

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "order": self.order}


NO_SYMMETRY = "NoSymmetryPossible"
INCONCLUSIVE = "Inconclusive"


def finite_order_obstruction(k_auto: Auto, max_order: int = 24) -> Verdict:
    """
    If pi(k) has finite order d > 2 then k e = q^2 e k gives q^{2d} e = e, so
    e = f = 0 and e f - f e = (k - k^-1)/(q - q^-1) cannot hold.
    """
    d = autgroup.order(k_auto, max_order)
    if d is not None and d > 2:
        return Verdict(NO_SYMMETRY, d)
    return Verdict(INCONCLUSIVE, d)


# --- Numeric draws and jobs ---

def draw_units(seed: int, count: int, q_value=QQ(7, 5)) -> List[Tuple[Unit, Unit]]:
    """
    Reproducible rational pairs (alpha, beta) in [1/3, 3], multiplicatively
    independent together with q.
    """
    rng = np.random.default_rng(seed)
    q_unit = Unit.make(q_value)
    pairs: List[Tuple[Unit, Unit]] = []

    def rational() -> Unit:
        while True:
            num, den = int(rng.integers(1, 28)), int(rng.integers(1, 10))
            value = QQ(num, den)
            if QQ(1, 3) <= value <= 3 and value != 1:
                return Unit.make(value)

    while len(pairs) < count:
        alpha, beta = rational(), rational()
        if multiplicatively_independent(alpha, beta, q_unit):
            pairs.append((alpha, beta))
    return pairs


def run_job(job: dict, config) -> dict:
    """
    Executes a job document {"sigma", "alpha", "beta", "B", "mode", "seed", "prune"}.
    In numeric mode without explicit units, config.draws seeded pairs are tried.
    """
    overrides = {}
    if "mode" in job:
        overrides["mode"] = job["mode"]
    if "seed" in job:
        overrides["seed"] = int(job["seed"])
    if "B" in job:
        overrides["box_bound"] = int(job["B"])
    config = config.replace(**overrides) if overrides else config
    field = ScalarField.from_config(config)
    sigma = autgroup.as_matrix(job.get("sigma", "1,0,0,1"))
    box = SupportBox(config.box_bound)
    prune = bool(job.get("prune", True))

    if job.get("alpha") is not None or job.get("beta") is not None or field.is_exact:
        pairs = [(Unit.parse(job.get("alpha", "1")), Unit.parse(job.get("beta", "1")))]
    else:
        pairs = draw_units(config.seed, config.draws, field.values["q"])

    solutions, runs = [], []
    for alpha, beta in pairs:
        k_auto = Auto(sigma, alpha, beta)
        found = solve(k_auto, box, field, prune=prune)
        runs.append({"alpha": str(alpha), "beta": str(beta), "count": len(found)})
        solutions.extend(action_to_json(a) for a in found)
    return {"solutions": solutions, "runs": runs}
