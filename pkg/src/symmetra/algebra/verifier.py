"""
src/symmetra/algebra/verifier.py

Degree-bounded verification of the module-algebra axioms. Operator
identities are checked on every monomial x^i y^j with |i|, |j| <= N; by
linearity this covers the span of those monomials and nothing more. A
passing report is evidence on a finite box, not a proof for the whole
algebra.

Axiom ids:
    kk1, k1k     k k^-1 = k^-1 k = id
    ke           k e = q^2 e k
    kf           k f = q^-2 f k
    effe         e f - f e = (k - k^-1)/(q - q^-1)
    unit         pi(g)(1) = eps(g) 1
    qpr-k/e/f    pi(g)(yx) = q pi(g)(xy), both sides expanded by the Leibniz rule
    lpr          e, f of x x^-1, x^-1 x, y y^-1, y^-1 y vanish via the Leibniz rule
    leibniz-e/f  operator on a normal-form product equals the Leibniz expansion
"""
import itertools
import logging
from typing import List, Tuple

from symmetra.algebra.actions import Action, LineAction, apply_gen, apply_line_gen
from symmetra.algebra.qalgebra import LineElement, PlaneElement
from symmetra.algebra.report import Report
from symmetra.algebra.scalars import ScalarField
from symmetra.algebra.uqsl2 import Generator, counit

logger = logging.getLogger(__name__)

K, KINV, E, F = Generator.K, Generator.KINV, Generator.E, Generator.F


def box_monomials(N: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(-N, N + 1) for j in range(-N, N + 1)]


def verify_module_algebra(act: Action, N: int = 4, pair_bound: int = 1) -> Report:
    if N < 1:
        raise ValueError("The degree bound N must be at least 1")
    field = act.field
    q = field.q
    ratio = field.inv(q - q ** -1)
    report = Report("module_algebra", scalar_field=field)
    op = lambda g, p: apply_gen(act, g, p)

    for i, j in box_monomials(N):
        m = PlaneElement.monomial(field, i, j)
        k_m, kinv_m = op(K, m), op(KINV, m)
        e_m, f_m = op(E, m), op(F, m)
        report.add("kk1", (i, j), op(K, kinv_m), m)
        report.add("k1k", (i, j), op(KINV, k_m), m)
        report.add("ke", (i, j), op(K, e_m), op(E, k_m).scale(q ** 2))
        report.add("kf", (i, j), op(K, f_m), op(F, k_m).scale(q ** -2))
        report.add("effe", (i, j), op(E, f_m) - op(F, e_m), (k_m - kinv_m).scale(ratio))

    _unit_checks(report, field, lambda g, p: apply_gen(act, g, p), PlaneElement.one(field))
    _qpr_checks(report, act)
    _lpr_checks(report, act)
    _leibniz_checks(report, act, pair_bound)

    failed = len(report.failures())
    logger.info("verify_module_algebra N=%d: %d checks, %d failed", N, len(report.checks), failed)
    return report


def _unit_checks(report: Report, field: ScalarField, op, one):
    for g in (K, KINV, E, F):
        report.add("unit", (), op(g, one), one.scale(counit(field, (g,))))


def _qpr_checks(report: Report, act: Action):
    field = act.field
    q = field.q
    x, y = PlaneElement.x(field), PlaneElement.y(field)
    op = lambda g, p: apply_gen(act, g, p)

    report.add("qpr-k", (), op(K, y) * op(K, x), (op(K, x) * op(K, y)).scale(q))
    lhs = y * op(E, x) + op(E, y) * op(K, x)
    rhs = x * op(E, y) + op(E, x) * op(K, y)
    report.add("qpr-e", (), lhs, rhs.scale(q))
    lhs = op(F, y) * x + op(KINV, y) * op(F, x)
    rhs = op(F, x) * y + op(KINV, x) * op(F, y)
    report.add("qpr-f", (), lhs, rhs.scale(q))


def _lpr_checks(report: Report, act: Action):
    field = act.field
    zero = PlaneElement.zero(field)
    op = lambda g, p: apply_gen(act, g, p)
    for a_key, b_key in (((1, 0), (-1, 0)), ((-1, 0), (1, 0)), ((0, 1), (0, -1)), ((0, -1), (0, 1))):
        a = PlaneElement.monomial(field, *a_key)
        b = PlaneElement.monomial(field, *b_key)
        report.add("lpr", a_key, a * op(E, b) + op(E, a) * op(K, b), zero)
        report.add("lpr", a_key, op(F, a) * b + op(KINV, a) * op(F, b), zero)


def _leibniz_checks(report: Report, act: Action, bound: int):
    field = act.field
    op = lambda g, p: apply_gen(act, g, p)
    grid = box_monomials(bound)
    for (i1, j1), (i2, j2) in itertools.product(grid, grid):
        a = PlaneElement.monomial(field, i1, j1)
        b = PlaneElement.monomial(field, i2, j2)
        ab = a * b
        report.add("leibniz-e", (i1, j1, i2, j2), op(E, ab), a * op(E, b) + op(E, a) * op(K, b))
        report.add("leibniz-f", (i1, j1, i2, j2), op(F, ab), op(F, a) * b + op(KINV, a) * op(F, b))


def support_weight_check(act: Action) -> Report:
    """
    Weight form of the ke/kf relations: every support monomial of e(x)
    (resp. e(y), f(x), f(y)) has weight q^2 alpha (q^2 beta, q^-2 alpha,
    q^-2 beta), where x^i y^j has weight alpha^i beta^j.
    """
    alpha, beta = act.weights()
    field = act.field
    q = field.q
    al, be = field.unit(alpha), field.unit(beta)
    report = Report("support_weight", scalar_field=field)
    targets = {"e_x": q ** 2 * al, "e_y": q ** 2 * be, "f_x": q ** -2 * al, "f_y": q ** -2 * be}
    for name, target in targets.items():
        for i, j in act.image(name).support():
            report.add(f"weight-{name[0]}", (i, j), al ** i * be ** j, target)
    return report


def verify_line_action(act: LineAction, N: int = 6, pair_bound: int = 2) -> Report:
    if N < 1:
        raise ValueError("The degree bound N must be at least 1")
    field = act.field
    q = field.q
    ratio = field.inv(q - q ** -1)
    report = Report("line_action", scalar_field=field)
    op = lambda g, a: apply_line_gen(act, g, a)

    for p in range(-N, N + 1):
        m = LineElement.monomial(field, p)
        k_m, kinv_m = op(K, m), op(KINV, m)
        e_m, f_m = op(E, m), op(F, m)
        report.add("kk1", (p,), op(K, kinv_m), m)
        report.add("k1k", (p,), op(KINV, k_m), m)
        report.add("ke", (p,), op(K, e_m), op(E, k_m).scale(q ** 2))
        report.add("kf", (p,), op(K, f_m), op(F, k_m).scale(q ** -2))
        report.add("effe", (p,), op(E, f_m) - op(F, e_m), (k_m - kinv_m).scale(ratio))

    _unit_checks(report, field, op, LineElement.one(field))

    zero = LineElement.zero(field)
    z, z_inv = LineElement.z(field), LineElement.monomial(field, -1)
    for a, b, w in ((z, z_inv, 1), (z_inv, z, -1)):
        report.add("lpr", (w,), a * op(E, b) + op(E, a) * op(K, b), zero)
        report.add("lpr", (w,), op(F, a) * b + op(KINV, a) * op(F, b), zero)

    for s, t in itertools.product(range(-pair_bound, pair_bound + 1), repeat=2):
        a, b = LineElement.monomial(field, s), LineElement.monomial(field, t)
        report.add("leibniz-e", (s, t), op(E, a * b), a * op(E, b) + op(E, a) * op(K, b))
        report.add("leibniz-f", (s, t), op(F, a * b), op(F, a) * b + op(KINV, a) * op(F, b))

    logger.info("verify_line_action N=%d: %d checks, %d failed", N, len(report.checks), len(report.failures()))
    return report
