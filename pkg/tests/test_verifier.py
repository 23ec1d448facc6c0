import unittest

from symmetra.algebra.actions import (
    apply_gen,
    conjugate,
    generic_family,
    line_family,
    minus_identity_family,
)
from symmetra.algebra.autgroup import Auto
from symmetra.algebra.qalgebra import LineElement, PlaneElement
from symmetra.algebra.scalars import ScalarField
from symmetra.algebra.uqsl2 import Generator
from symmetra.algebra.verifier import (
    box_monomials,
    support_weight_check,
    verify_line_action,
    verify_module_algebra,
)
from symmetra.core.errors import NotAWeightAction

F = ScalarField.exact()

GENERIC = [
    (1, 0, "q^2", "t"),
    (0, 2, "t", "q"),
    (2, 0, "q", "t"),
    (1, 2, "q^2*s^-2", "s"),
    (-1, 1, "t", "q^2*t"),
]


class TestClassifiedFamiliesPass(unittest.TestCase):

    def test_generic_families(self):
        for u, v, alpha, beta in GENERIC:
            report = verify_module_algebra(generic_family(F, u, v, alpha, beta), N=6)
            self.assertTrue(report.passed, (u, v, report.failed_axioms()))

    def test_axiom_groups_are_all_checked(self):
        report = verify_module_algebra(generic_family(F, 1, 0, "q^2", "t"), N=1)
        expected = {"kk1", "k1k", "ke", "kf", "effe", "unit", "qpr-k", "qpr-e", "qpr-f", "lpr",
                    "leibniz-e", "leibniz-f"}
        self.assertEqual(set(report.axioms()), expected)
        self.assertEqual(sum(1 for c in report.checks if c.axiom == "ke"), len(box_monomials(1)))

    def test_worked_commutator_identity(self):
        act = generic_family(F, 1, 0, "q^2", "t")
        x = PlaneElement.x(F)
        q = F.q
        lhs = apply_gen(act, Generator.E, apply_gen(act, Generator.F, x)) \
            - apply_gen(act, Generator.F, apply_gen(act, Generator.E, x))
        self.assertEqual(lhs, x.scale(q + q ** -1))

    def test_minus_identity_family(self):
        for alpha, beta in (("t", "s"), ("q", "t"), ("2*t", "s^-1")):
            report = verify_module_algebra(minus_identity_family(F, alpha, beta), N=6)
            self.assertTrue(report.passed, (alpha, beta, report.failed_axioms()))

    def test_conjugates_stay_symmetries(self):
        act = generic_family(F, 1, 0, "q^2", "t")
        for phi in (Auto.units_only("s", "r"), Auto.from_matrix("0,-1,1,0"), Auto.from_matrix("1,1,0,1")):
            self.assertTrue(verify_module_algebra(conjugate(act, phi), N=2).passed, phi)

    def test_support_weights(self):
        for u, v, alpha, beta in GENERIC:
            self.assertTrue(support_weight_check(generic_family(F, u, v, alpha, beta)).passed)
        with self.assertRaises(NotAWeightAction):
            support_weight_check(minus_identity_family(F, "t", "s"))

    def test_degree_bound(self):
        with self.assertRaises(ValueError):
            verify_module_algebra(generic_family(F, 1, 0, "q^2", "t"), N=0)


class TestMutationsFail(unittest.TestCase):
    """Every single change to a verified family must be caught at N = 2."""

    def setUp(self):
        self.act = generic_family(F, 1, 0, "q^2", "t")

    def assertFails(self, act, *axioms):
        report = verify_module_algebra(act, N=2)
        self.assertFalse(report.passed)
        for axiom in axioms:
            self.assertIn(axiom, report.failed_axioms())

    def test_scaled_images(self):
        for name in ("e_x", "e_y", "f_x", "f_y"):
            broken = self.act.replace(**{name: self.act.image(name).scale(2)})
            self.assertFails(broken, "effe")

    def test_negated_and_q_scaled_images(self):
        # with the doubled images above: twelve single-image mutations
        for name in ("e_x", "e_y", "f_x", "f_y"):
            for factor in (-1, F.q):
                broken = self.act.replace(**{name: self.act.image(name).scale(factor)})
                self.assertFails(broken, "qpr-e" if name.startswith("e") else "qpr-f")

    def test_shifted_exponents(self):
        for name, axiom in (("e_x", "ke"), ("e_y", "ke"), ("f_x", "kf"), ("f_y", "kf")):
            (i, j), c = next(iter(self.act.image(name).terms.items()))
            for di, dj in ((1, 0), (0, 1)):
                moved = PlaneElement.monomial(F, i + di, j + dj, c)
                self.assertFails(self.act.replace(**{name: moved}), axiom)

    def test_wrong_k(self):
        broken = self.act.replace(k_auto=Auto.units_only("q", "t"))
        self.assertFails(broken, "ke")

    def test_report_tables(self):
        broken = self.act.replace(e_x=self.act.e_x.scale(2))
        report = verify_module_algebra(broken, N=1)
        frame = report.to_frame()
        self.assertEqual(list(frame.columns), ["axiom", "witness", "passed"])
        self.assertEqual(len(frame), len(report.checks))
        summary = report.summary()
        self.assertGreater(summary.loc["effe", "failed"], 0)
        self.assertEqual(summary.loc["kk1", "failed"], 0)
        doc = report.to_json(failures_only=True)
        self.assertFalse(doc["passed"])
        self.assertEqual(len(doc["checks"]), doc["failed"])
        self.assertIn("lhs", doc["checks"][0])


class TestLineActions(unittest.TestCase):

    def test_families_pass(self):
        for args in (("weight", "q^2", "a", 2), ("weight", "q", "a", 3), ("weight", "q^-2", "b", 0),
                     ("sign", "-1"), ("sign", "1"), ("inversion", "t")):
            report = verify_line_action(line_family(F, *args), N=8)
            self.assertTrue(report.passed, (args, report.failed_axioms()))

    def test_vanishing_f_fails(self):
        act = line_family(F, "weight", "q^2", "a", 2)
        report = verify_line_action(act.replace(f_z=LineElement.zero(F)), N=2)
        self.assertIn("effe", report.failed_axioms())

    def test_wrong_f_constant_fails(self):
        act = line_family(F, "weight", "q^2", "a", 2)
        q, a, g = F.q, F.gen("a"), F.q ** 2
        wrong = act.replace(f_z=LineElement.monomial(F, 0, q ** 3 * (g - 1) / a))
        report = verify_line_action(wrong, N=2)
        self.assertIn("effe", report.failed_axioms())


if __name__ == '__main__':
    unittest.main()
