import unittest

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ

from symmetra.algebra.actions import generic_family, rescaling_factor
from symmetra.algebra.autgroup import MINUS_IDENTITY, Auto
from symmetra.algebra.scalars import ScalarField, Unit, multiplicatively_independent
from symmetra.algebra.search import (
    INCONCLUSIVE,
    NO_SYMMETRY,
    SupportBox,
    admissible_support,
    build_system,
    draw_units,
    finite_order_obstruction,
    run_job,
    solve,
)
from symmetra.algebra.verifier import verify_module_algebra
from symmetra.core.config import JobConfig

F = ScalarField.exact()


class TestSupportBox(unittest.TestCase):

    def test_points(self):
        box = SupportBox(1)
        self.assertEqual(len(box.points), 9)
        self.assertIn((1, -1), box)
        self.assertNotIn((2, 0), box)
        with self.assertRaises(ValueError):
            SupportBox(0)


class TestAdmissibleSupport(unittest.TestCase):

    def test_weight_k(self):
        support = admissible_support(Auto.units_only("q^2", "t"), SupportBox(2), F)
        self.assertEqual(support, {"e_x": [(2, 0)], "e_y": [(1, 1)], "f_x": [(0, 0)], "f_y": [(-1, 1)]})

    def test_system_shape(self):
        system = build_system(Auto.units_only("q^2", "t"), SupportBox(1), F)
        self.assertEqual(len(system.unknowns), 4 * 9)
        unknowns, rows = system.block(("e_x", "e_y"))
        self.assertEqual(len(unknowns), 18)
        self.assertTrue(all(max(r) < 18 for r in rows))


class TestSolve(unittest.TestCase):

    def test_recovers_the_generic_family(self):
        k = Auto.units_only("q^2", "t")
        found = solve(k, SupportBox(3), F)
        self.assertEqual(len(found), 1)
        act = found[0]
        self.assertEqual(act.params["family"], "solver")
        self.assertEqual(act.params["parameter"], "a")
        reference = generic_family(F, 1, 0, "q^2", "t")
        self.assertIsNotNone(rescaling_factor(reference, act))
        self.assertTrue(verify_module_algebra(act, N=2).passed)

    def test_pruning_does_not_change_the_answer(self):
        k = Auto.units_only("q^2", "t")
        self.assertEqual(solve(k, SupportBox(2), F, prune=False), solve(k, SupportBox(2), F))

    def test_rotation_has_no_symmetry(self):
        self.assertEqual(solve(Auto.from_matrix("0,-1,1,0"), SupportBox(1), F), [])

    def test_minus_identity_gives_the_zero_action(self):
        found = solve(Auto(MINUS_IDENTITY, "t", "s"), SupportBox(3), F)
        self.assertEqual(len(found), 1)
        act = found[0]
        self.assertTrue(all(act.image(n).is_zero for n in ("e_x", "e_y", "f_x", "f_y")))


class TestObstruction(unittest.TestCase):

    def test_verdicts(self):
        verdict = finite_order_obstruction(Auto.from_matrix("0,-1,1,0"))
        self.assertEqual(verdict.verdict, NO_SYMMETRY)
        self.assertEqual(verdict.order, 4)
        self.assertEqual(finite_order_obstruction(Auto.from_matrix("-1,-1,1,0")).order, 3)
        verdict = finite_order_obstruction(Auto.units_only("q^2", "t"))
        self.assertEqual(verdict.to_json(), {"verdict": INCONCLUSIVE, "order": None})
        verdict = finite_order_obstruction(Auto(MINUS_IDENTITY, "t", "s"))
        self.assertEqual(verdict.to_json(), {"verdict": INCONCLUSIVE, "order": 2})

    def test_finite_order_for_every_unit_pair(self):
        for sigma, order in (("-1,-1,1,0", 3), ("0,-1,1,0", 4), ("1,-1,1,0", 6)):
            for alpha, beta in (("1", "1"), ("q", "t"), ("2*t", "s")):
                verdict = finite_order_obstruction(Auto(sigma, alpha, beta))
                self.assertEqual(verdict.verdict, NO_SYMMETRY, (sigma, alpha, beta))
                self.assertEqual(verdict.order, order, (sigma, alpha, beta))


class TestNumericDraws(unittest.TestCase):

    def test_reproducible(self):
        self.assertEqual(draw_units(3, 4), draw_units(3, 4))

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10_000))
    def test_draws_are_generic(self, seed):
        q = Unit.make(QQ(7, 5))
        for alpha, beta in draw_units(seed, 2):
            for u in (alpha, beta):
                self.assertTrue(QQ(1, 3) <= u.coeff <= 3)
                self.assertNotEqual(u.coeff, 1)
            self.assertTrue(multiplicatively_independent(alpha, beta, q))

    def test_numeric_jobs_find_nothing(self):
        for sigma in ("1,1,0,1", "-1,1,0,-1", "2,1,1,1"):
            result = run_job({"sigma": sigma, "B": 3}, JobConfig(mode="numeric", seed=7))
            self.assertEqual(result["solutions"], [], sigma)
            self.assertEqual(len(result["runs"]), 3)
            self.assertTrue(all(run["count"] == 0 for run in result["runs"]), sigma)

    def test_exact_job(self):
        result = run_job({"alpha": "q^2", "beta": "t", "B": 2}, JobConfig())
        self.assertEqual(len(result["solutions"]), 1)
        self.assertEqual(result["runs"], [{"alpha": "q^2", "beta": "t", "count": 1}])


if __name__ == '__main__':
    unittest.main()
