import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from symmetra.algebra import autgroup
from symmetra.algebra.autgroup import (
    IDENTITY,
    MINUS_IDENTITY,
    Auto,
    LineAuto,
    SigmaPowerForm,
    as_matrix,
    compose,
    fo_conjugator,
    inverse,
    mat_mul,
    mat_power_iterated,
    sigma_power,
    sl2z_matrices,
    twist_units,
)
from symmetra.algebra.qalgebra import LineElement, PlaneElement
from symmetra.algebra.scalars import ScalarField, Unit
from symmetra.core.errors import NotHyperbolic, ParseError

F = ScalarField.exact()
MATRICES = sl2z_matrices(1)
small = st.integers(-2, 2)


def sample_auto(sigma):
    return Auto(sigma, Unit.parse("q"), Unit.parse("2*t"))


class TestMatrices(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(as_matrix("0,-1,1,0"), ((0, -1), (1, 0)))
        self.assertEqual(as_matrix([[2, 1], [1, 1]]), ((2, 1), (1, 1)))
        with self.assertRaises(ParseError):
            as_matrix("1,2")
        with self.assertRaises(ValueError):
            Auto(((2, 0), (0, 1)))

    def test_sl2z_enumeration(self):
        self.assertIn(IDENTITY, MATRICES)
        self.assertIn(MINUS_IDENTITY, MATRICES)
        self.assertTrue(all(autgroup.det(m) == 1 for m in MATRICES))

    def test_twist_is_a_right_action(self):
        units = (Unit.parse("q"), Unit.parse("t^2"))
        a, b = ((2, 1), (1, 1)), ((0, -1), (1, 0))
        self.assertEqual(twist_units(twist_units(units, a), b), twist_units(units, mat_mul(a, b)))


class TestAutomorphisms(unittest.TestCase):

    def test_orders(self):
        self.assertEqual(autgroup.order(Auto.from_matrix("0,-1,1,0")), 4)
        self.assertEqual(autgroup.order(Auto.from_matrix("1,-1,1,0")), 6)
        self.assertEqual(autgroup.order(Auto.from_matrix("-1,-1,1,0")), 3)
        self.assertEqual(autgroup.order(Auto(MINUS_IDENTITY, "t", "s")), 2)
        self.assertEqual(autgroup.order(Auto.identity()), 1)
        self.assertIsNone(autgroup.order(Auto.units_only("q^2", "t")))
        self.assertIsNone(autgroup.order(Auto.from_matrix("2,1,1,1"), max_order=50))

    def test_inverse(self):
        for sigma in MATRICES:
            phi = sample_auto(sigma)
            self.assertTrue(compose(phi, inverse(phi)).is_identity, sigma)
            self.assertTrue(compose(inverse(phi), phi).is_identity, sigma)

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(MATRICES), small, small, small, small)
    def test_apply_is_multiplicative(self, sigma, i, j, k, l):
        phi = sample_auto(sigma)
        a = PlaneElement.monomial(F, i, j)
        b = PlaneElement.monomial(F, k, l)
        self.assertEqual(autgroup.apply(phi, a * b), autgroup.apply(phi, a) * autgroup.apply(phi, b))
        self.assertEqual(autgroup.apply(phi, a), autgroup.monomial_image(phi, i, j, F))

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(MATRICES), st.sampled_from(MATRICES), small, small)
    def test_composition_law(self, s1, s2, i, j):
        phi1 = sample_auto(s1)
        phi2 = Auto(s2, Unit.parse("s"), Unit.parse("q^-1"))
        m = PlaneElement.monomial(F, i, j)
        self.assertEqual(autgroup.apply(compose(phi1, phi2), m),
                         autgroup.apply(phi1, autgroup.apply(phi2, m)))

    def test_power(self):
        phi = Auto.from_matrix("0,-1,1,0")
        self.assertEqual(autgroup.power(phi, 2), Auto(MINUS_IDENTITY))
        self.assertEqual(autgroup.power(phi, -1), inverse(phi))

    def test_conjugator_for_trace_one(self):
        for text in ("1,-1,1,0", "0,1,-1,1", "2,-1,3,-1"):
            sigma = as_matrix(text)
            alpha, beta = Unit.parse("q"), Unit.parse("t")
            a2, b2 = fo_conjugator(sigma, alpha, beta)
            d = Auto.units_only(a2, b2)
            conjugated = compose(d, compose(Auto(sigma), inverse(d)))
            self.assertEqual(conjugated, Auto(sigma, alpha, beta), text)

    def test_json(self):
        phi = sample_auto(((2, 1), (1, 1)))
        self.assertEqual(Auto.from_json(phi.to_json()), phi)


class TestSigmaPower(unittest.TestCase):

    def test_examples(self):
        sigma = ((2, 1), (1, 1))
        self.assertEqual(sigma_power(sigma, 2), ((5, 3), (3, 2)))
        self.assertEqual(sigma_power(sigma, -1), ((1, -1), (-1, 2)))
        self.assertEqual(sigma_power(sigma, 0), IDENTITY)

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(["2,1,1,1", "3,2,1,1", "-3,1,-1,0", "1,2,1,3"]), st.integers(-20, 20))
    def test_matches_iterated_products(self, text, N):
        self.assertEqual(sigma_power(text, N), mat_power_iterated(as_matrix(text), N))

    def test_identities(self):
        form = SigmaPowerForm.of("2,1,1,1")
        self.assertTrue(form.check_identities())

    def test_not_hyperbolic(self):
        for text in ("0,-1,1,0", "1,1,0,1", "1,0,0,1"):
            with self.assertRaises(NotHyperbolic):
                sigma_power(text, 3)


class TestLineAutomorphisms(unittest.TestCase):

    def test_group_law(self):
        psi = LineAuto(-1, Unit.parse("q"))
        self.assertEqual(psi.compose(psi.inverse()), LineAuto.identity())
        z = LineElement.z(F)
        chi = LineAuto(1, Unit.parse("t"))
        self.assertEqual(psi.compose(chi).apply(z), psi.apply(chi.apply(z)))

    def test_apply(self):
        psi = LineAuto(-1, Unit.parse("q"))
        self.assertEqual(psi.apply(LineElement.monomial(F, 2)), LineElement.monomial(F, -2, F.q ** 2))


if __name__ == '__main__':
    unittest.main()
