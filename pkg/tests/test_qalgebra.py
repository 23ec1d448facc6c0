import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from symmetra.algebra.qalgebra import LineElement, PlaneElement, invert, monomial_pow
from symmetra.algebra.scalars import ScalarField
from symmetra.core.errors import NotAMonomial, NotAUnit

F = ScalarField.exact()
small = st.integers(-3, 3)


class TestPlane(unittest.TestCase):

    def setUp(self):
        self.x, self.y = PlaneElement.x(F), PlaneElement.y(F)
        self.q = F.q

    def test_commutation_relation(self):
        self.assertEqual(self.y * self.x, (self.x * self.y).scale(self.q))
        self.assertEqual(self.y * self.x, PlaneElement.monomial(F, 1, 1, self.q))

    def test_inverse_of_xy(self):
        xy = self.x * self.y
        inv = invert(xy)
        self.assertEqual(inv, PlaneElement.monomial(F, -1, -1, self.q))
        self.assertEqual(xy * inv, PlaneElement.one(F))
        self.assertEqual(inv * xy, PlaneElement.one(F))

    def test_monomial_pow_formula(self):
        m = PlaneElement.monomial(F, 1, 1, F.gen("t"))
        self.assertEqual(monomial_pow(m, 2), m * m)
        self.assertEqual(monomial_pow(m, 2), PlaneElement.monomial(F, 2, 2, self.q * F.gen("t") ** 2))
        self.assertEqual(monomial_pow(m, 0), PlaneElement.one(F))

    @settings(max_examples=25, deadline=None)
    @given(small, small, small, small)
    def test_monomial_pow_is_a_homomorphism(self, r, s, i, j):
        m = PlaneElement.monomial(F, r, s, F.gen("t"))
        self.assertEqual(monomial_pow(m, i) * monomial_pow(m, j), monomial_pow(m, i + j))

    @settings(max_examples=25, deadline=None)
    @given(small, small, small, small, small, small)
    def test_associativity(self, a, b, c, d, e, f):
        m1 = PlaneElement.monomial(F, a, b)
        m2 = PlaneElement.monomial(F, c, d) + PlaneElement.one(F)
        m3 = PlaneElement.monomial(F, e, f, F.gen("s"))
        self.assertEqual((m1 * m2) * m3, m1 * (m2 * m3))

    def test_only_monomials_are_invertible(self):
        with self.assertRaises(NotAUnit):
            invert(self.x + self.y)
        with self.assertRaises(NotAUnit):
            invert(PlaneElement.zero(F))
        with self.assertRaises(NotAMonomial):
            monomial_pow(self.x + self.y, 2)

    def test_linear_structure(self):
        p = self.x.scale(2) + self.y - self.x
        self.assertEqual(p.support(), [(0, 1), (1, 0)])
        self.assertEqual(p.coefficient((1, 0)), F.one)
        self.assertTrue((p - p).is_zero)
        self.assertEqual(p + 0, p)
        self.assertEqual(p.leading_term(), ((1, 0), F.one))
        self.assertFalse(p.is_monomial())

    def test_text_and_json(self):
        p = PlaneElement.monomial(F, 1, 0, 2) + PlaneElement.monomial(F, -1, 2, self.q)
        self.assertEqual(PlaneElement.parse(F, str(p)), p)
        self.assertEqual(PlaneElement.from_json(F, p.to_json()), p)

    def test_cannot_mix_line_and_plane(self):
        with self.assertRaises(TypeError):
            self.x + LineElement.z(F)


class TestLine(unittest.TestCase):

    def test_units(self):
        z = LineElement.z(F)
        self.assertEqual(z * z.invert(), LineElement.one(F))
        self.assertEqual(z.scale(F.q).monomial_pow(-2), LineElement.monomial(F, -2, F.q ** -2))
        with self.assertRaises(NotAUnit):
            (z + 1).invert()

    def test_commutative(self):
        a = LineElement.monomial(F, 2, F.q) + 1
        b = LineElement.monomial(F, -1, F.gen("t"))
        self.assertEqual(a * b, b * a)

    def test_text(self):
        a = LineElement.monomial(F, 3, F.q) + LineElement.monomial(F, -1, 5)
        self.assertEqual(LineElement.parse(F, str(a)), a)


if __name__ == '__main__':
    unittest.main()
