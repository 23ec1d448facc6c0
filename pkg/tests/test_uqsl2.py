import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from symmetra.algebra.scalars import ScalarField
from symmetra.algebra.uqsl2 import (
    Generator,
    PBWElement,
    TensorElement,
    antipode,
    antipode_left,
    antipode_right,
    apply_counit_left,
    apply_counit_right,
    coproduct,
    counit,
    format_word,
    parse_word,
    pbw_normalize,
)
from symmetra.core.errors import ParseError

F = ScalarField.exact()
q = F.q
words = st.lists(st.sampled_from(list(Generator)), max_size=5).map(tuple)


class TestNormalForm(unittest.TestCase):

    def test_ef(self):
        c = F.inv(q - q ** -1)
        expected = PBWElement.basis(F, 1, 0, 1) + PBWElement.basis(F, 0, 1, 0, c) + PBWElement.basis(F, 0, -1, 0, -c)
        self.assertEqual(pbw_normalize(F, "e f"), expected)

    def test_k_rules(self):
        self.assertEqual(pbw_normalize(F, "e k"), PBWElement.basis(F, 0, 1, 1, q ** -2))
        self.assertEqual(pbw_normalize(F, "k f"), PBWElement.basis(F, 1, 1, 0, q ** -2))
        self.assertEqual(pbw_normalize(F, "k kinv"), PBWElement.one(F))
        self.assertEqual(pbw_normalize(F, "f kinv kinv e"), PBWElement.basis(F, 1, -2, 1))

    def test_linear_combination(self):
        combo = [(F.one, parse_word("e k")), (-q ** -2, parse_word("k e"))]
        self.assertFalse(pbw_normalize(F, combo))

    @settings(max_examples=25, deadline=None)
    @given(words)
    def test_strategy_independence(self, word):
        self.assertEqual(pbw_normalize(F, word, "leftmost"), pbw_normalize(F, word, "rightmost"))

    @settings(max_examples=20, deadline=None)
    @given(words, words)
    def test_reassociation(self, u, v):
        whole = pbw_normalize(F, u + v)
        self.assertEqual(pbw_normalize(F, u) * pbw_normalize(F, v), whole)

    def test_words(self):
        self.assertEqual(parse_word("k e f kinv"), (Generator.K, Generator.E, Generator.F, Generator.KINV))
        self.assertEqual(parse_word("1"), ())
        self.assertEqual(format_word(()), "1")
        with self.assertRaises(ParseError):
            parse_word("e x")


class TestHopfStructure(unittest.TestCase):

    def test_antipode_of_e(self):
        self.assertEqual(antipode(F, Generator.E), PBWElement.basis(F, 0, -1, 1, -q ** 2))
        self.assertEqual(antipode(F, Generator.F), PBWElement.basis(F, 1, 1, 0, -q ** -2))
        self.assertEqual(antipode(F, Generator.K), PBWElement.basis(F, 0, -1, 0))

    def test_antipode_axioms(self):
        for g in (Generator.K, Generator.KINV, Generator.E, Generator.F):
            delta = coproduct(F, (g,))
            expected = PBWElement.one(F).scale(counit(F, (g,)))
            self.assertEqual(antipode_left(delta), expected, g)
            self.assertEqual(antipode_right(delta), expected, g)

    def test_counit_axioms(self):
        for text in ("e", "f k", "e f", "kinv e e f"):
            delta = coproduct(F, text)
            self.assertEqual(apply_counit_left(delta), pbw_normalize(F, text), text)
            self.assertEqual(apply_counit_right(delta), pbw_normalize(F, text), text)

    def test_counit(self):
        self.assertEqual(counit(F, "k kinv k"), F.one)
        self.assertEqual(counit(F, "k e"), F.zero)
        self.assertEqual(counit(F, pbw_normalize(F, "e f")), F.zero)

    def test_coproduct(self):
        unit = TensorElement(F, {((0, 0, 0), (0, 0, 0)): 1})
        self.assertEqual(coproduct(F, "k kinv"), unit)
        expected = TensorElement(F, {((0, 0, 0), (0, 0, 1)): 1, ((0, 0, 1), (0, 1, 0)): 1})
        self.assertEqual(coproduct(F, "e"), expected)
        self.assertEqual(coproduct(F, "e f"), coproduct(F, "e") * coproduct(F, "f"))

    def test_json(self):
        u = pbw_normalize(F, "e f e")
        self.assertEqual(PBWElement.from_json(F, u.to_json()), u)


if __name__ == '__main__':
    unittest.main()
