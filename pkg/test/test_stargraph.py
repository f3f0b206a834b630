import math
import unittest
from itertools import count

from starspecial.stargraph import (GraphAnalysis, Presentation, SpecialCertificate,
                                   analyze, build, check_special, concise_refine,
                                   hyperbolic_flag, is_complete_bipartite, is_knn,
                                   k33_factorisation, literal_stargraph)
from starspecial.words import (Word, invert, is_cyclically_reduced, parse_compact,
                               power, rotate)


def presentation(texts, rank=3, input_type='compact'):
    return Presentation.parse(texts, rank, input_type)

TWO_COPIES = ['x1 x1 x2 x2 x3 x3 x1 x3 x2', 'x4 x4 x5 x5 x6 x6 x4 x6 x5']

# (relators, rank, input type) -> certificate
SPECIAL_PRESENTATIONS = {
    (('xxyyzzxzy',), 3, 'compact')           : SpecialCertificate(2, 9, 1),
    (('xxyXzyZyz',), 3, 'compact')           : SpecialCertificate(2, 9, 1),
    (('xxYXzyZyz',), 3, 'compact')           : SpecialCertificate(2, 9, 1),
    (('x^2 y^2 z^2 x z y',), 3, 'exponent')  : SpecialCertificate(2, 9, 1),
    (tuple(TWO_COPIES), 6, 'indexed')        : SpecialCertificate(2, 9, 2),
    (('xyz',), 3, 'compact')                 : None,
    (('xxyyzz',), 3, 'compact')              : None,
    (('xyyx',), 2, 'compact')                : None,
    (('xxyyzzxzy', 'xyz'), 3, 'compact')     : None,
    }


def build_special_test_class(presentations):
    def build_test(texts, rank, input_type, expected):
        def test(self):
            self.assertEqual(check_special(presentation(texts, rank, input_type)), expected)
        test.__doc__ = "check_special - %s" % ', '.join(texts)
        return test

    next_test_name = ("test_%05d" % i for i in count()).__next__
    tests = dict( (next_test_name(), build_test(texts, rank, input_type, expected))
                  for (texts, rank, input_type), expected in sorted(presentations.items()) )
    return type('CheckSpecialTest', (unittest.TestCase,), tests)

CheckSpecialTest = build_special_test_class(SPECIAL_PRESENTATIONS)


class BuildTest(unittest.TestCase):
    def test_k33(self):
        g = build(presentation(['xxyyzzxzy']))
        self.assertEqual(len(g.multiplicity), 9)
        self.assertEqual(g.total_multiplicity, 9)
        self.assertEqual(g.multiplicity_profile(), {1: 9})
        self.assertEqual(g.named_edges()[0], ('x', 'X', 1))
        self.assertEqual(len(g.named_edges()), 9)
        self.assertTrue(is_knn(g, 3))
        self.assertEqual(len(g.to_adjlist()), 6)

    def test_power_multiplicities(self):
        g = build(presentation(['xxyyzzxzy']).power(2))
        self.assertEqual(g.multiplicity_profile(), {2: 9})
        self.assertFalse(is_knn(g, 3))
        self.assertTrue(is_complete_bipartite(g.simple_graph(), 3))
        self.assertEqual(check_special(presentation(['xxyyzzxzy']).power(2)),
                         SpecialCertificate(2, 18, 1))

    def test_edge_rule(self):
        # xy contributes {x, y^-1}, the wrap-around yx contributes {y, x^-1}
        g = build(presentation(['xy'], 2))
        self.assertEqual(sorted(g.named_edges()), [('X', 'y', 1), ('x', 'Y', 1)])

    def test_empty_relator(self):
        self.assertRaises(ValueError, Presentation, [Word([], 3)], 3)
        self.assertRaises(ValueError, build, Presentation([Word([], 3)], 3, reduced=False))

    def test_unreduced_relator(self):
        for text in ('xyX', 'xXy', 'xxyY'):
            self.assertRaises(ValueError, Presentation, [parse_compact(text, 3)], 3)
        self.assertRaises(ValueError, presentation, ['xyzX'])
        p = Presentation([parse_compact('xyX', 3)], 3, reduced=False)
        self.assertEqual(concise_refine(p).relators, (parse_compact('y', 3),))

    def test_mixed_ranks(self):
        self.assertRaises(ValueError, Presentation, [parse_compact('xy', 2)], 3)

    def test_literal_stargraph(self):
        for text in ('xxyyzzxzy', 'xxyXzyZyz', 'xyz'):
            w = parse_compact(text, 3)
            self.assertEqual(literal_stargraph(w), build(Presentation([w], 3)))
        # without cyclic reduction the wrap-around Xx gives the loop {x^-1, x^-1}
        w = parse_compact('xyX', 3)
        self.assertIn((w[2], w[2]), literal_stargraph(w).multiplicity)


class AnalyzeTest(unittest.TestCase):
    def test_k33(self):
        self.assertEqual(analyze(build(presentation(['xxyyzzxzy']))),
                         GraphAnalysis(4, (2,), True, 3, 1, True))

    def test_forest(self):
        analysis = analyze(build(presentation(['xy'], 2)))
        self.assertEqual(analysis.girth, math.inf)
        self.assertEqual(analysis.diameters, (1, 1))
        self.assertEqual(analysis.components, 2)
        self.assertTrue(analysis.isomorphic)

    def test_loop(self):
        analysis = analyze(literal_stargraph(parse_compact('xyX', 3)))
        self.assertEqual(analysis.girth, 1)
        self.assertFalse(analysis.bipartite)

    def test_two_components(self):
        p = presentation(TWO_COPIES, 6, 'indexed')
        analysis = analyze(build(p))
        self.assertEqual(analysis.diameters, (2, 2))
        self.assertEqual(analysis.components, 2)
        self.assertTrue(analysis.isomorphic)


class HyperbolicFlagTest(unittest.TestCase):
    def test_flag(self):
        self.assertTrue(hyperbolic_flag(2, 9))
        self.assertFalse(hyperbolic_flag(2, 4))
        self.assertTrue(hyperbolic_flag(3, 6))
        self.assertFalse(hyperbolic_flag(3, 3))
        self.assertTrue(all(hyperbolic_flag(2, n*n) for n in range(3, 20)))

    def test_invalid(self):
        self.assertRaises(ValueError, hyperbolic_flag, 1, 9)
        self.assertRaises(ValueError, hyperbolic_flag, 2, 2)


class ConciseTest(unittest.TestCase):
    def test_refine(self):
        w = parse_compact('xxyyzzxzy', 3)
        p = Presentation([w, rotate(w, 4), invert(w), parse_compact('xX', 3),
                          parse_compact('zxxyyzzxzyZ', 3)], 3, reduced=False)
        self.assertEqual(concise_refine(p).relators, (w,))

    def test_factorisation(self):
        w = parse_compact('xxyXzyZyz', 3)
        self.assertEqual(k33_factorisation(Presentation([w], 3)), (1, 9))
        self.assertEqual(k33_factorisation(Presentation([w, rotate(w, 2)], 3)), (1, 9))
        self.assertEqual(k33_factorisation(Presentation([power(w, 2)], 3)), (1, 18))
        self.assertRaises(ValueError, k33_factorisation, presentation(['xyz']))


class InvarianceTest(unittest.TestCase):
    "Star-graphs of all cyclically reduced words of length <= 5 over two generators."
    @classmethod
    def setUpClass(cls):
        sequences = [ () ]
        for columns in sequences:
            if len(columns) < 5:
                sequences.extend( columns + (column,) for column in range(4) )
        cls.words = [ Word(columns, 2) for columns in sequences[1:]
                      if is_cyclically_reduced(Word(columns, 2)) ]

    def test_inversion(self):
        for w in self.words:
            self.assertEqual(build(Presentation([w], 2)), build(Presentation([invert(w)], 2)),
                             str(w))

    def test_power(self):
        for w in self.words:
            g = build(Presentation([w], 2))
            for n in (2, 3):
                h = build(Presentation([w], 2).power(n))
                self.assertEqual(set(h.multiplicity), set(g.multiplicity), str(w))
                self.assertEqual(h.multiplicity,
                                 dict( (edge, n*count) for edge, count in g.multiplicity.items() ))


class LowRankTest(unittest.TestCase):
    "Presentations with at most two generators are never special."
    def _words(self, rank, max_length):
        "Cyclically reduced words, extended letter by letter."
        stack = [ (column,) for column in range(2*rank) ]
        while stack:
            columns = stack.pop()
            w = Word(columns, rank)
            if is_cyclically_reduced(w):
                yield w
            if len(columns) < max_length:
                stack.extend( columns + (column,) for column in range(2*rank)
                              if column != columns[-1] ^ 1 )

    def test_one_relator(self):
        for rank in (1, 2):
            for w in self._words(rank, 9):
                self.assertIsNone(check_special(Presentation([w], rank)), str(w))

    def test_two_relators(self):
        words = list(self._words(2, 3))
        for u in words:
            for v in words:
                if len(u) == len(v):
                    self.assertIsNone(check_special(Presentation([u, v], 2)))


if __name__ == '__main__':
    unittest.main()
