import random
import unittest
from itertools import count

from starspecial.catalog import admissible_words, composition_rows, relator_classes
from starspecial.classify import (INVERT, Move, Witness, find_witness,
                                  generator_expressions, orbit, partition, replay,
                                  symmetry_group, verify_composition_table,
                                  witness_parser)
from starspecial.wordparser import ParseException
from starspecial.words import (apply, identity, invert, parse_compact,
                               parse_exponent, phi, rho, rotate)


# witness text -> printed form after parsing, or the exception raised
WITNESSES = {
    'phi_x.phi_y;rot 5'                 : 'phi_x.phi_y;rot 5',
    'rho_x.rho_y.rho_z;invert;phi_z;rot': 'rho_x.rho_y.rho_z;invert;phi_z;rot',
    'invert'                            : 'invert',
    'id'                                : 'id',
    ''                                  : '',
    'phi_x.rho_z.rho_y.rho_x;invert;rot': 'phi_x.rho_z.rho_y.rho_x;invert;rot',
    'phi_w'                             : ParseException,
    'rot five'                          : ParseException,
    'phi_x;;rot'                        : ParseException,
    }


def build_witness_test_class(witnesses):
    def build_test(text, expected):
        if isinstance(expected, type):
            def test(self):
                self.assertRaises(expected, witness_parser.parse, text)
        else:
            def test(self):
                witness = witness_parser.parse(text)
                self.assertTrue(isinstance(witness, Witness))
                # compositions print as their shortest expression
                reparsed = witness_parser.parse(str(witness))
                self.assertEqual(reparsed, witness)
        test.__doc__ = "witness - %r" % text
        return test

    next_test_name = ("test_%05d" % i for i in count()).__next__
    tests = dict( (next_test_name(), build_test(text, expected))
                  for text, expected in sorted(witnesses.items()) )
    return type('WitnessParserTest', (unittest.TestCase,), tests)

WitnessParserTest = build_witness_test_class(WITNESSES)


class SymmetryTest(unittest.TestCase):
    def test_group(self):
        group = symmetry_group()
        self.assertEqual(len(group), 48)
        self.assertEqual(len(set(group)), 48)
        self.assertEqual(group[0], identity(3))

    def test_expressions(self):
        for sigma, expression in generator_expressions().items():
            composed = identity(3)
            for name in expression:
                kind, generator = name.split('_')
                composed = composed.then((phi if kind == 'phi' else rho)('xyz'.index(generator)))
            self.assertEqual(composed, sigma)

    def test_moves(self):
        w = parse_compact('xxyxzyyzz', 3)
        self.assertEqual(INVERT.apply_to(w), invert(w))
        self.assertEqual(Move('rotate', 5).apply_to(w), rotate(w, 5))
        self.assertEqual(str(Move('sigma', identity(3))), 'id')
        self.assertEqual(str(Move('rotate', None)), 'rot')


class OrbitTest(unittest.TestCase):
    def test_orbit_closed(self):
        w = parse_compact('xxyXzyZyz', 3)
        words = orbit(w)
        for v in words:
            self.assertIn(invert(v), words)
            self.assertIn(rotate(v, 1), words)
            self.assertIn(apply(phi(1), v), words)

    def test_invalid(self):
        self.assertRaises(ValueError, orbit, parse_compact('xyX', 3))
        self.assertRaises(ValueError, orbit, parse_compact('xy', 2))


class PartitionTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.classes = partition(admissible_words())

    def test_sizes(self):
        self.assertEqual([ c.size for c in self.classes ], [6, 6] + [2] * 10)

    def test_memberships(self):
        self.assertEqual(set( frozenset(c.members) for c in self.classes ),
                         set( frozenset(members) for members in relator_classes() ))

    def test_representatives(self):
        self.assertEqual(str(self.classes[0].representative), 'xxyxzyyzz')
        self.assertEqual(str(self.classes[1].representative), 'xxyxzzyyz')
        for c in self.classes:
            self.assertEqual(c.representative, min(c.members))

    def test_witnesses_replay(self):
        for c in self.classes:
            for member in c.members:
                witness = c.witnesses[member]
                self.assertIsNotNone(witness)
                self.assertEqual(witness.replay(member), c.representative)

    def test_input_order(self):
        words = admissible_words()
        self.assertEqual(partition(reversed(words)), self.classes)
        for seed in range(3):
            shuffled = list(words)
            random.Random(seed).shuffle(shuffled)
            self.assertEqual(partition(shuffled), self.classes, seed)

    def test_single_word(self):
        classes = partition([parse_compact('xxyyzzxzy', 3)])
        self.assertEqual(len(classes), 1)
        self.assertEqual(classes[0].witnesses[classes[0].representative], Witness())

    def test_duplicates(self):
        w = parse_compact('xxyyzzxzy', 3)
        self.assertRaises(ValueError, partition, [w, w])


class WitnessSearchTest(unittest.TestCase):
    def test_across_classes(self):
        first, second = relator_classes()[:2]
        self.assertIsNone(find_witness(first[0], second[0]))

    def test_within_class(self):
        for members in relator_classes():
            for member in members[1:]:
                witness = find_witness(member, members[0])
                self.assertEqual(witness.replay(member), members[0])


class CompositionTableTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.checks = verify_composition_table()

    def test_all_rows_validate(self):
        for check in self.checks:
            self.assertTrue(check.ok, '%s %s' % (check.member, check.composition))
            self.assertEqual(check.witness.replay(check.member),
                             [ t for n, m, c, t in composition_rows() if n == check.number ][0])

    def test_row_counts(self):
        listed = [ check for check in self.checks if not check.generated ]
        self.assertEqual(len(listed), 19)
        self.assertEqual(len([ check for check in listed if check.needs_inversion ]), 3)
        generated = [ check for check in self.checks if check.generated ]
        self.assertEqual([ (check.number, str(check.member)) for check in generated ],
                         [ (1, 'xxyzxzzyy') ])

    def test_literal_row(self):
        result = replay(parse_exponent('x^2 y x z y^2 z^2', 3), 'phi_x.phi_y;rot',
                        parse_exponent('x^2 y^2 z^2 x z y', 3))
        self.assertTrue(result.ok)
        self.assertFalse(result.needs_inversion)
        self.assertEqual(str(result.witness), 'phi_x.phi_y;rot 5')

    def test_failed_replay(self):
        result = replay(parse_exponent('x^2 y x z y^2 z^2', 3), 'phi_x',
                        parse_exponent('x^2 y^2 z^2 x z y', 3))
        self.assertFalse(result.ok)


if __name__ == '__main__':
    unittest.main()
