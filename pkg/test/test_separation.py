import unittest

from starspecial.abelian import AbelianGroup
from starspecial.catalog import builtin_groups, group_names
from starspecial.lowindex import distinguish, invariant_profiles, separation_matrix

Z4_Z9    = AbelianGroup(4, (9,))
Z4_Z3_Z3 = AbelianGroup(4, (3, 3))
Z4_Z2_Z2 = AbelianGroup(4, (2, 2))
Z4_Z7    = AbelianGroup(4, (7,))
Z4_Z2    = AbelianGroup(4, (2,))
Z5       = AbelianGroup(5)
Z5_Z5    = AbelianGroup(5, (5,))
Z6       = AbelianGroup(6)
Z6_Z2    = AbelianGroup(6, (2,))
Z6_Z11   = AbelianGroup(6, (11,))


# (group, index, invariant, groups where it must be absent)
PRESENT_ONLY_IN = (
    (1,  3, Z4_Z9,    range(2, 13)),
    (2,  3, Z4_Z3_Z3, range(3, 13)),
    (3,  3, Z4_Z2_Z2, (4, 5, 6, 7, 8, 10, 11)),
    (4,  3, Z4_Z7,    (5, 6, 7, 8, 9, 10, 12)),
    (4,  3, Z4_Z2,    (11,)),
    (5,  3, Z5,       (6, 7, 9, 10, 12)),
    (11, 3, Z4_Z7,    (5, 8, 12)),
    (6,  3, Z4_Z2,    (8, 9, 11, 12)),
    (7,  3, Z4_Z2,    (8, 9, 11, 12)),
    (8,  3, Z5,       (9, 10, 12)),
    (9,  3, Z4_Z2_Z2, (10, 11)),
    (10, 3, Z4_Z2,    (11, 12)),
    (5,  4, Z5_Z5,    (8,)),
    )

INDEX_FIVE_PRESENT_ONLY_IN = (
    (9,  5, Z6_Z11,   (3, 12)),
    )

# (group, other group, index, invariant): the counts differ
COUNTS_DIFFER = (
    (6, 7,  4, Z5_Z5),
    (6, 10, 4, Z5_Z5),
    )

# (group, index, invariant, number of conjugacy classes)
CLASS_COUNTS = (
    (3,  5, Z6_Z2, 1),
    (12, 5, Z6_Z2, 2),
    (7,  5, Z6_Z2, 3),
    (10, 5, Z6_Z2, 2),
    )


def _profiles(max_index, counting):
    groups = builtin_groups()
    return dict(zip(group_names(),
                    invariant_profiles([ groups[name] for name in group_names() ], max_index,
                                       counting=counting)))

def build_claim_test_class(class_name, max_index, present, differ=(), counts=(),
                           counting='subgroups'):
    def build_present_test(group, k, invariant, absent):
        def test(self):
            self.assertGreater(self.profiles['G%d' % group][k][invariant], 0)
            for other in absent:
                self.assertEqual(self.profiles['G%d' % other][k][invariant], 0, 'G%d' % other)
        test.__doc__ = "G%d index %d - %s absent for %s" % (
            group, k, invariant, ', '.join('G%d' % other for other in absent) or 'none')
        return test

    def build_differ_test(group, other, k, invariant):
        def test(self):
            self.assertNotEqual(self.profiles['G%d' % group][k][invariant],
                                self.profiles['G%d' % other][k][invariant])
        test.__doc__ = "G%d vs G%d index %d - %s" % (group, other, k, invariant)
        return test

    def build_count_test(group, k, invariant, count):
        def test(self):
            self.assertEqual(self.profiles['G%d' % group][k][invariant], count)
        test.__doc__ = "G%d index %d - %d %s of %s" % (group, k, count, counting, invariant)
        return test

    tests = {}
    number = 0
    for builder, claims in ((build_present_test, present),
                            (build_differ_test, differ),
                            (build_count_test, counts)):
        for claim in claims:
            tests['test_%05d' % number] = builder(*claim)
            number += 1

    @classmethod
    def setUpClass(cls):
        cls.profiles = _profiles(max_index, counting)
    tests['setUpClass'] = setUpClass
    return type(class_name, (unittest.TestCase,), tests)


InvariantClaimTest = build_claim_test_class('InvariantClaimTest', 4, PRESENT_ONLY_IN,
                                            COUNTS_DIFFER)

ClassCountClaimTest = build_claim_test_class('ClassCountClaimTest', 5,
                                             INDEX_FIVE_PRESENT_ONLY_IN,
                                             counts=CLASS_COUNTS, counting='classes')


class DistinguishTest(unittest.TestCase):
    def setUp(self):
        self.groups = builtin_groups()

    def test_g3_g12_subgroups(self):
        witness = distinguish(self.groups['G3'], self.groups['G12'], 5)
        self.assertEqual(witness.index, 5)
        self.assertEqual(witness.invariant, Z6)
        self.assertEqual((witness.count_p, witness.count_q), (596, 591))

    def test_g3_g12_classes(self):
        witness = distinguish(self.groups['G3'], self.groups['G12'], 5, counting='classes')
        self.assertIsNotNone(witness)
        self.assertNotEqual(witness.count_p, witness.count_q)

    def test_unknown_counting(self):
        self.assertRaises(ValueError, distinguish, self.groups['G1'], self.groups['G2'], 2,
                          counting='cosets')


class SeparationTest(unittest.TestCase):
    def test_low_bound_incomplete(self):
        groups = builtin_groups()
        matrix = separation_matrix([ groups[name] for name in group_names() ], 2)
        self.assertFalse(matrix.is_complete())
        self.assertTrue(matrix.unseparated())

    def test_g11_g12(self):
        groups = builtin_groups()
        matrix = separation_matrix([ groups['G11'], groups['G12'] ], 3)
        self.assertEqual(matrix[0, 1].index, 3)
        self.assertEqual(matrix.profiles[1][3][Z4_Z7], 0)
        self.assertGreater(matrix.profiles[0][3][Z4_Z7], 0)

    def test_class_counting_matrix(self):
        groups = builtin_groups()
        matrix = separation_matrix([ groups['G3'], groups['G12'] ], 5, counting='classes')
        self.assertEqual(matrix.counting, 'classes')
        self.assertEqual(matrix.profiles[0][5][Z6_Z2], 1)
        self.assertEqual(matrix.profiles[1][5][Z6_Z2], 2)

    def test_full_separation(self):
        groups = builtin_groups()
        matrix = separation_matrix([ groups[name] for name in group_names() ], 5, jobs=4)
        self.assertEqual(len(matrix.cells), 66)
        self.assertTrue(matrix.is_complete(), matrix.unseparated())
        witness = matrix[8, 11]
        self.assertEqual(witness.index, 5)


if __name__ == '__main__':
    unittest.main()
