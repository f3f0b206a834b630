import unittest

from starspecial import ResourceLimitError
from starspecial.family import (FamilyParams, distinct_pairs, family_report,
                                pair_count_table, presentation, verify_knn, word)
from starspecial.stargraph import (SpecialCertificate, build, check_special,
                                   hyperbolic_flag)
from starspecial.words import is_cyclically_reduced, is_positive


class WordTest(unittest.TestCase):
    def test_small(self):
        self.assertEqual(tuple(word(1)), (0,))
        self.assertEqual(tuple(word(2)), (0, 2, 2, 0))
        self.assertEqual(tuple(word(3)), (0, 2, 2, 0, 4, 4, 2, 4, 0))
        self.assertEqual(word(3).rank, 3)

    def test_length(self):
        for n in range(1, 33):
            self.assertEqual(len(word(n)), n*n)

    def test_positive_and_reduced(self):
        for n in range(2, 33):
            w = word(n)
            self.assertTrue(is_positive(w))
            self.assertTrue(is_cyclically_reduced(w))
            self.assertEqual((w[0], w[-1]), (0, 0))

    def test_invalid(self):
        self.assertRaises(ValueError, word, 0)
        self.assertRaises(ValueError, FamilyParams, 0)
        self.assertRaises(ValueError, FamilyParams, 3, 0)


class PresentationTest(unittest.TestCase):
    def test_lengths(self):
        self.assertEqual(len(presentation(FamilyParams(3)).relators[0]), 9)
        self.assertEqual(len(presentation(FamilyParams(2)).relators[0]), 4)
        self.assertEqual(len(presentation(FamilyParams(3, 2)).relators[0]), 18)
        self.assertEqual(presentation(FamilyParams(5)).rank, 5)


class KnnTest(unittest.TestCase):
    def test_knn(self):
        for n in range(2, 9):
            self.assertEqual(tuple(verify_knn(n)), (True, n*n))

    def test_powers(self):
        check = verify_knn(3, 2)
        self.assertTrue(check.ok)
        self.assertEqual(build(presentation(FamilyParams(3, 2))).multiplicity_profile(), {2: 9})

    def test_special(self):
        for n in range(3, 9):
            self.assertEqual(check_special(presentation(FamilyParams(n))),
                             SpecialCertificate(2, n*n, 1))
            self.assertTrue(hyperbolic_flag(2, n*n))
        self.assertIsNone(check_special(presentation(FamilyParams(2))))
        self.assertFalse(hyperbolic_flag(2, 4))

    def test_invalid(self):
        self.assertRaises(ValueError, verify_knn, 1)


class PairCountTest(unittest.TestCase):
    def test_increments(self):
        for row in pair_count_table(12):
            self.assertEqual(row.increment, row.expected)
            self.assertEqual(row.pairs, row.n * row.n)

    def test_pairs(self):
        self.assertEqual(distinct_pairs(word(2)), 4)
        self.assertEqual(distinct_pairs(word(5)), 25)


class ReportTest(unittest.TestCase):
    def test_n3(self):
        report = family_report(FamilyParams(3))
        self.assertEqual(report.certificate, SpecialCertificate(2, 9, 1))
        self.assertTrue(report.hyperbolic)
        self.assertTrue(report.knn.ok)
        self.assertEqual(report.profile, {1: 9})

    def test_n2(self):
        report = family_report(FamilyParams(2))
        self.assertTrue(report.knn.ok)
        self.assertFalse(report.hyperbolic)
        self.assertIsNone(report.certificate)

    def test_n1(self):
        report = family_report(FamilyParams(1))
        self.assertIsNone(report.certificate)
        self.assertIsNone(report.knn)
        self.assertIsNone(report.hyperbolic)
        self.assertEqual(str(report.presentation.relators[0]), 'x')

    def test_bound(self):
        self.assertRaises(ResourceLimitError, family_report, FamilyParams(65))
        self.assertRaises(ResourceLimitError, family_report, FamilyParams(5), bound=4)


if __name__ == '__main__':
    unittest.main()
