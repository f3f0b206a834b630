import doctest
import unittest

import starspecial
from starspecial import (abelian, catalog, classify, enumeration, family,
                         lowindex, report, stargraph, wordbuilder, wordparser, words)

MODULES = (starspecial, words, wordparser, wordbuilder, stargraph, catalog,
           enumeration, classify, abelian, lowindex, family, report)


def load_tests(loader, tests, ignore):
    for module in MODULES:
        tests.addTests(doctest.DocTestSuite(module))
    return tests


if __name__ == '__main__':
    unittest.main()
