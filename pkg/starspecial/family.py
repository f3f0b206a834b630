# -*- coding: utf-8 -*-
__doc__ = """
The recursive family of positive one-relator presentations with star-graph
K_{n,n}:

    w_1 = x1,    w_n = w_{n-1} x_n (x_n x_{n-1}) (x_n x_{n-2}) ... (x_n x_1)

and P(n, alpha) = < x1..xn | w_n^alpha >.

>>> from starspecial.family import *
>>> from starspecial.wordbuilder import word_formatters
>>> word_formatters['indexed'].build(word(2))
'x1 x2 x2 x1'
>>> word_formatters['exponent'].build(word(4))
'x1 x2^2 x1 x3^2 x2 x3 x1 x4^2 x3 x4 x2 x4 x1'
>>> verify_knn(5, 1)
KnnCheck(ok=True, distinct_pairs=25)
>>> report = family_report(FamilyParams(3))
>>> report.certificate, report.hyperbolic
(SpecialCertificate(m=2, k=9, nu=1), True)
"""

__all__ = (
    'FamilyParams', 'KnnCheck', 'PairCount', 'FamilyReport',
    'word', 'presentation', 'verify_knn', 'distinct_pairs',
    'pair_count_table', 'family_report',
    )

from collections import namedtuple

from starspecial import FAMILY_MAX_N, ResourceLimitError
from starspecial.stargraph import (Presentation, build, check_special,
                                   hyperbolic_flag, is_complete_bipartite, is_knn)
from starspecial.words import Letter, Word, power


class FamilyParams(namedtuple('FamilyParams', 'n alpha')):
    def __new__(cls, n, alpha=1):
        if n < 1:
            raise ValueError("The family needs n >= 1, got %r" % (n,))
        if alpha < 1:
            raise ValueError("The relator power must be >= 1, got %r" % (alpha,))
        return super(FamilyParams, cls).__new__(cls, n, alpha)


def _generators(n):
    "Generator indices of w_n, built iteratively."
    generators = [0]
    for m in range(1, n):
        generators.append(m)
        for j in range(1, m+1):
            generators.extend( (m, m-j) )
    return generators

def word(n):
    if n < 1:
        raise ValueError("The family needs n >= 1, got %r" % (n,))
    return Word([ Letter(g) for g in _generators(n) ], n)

def presentation(params):
    return Presentation([ power(word(params.n), params.alpha) ], params.n)


def distinct_pairs(w):
    "Number of distinct cyclically adjacent pairs (a, b), that is edges {a, b^-1}."
    return len(set( (w[i-1], w[i]) for i in range(len(w)) ))

KnnCheck = namedtuple('KnnCheck', 'ok distinct_pairs')

def verify_knn(n, alpha=1):
    """Star-graph of P(n, alpha) against K_{n,n}.  For alpha > 1 every edge
    must carry multiplicity alpha.
    """
    if n < 2:
        raise ValueError("K_{n,n} verification needs n >= 2, got %r" % (n,))
    p = presentation(FamilyParams(n, alpha))
    g = build(p)
    if alpha == 1:
        ok = is_knn(g, n)
    else:
        ok = len(g.multiplicity) == n*n and \
             set(g.multiplicity.values()) == set([alpha]) and \
             is_complete_bipartite(g.simple_graph(), n)
    return KnnCheck(ok, distinct_pairs(p.relators[0]))


PairCount = namedtuple('PairCount', 'n pairs increment expected')

def pair_count_table(n):
    "Distinct pairs of w_m for m = 1..n against the predicted increment 2m-1."
    rows = []
    previous = 0
    for m in range(1, n+1):
        pairs = distinct_pairs(word(m))
        rows.append(PairCount(m, pairs, pairs - previous, 2*m - 1))
        previous = pairs
    return rows


FamilyReport = namedtuple('FamilyReport',
                          'params presentation certificate knn profile hyperbolic pairs')

def family_report(params, bound=None):
    bound = FAMILY_MAX_N if bound is None else bound
    if params.n > bound:
        raise ResourceLimitError('n', params.n, bound)
    p = presentation(params)
    knn = verify_knn(params.n, params.alpha) if params.n >= 2 else None
    # K_{n,n} has diameter 2 and girth 4
    hyperbolic = hyperbolic_flag(2, len(p.relators[0])) if knn and knn.ok else None
    return FamilyReport(params, p, check_special(p), knn,
                        build(p).multiplicity_profile(), hyperbolic,
                        pair_count_table(params.n))
