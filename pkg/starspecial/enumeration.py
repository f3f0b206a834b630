# -*- coding: utf-8 -*-
__doc__ = """
Enumeration of the admissible relators of length 9 over x, y, z.

A candidate is a cyclically reduced word that starts with x^2 y or
x^2 y^-1, contains every generator exactly length/rank times (both signs
counted) and has more positive than negative occurrences of every
generator.  The candidates whose star-graph is K_{3,3} are the
(2,9)-special relators.

>>> from starspecial.enumeration import *
>>> words = enumerate_29_special()
>>> len(words), str(words[0]), str(words[-1])
(32, 'xxyxzyyzz', 'xxYzyZxyz')
>>> filter_special(candidates(), 'proxy') == words
True
"""

__all__ = (
    'CandidateConstraints', 'EnumerationReport',
    'candidates', 'brute_force_candidates', 'filter_special',
    'enumerate_29_special', 'enumeration_report', 'FILTER_MODES',
    )

import logging
from collections import namedtuple
from itertools import product

from starspecial.words import Word
from starspecial.stargraph import Presentation, analyze, build, is_knn

logger = logging.getLogger(__name__)

FILTER_MODES = ('exact', 'proxy')


class CandidateConstraints(namedtuple('CandidateConstraints', 'length rank')):
    """Normalisation of the candidate relators.

    The sign rule is strict (more positive than negative occurrences) for
    every generator; with an odd number of occurrences this is the same as
    'at least as many'.
    """
    def __new__(cls, length=9, rank=3):
        if rank < 2:
            raise ValueError("Candidates need rank >= 2, got %d" % rank)
        if length < 3 or length % rank:
            raise ValueError("Length %d is not a multiple of rank %d" % (length, rank))
        return super(CandidateConstraints, cls).__new__(cls, length, rank)

    @property
    def occurrences(self):
        return self.length // self.rank

    @property
    def search_space(self):
        return (2*self.rank) ** self.length

    def admits(self, columns):
        "Check a raw letter sequence against every constraint."
        if len(columns) != self.length:
            return False
        if columns[0] != 0 or columns[1] != 0 or columns[2] not in (2, 3):
            return False
        counts    = [0] * self.rank
        negatives = [0] * self.rank
        for i, letter in enumerate(columns):
            if columns[i-1] ^ 1 == letter:
                return False
            counts[letter >> 1]    += 1
            negatives[letter >> 1] += letter & 1
        occurrences = self.occurrences
        return all(count == occurrences for count in counts) and \
               all(2*negative < occurrences for negative in negatives)


def candidates(constraints=None):
    "Depth-first generation of all candidates in lexicographic order."
    constraints = constraints or CandidateConstraints()
    rank, length = constraints.rank, constraints.length
    max_negative = (constraints.occurrences - 1) // 2
    forced = {0: (0,), 1: (0,), 2: (2, 3)}
    all_letters = tuple(range(2*rank))

    remaining = [constraints.occurrences] * rank
    negatives = [0] * rank
    word = []

    def extend():
        position = len(word)
        if position == length:
            if word[-1] ^ 1 != word[0]:
                yield Word(word, rank)
            return
        for letter in forced.get(position, all_letters):
            generator = letter >> 1
            if not remaining[generator]:
                continue
            if word and word[-1] ^ 1 == letter:
                continue
            inverse = letter & 1
            if inverse and negatives[generator] == max_negative:
                continue
            remaining[generator] -= 1
            negatives[generator] += inverse
            word.append(letter)
            for result in extend():
                yield result
            word.pop()
            remaining[generator] += 1
            negatives[generator] -= inverse

    return extend()

def brute_force_candidates(constraints=None):
    "Naive oracle: filter all (2*rank)^length raw letter sequences."
    constraints = constraints or CandidateConstraints()
    admits = constraints.admits
    for columns in product(range(2*constraints.rank), repeat=constraints.length):
        if admits(columns):
            yield Word(columns, constraints.rank)


def _proxy_filter(word):
    analysis = analyze(build(Presentation([word], word.rank)).simple_graph())
    return analysis.components == 1 and analysis.girth == 4 and analysis.diameters == (2,)

def _exact_filter(word):
    return is_knn(build(Presentation([word], word.rank)), word.rank)

def filter_special(words, mode='exact'):
    """Keep the words whose star-graph is K_{rank,rank}.

    'proxy' tests girth 4 and diameter 2 only, 'exact' recognises the
    complete bipartite graph.
    """
    if mode == 'proxy':
        keep = _proxy_filter
    elif mode == 'exact':
        keep = _exact_filter
    else:
        raise ValueError("Unknown filter mode %r, expected one of %s" % (mode, FILTER_MODES))
    return sorted(word for word in words if keep(word))

def enumerate_29_special():
    return filter_special(candidates(), 'exact')


EnumerationReport = namedtuple('EnumerationReport',
                               'constraints search_space candidates brute_force proxy exact words')

def enumeration_report(constraints=None, mode='exact', cross_check=False):
    """Run the enumeration and record the count at every filter stage.
    'brute_force' is None unless cross_check is set.
    """
    constraints = constraints or CandidateConstraints()
    stream = list(candidates(constraints))
    logger.info("%d candidates of length %d over rank %d",
                len(stream), constraints.length, constraints.rank)
    brute_force = None
    if cross_check:
        brute_force = sum(1 for _ in brute_force_candidates(constraints))
        logger.info("brute force oracle: %d candidates", brute_force)
    proxy = filter_special(stream, 'proxy')
    exact = filter_special(stream, 'exact')
    logger.info("%d words pass the proxy filter, %d the exact filter", len(proxy), len(exact))
    words = exact if mode == 'exact' else proxy
    return EnumerationReport(constraints, constraints.search_space, len(stream),
                             brute_force, len(proxy), len(exact), words)
