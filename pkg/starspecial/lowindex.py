# -*- coding: utf-8 -*-
__doc__ = """
Low-index subgroups, their abelianizations and the separation of groups
by abelian invariants.

Subgroups of index k correspond one to one to standardized complete coset
tables: cosets 0..k-1, base coset 0, numbered in order of first appearance
when the table is read row by row with the columns x, x^-1, y, y^-1, ...
The search fills the first undefined entry and closes relator cycles by
deduction after every assignment.

>>> from starspecial.stargraph import Presentation
>>> from starspecial.lowindex import *
>>> G = Presentation.parse(['xxyyzzxzy'], 3)
>>> len(low_index(G, 2))
4
>>> print(abelianization(schreier_presentation(G, low_index(G, 1)[0])))
Z^2 + Z_3
>>> free = Presentation([], 1)
>>> [ t.rows for t in low_index(free, 2) ]
[((0, 0),), ((1, 1), (0, 0))]
"""

__all__ = (
    'CosetTable', 'SubgroupPresentation', 'SeparationWitness', 'SeparationMatrix',
    'low_index', 'schreier_presentation', 'abelianization',
    'invariant_multiset', 'invariant_profile', 'invariant_profiles',
    'distinguish', 'separation_matrix', 'torsion_variants', 'SEARCH_MODES',
    'COUNTING_MODES',
    )

import logging
import time
from collections import Counter, namedtuple
from multiprocessing import Pool

from starspecial import MAX_INDEX_BOUND, ResourceLimitError
from starspecial.abelian import abelian_group
from starspecial.words import Word, exponent_vector, free_reduce, invert, rotations

logger = logging.getLogger(__name__)

SEARCH_MODES = ('all', 'conjugacy-classes')
COUNTING_MODES = ('subgroups', 'classes')

UNDEFINED = -1


class CosetTable(object):
    """Complete coset table: rows[coset][column] is the image coset,
    column 2g for generator g and 2g+1 for its inverse.
    """
    def __init__(self, rows, rank):
        self.rank = rank
        self.rows = tuple(tuple(row) for row in rows)

    @property
    def index(self):
        return len(self.rows)

    @property
    def key(self):
        return (self.index, self.rows)

    def trace(self, coset, word):
        rows = self.rows
        for letter in word:
            coset = rows[coset][letter]
        return coset

    def rerooted(self, base):
        "The standardized table of the same action with the given base coset."
        rows = self.rows
        order = [base]
        number = {base: 0}
        for coset in order:
            for image in rows[coset]:
                if image not in number:
                    number[image] = len(order)
                    order.append(image)
        return CosetTable([ [ number[image] for image in rows[coset] ] for coset in order ],
                          self.rank)

    def is_standardized(self):
        return self.rerooted(0) == self

    def is_complete(self):
        k = self.index
        return all(len(row) == 2*self.rank and all(0 <= image < k for image in row)
                   for row in self.rows)

    def is_valid(self, p):
        "Complete, mutually inverse columns, relator closed and standardized."
        if not self.is_complete():
            return False
        rows = self.rows
        for coset, row in enumerate(rows):
            if any(rows[image][column ^ 1] != coset for column, image in enumerate(row)):
                return False
        for relator in p.relators:
            if any(self.trace(coset, relator) != coset for coset in range(self.index)):
                return False
        return self.is_standardized()

    def normalizer_cosets(self):
        "Cosets whose rerooted table equals this one, the normalizer modulo the subgroup."
        return [ coset for coset in range(self.index) if self.rerooted(coset) == self ]

    def class_size(self):
        "Number of conjugate subgroups."
        return self.index // len(self.normalizer_cosets())

    def conjugacy_representative(self):
        return min((self.rerooted(coset) for coset in range(self.index)), key=lambda t: t.key)

    def spanning_tree(self):
        """Map coset -> (parent coset, column) for the entry where the coset
        first appears, for every coset except the base.
        """
        tree = {}
        for coset, row in enumerate(self.rows):
            for column, image in enumerate(row):
                if image and image not in tree:
                    tree[image] = (coset, column)
        return tree

    def __eq__(self, other):
        if not isinstance(other, CosetTable):
            return NotImplemented
        return self.rank == other.rank and self.rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.rank, self.rows))

    def __repr__(self):
        return 'CosetTable(%r, rank=%d)' % (self.rows, self.rank)


class LowIndexSearch(object):
    "Backtracking over partial standardized coset tables."
    def __init__(self, p, max_index):
        self.rank = p.rank
        self.max_index = max_index
        self.columns = 2 * p.rank
        conjugates = [ set() for _ in range(self.columns) ]
        for relator in p.relators:
            if not relator:
                continue
            for word in rotations(relator) + rotations(invert(relator)):
                conjugates[word[0]].add(tuple(word))
        self.conjugates = [ sorted(words) for words in conjugates ]

    def _scan(self, table, coset, word, deductions):
        "Scan one relator cycle from both ends.  False on a conflict."
        length = len(word)
        forward, i = coset, 0
        while i < length:
            image = table[forward][word[i]]
            if image == UNDEFINED:
                break
            forward, i = image, i+1
        if i == length:
            return forward == coset
        backward, j = coset, length - 1
        while j > i:
            image = table[backward][word[j] ^ 1]
            if image == UNDEFINED:
                break
            backward, j = image, j-1
        if j == i:
            letter = word[i]
            if table[backward][letter ^ 1] != UNDEFINED:
                return table[backward][letter ^ 1] == forward
            table[forward][letter] = backward
            table[backward][letter ^ 1] = forward
            deductions.append( (forward, letter) )
        return True

    def _close(self, table, deductions):
        conjugates, scan = self.conjugates, self._scan
        while deductions:
            coset, column = deductions.pop()
            for word in conjugates[column]:
                if not scan(table, coset, word, deductions):
                    return False
        return True

    def _first_undefined(self, table, start):
        columns = self.columns
        for position in range(start, len(table) * columns):
            if table[position // columns][position % columns] == UNDEFINED:
                return position
        return None

    def tables(self):
        "Yield every complete standardized table, in search order."
        table = [ [UNDEFINED] * self.columns ]
        if not self._close(table, [ (0, column) for column in range(self.columns) ]):
            return
        stack = [ (table, 0) ]
        while stack:
            table, start = stack.pop()
            position = self._first_undefined(table, start)
            if position is None:
                yield CosetTable(table, self.rank)
                continue
            coset, column = divmod(position, self.columns)
            inverse = column ^ 1
            count = len(table)
            branches = []
            for target in range(count):
                if table[target][inverse] != UNDEFINED:
                    continue
                branch = [ row[:] for row in table ]
                branch[coset][column] = target
                branch[target][inverse] = coset
                if self._close(branch, [ (coset, column) ]):
                    branches.append(branch)
            if count < self.max_index:
                branch = [ row[:] for row in table ] + [ [UNDEFINED] * self.columns ]
                branch[coset][column] = count
                branch[count][inverse] = coset
                if self._close(branch, [ (coset, column) ]):
                    branches.append(branch)
            stack.extend( (branch, position+1) for branch in reversed(branches) )


def low_index(p, max_index, mode='all', bound=None):
    """Subgroups of index at most max_index, as standardized coset tables.

    In 'conjugacy-classes' mode only the least table of each conjugacy class
    is returned.  Tables are sorted by (index, rows).
    """
    if mode not in SEARCH_MODES:
        raise ValueError("Unknown mode %r, expected one of %s" % (mode, SEARCH_MODES))
    if max_index < 1:
        raise ValueError("max_index must be at least 1, got %r" % (max_index,))
    bound = MAX_INDEX_BOUND if bound is None else bound
    if max_index > bound:
        raise ResourceLimitError('index', max_index, bound)
    started = time.perf_counter()
    tables = sorted(LowIndexSearch(p, max_index).tables(), key=lambda t: t.key)
    logger.info("%s: %d subgroups of index <= %d in %.2fs",
                p, len(tables), max_index, time.perf_counter() - started)
    if mode == 'conjugacy-classes':
        tables = [ t for t in tables if t.conjugacy_representative() == t ]
        logger.info("%s: %d conjugacy classes", p, len(tables))
    return tables


class SubgroupPresentation(object):
    """Reidemeister-Schreier presentation.  Generator i stands for the
    table entry labels[i] = (coset, generator).
    """
    def __init__(self, labels, relators):
        self.labels = tuple(labels)
        self.relators = tuple(relators)

    @property
    def generator_count(self):
        return len(self.labels)

    def __repr__(self):
        return '<SubgroupPresentation generators=%d relators=%d>' % (
            self.generator_count, len(self.relators))


def _schreier_labels(t):
    tree = set()
    for image, (coset, column) in t.spanning_tree().items():
        tree.add( (coset, column) )
        tree.add( (image, column ^ 1) )
    return [ (coset, generator)
             for coset in range(t.index) for generator in range(t.rank)
             if (coset, 2*generator) not in tree ]

def schreier_presentation(p, t):
    labels = _schreier_labels(t)
    number = dict( (label, i) for i, label in enumerate(labels) )
    rows = t.rows
    relators = []
    for relator in p.relators:
        for start in range(t.index):
            letters = []
            coset = start
            for letter in relator:
                image = rows[coset][letter]
                if letter & 1:
                    i = number.get( (image, letter >> 1) )
                    if i is not None:
                        letters.append(2*i + 1)
                else:
                    i = number.get( (coset, letter >> 1) )
                    if i is not None:
                        letters.append(2*i)
                coset = image
            relators.append(free_reduce(letters, len(labels)))
    return SubgroupPresentation(labels, relators)

def abelianization(sp):
    return abelian_group([ exponent_vector(relator) for relator in sp.relators ],
                         sp.generator_count)


def invariant_profile(p, max_index, mode='all', bound=None, counting='subgroups'):
    """Map k -> Counter of the abelianizations of the subgroups of index k,
    for k = 1..max_index.

    With counting 'subgroups' every subgroup counts once; in
    'conjugacy-classes' mode each class is weighted by its size, which
    gives the same multisets.  With counting 'classes' every conjugacy
    class counts once, whatever the search mode.

    >>> from starspecial.stargraph import Presentation
    >>> G = Presentation.parse(['xxxxxx'], 1)
    >>> [ (str(a), n) for a, n in invariant_profile(G, 2, counting='classes')[2].items() ]
    [('Z_3', 1)]
    """
    if counting not in COUNTING_MODES:
        raise ValueError("Unknown counting %r, expected one of %s" % (counting, COUNTING_MODES))
    if counting == 'classes':
        mode = 'conjugacy-classes'
    profile = dict( (k, Counter()) for k in range(1, max_index+1) )
    for t in low_index(p, max_index, mode, bound):
        weight = 1
        if mode == 'conjugacy-classes' and counting == 'subgroups':
            weight = t.class_size()
        profile[t.index][abelianization(schreier_presentation(p, t))] += weight
    return profile

def _profile_job(arguments):
    return invariant_profile(*arguments)

def invariant_profiles(ps, max_index, mode='all', jobs=1, bound=None, counting='subgroups'):
    "Profiles of several presentations, optionally in worker processes."
    limit = MAX_INDEX_BOUND if bound is None else bound
    if max_index > limit:
        raise ResourceLimitError('index', max_index, limit)
    work = [ (p, max_index, mode, bound, counting) for p in ps ]
    if jobs > 1 and len(work) > 1:
        pool = Pool(min(jobs, len(work)))
        try:
            return pool.map(_profile_job, work)
        finally:
            pool.close()
            pool.join()
    return [ _profile_job(arguments) for arguments in work ]

def invariant_multiset(p, k, bound=None, counting='subgroups'):
    return invariant_profile(p, k, bound=bound, counting=counting)[k]


class SeparationWitness(namedtuple('SeparationWitness', 'index invariant count_p count_q')):
    def __str__(self):
        return 'index %d: %s occurs %d vs %d times' % (
            self.index, self.invariant, self.count_p, self.count_q)

def _witness_from_profiles(profile_p, profile_q, max_index):
    """Smallest index whose multisets differ.  Preference among the
    differing invariants: present only in p, then only in q, then differing
    counts; ties go to the least invariant.
    """
    for k in range(1, max_index+1):
        mp, mq = profile_p[k], profile_q[k]
        differing = [ a for a in sorted(set(mp) | set(mq)) if mp[a] != mq[a] ]
        if differing:
            best = min(differing, key=lambda a: (0 if not mq[a] else 1 if not mp[a] else 2, a))
            return SeparationWitness(k, best, mp[best], mq[best])
    return None

def distinguish(p, q, max_index, bound=None, counting='subgroups'):
    """An index and an abelian invariant whose multiplicities differ, or None
    if all multisets agree up to max_index.
    """
    return _witness_from_profiles(invariant_profile(p, max_index, bound=bound, counting=counting),
                                  invariant_profile(q, max_index, bound=bound, counting=counting),
                                  max_index)


class SeparationMatrix(object):
    "Witnesses for every unordered pair (i, j), i < j, None when unseparated."
    def __init__(self, size, max_index, cells, profiles, counting='subgroups'):
        self.size = size
        self.max_index = max_index
        self.counting = counting
        self.cells = dict(cells)
        self.profiles = profiles

    def __getitem__(self, pair):
        i, j = pair
        return self.cells[(i, j) if i < j else (j, i)]

    def unseparated(self):
        return sorted(pair for pair, witness in self.cells.items() if witness is None)

    def is_complete(self):
        return not self.unseparated()

def separation_matrix(ps, max_index, jobs=1, mode='all', bound=None, counting='subgroups'):
    profiles = invariant_profiles(ps, max_index, mode, jobs, bound, counting)
    cells = {}
    for i in range(len(ps)):
        for j in range(i+1, len(ps)):
            cells[(i, j)] = _witness_from_profiles(profiles[i], profiles[j], max_index)
    matrix = SeparationMatrix(len(ps), max_index, cells, profiles, counting)
    logger.info("%d of %d pairs separated up to index %d",
                len(cells) - len(matrix.unseparated()), len(cells), max_index)
    return matrix


def torsion_variants(ps, n):
    "The presentations with every relator raised to the n-th power."
    return [ p.power(n) for p in ps ]
