# -*- coding: utf-8 -*-
__doc__ = """
Equivalence of relators under signed-permutation automorphisms, cyclic
permutation and inversion.

Witnesses are step lists written left to right and separated by ';'.  A
step is a composition of the automorphisms phi_t (fix t, swap the other
two generators) and rho_t (invert t) joined by '.', 'invert', or 'rot s'
(the cyclic shift w[s:] + w[:s]).  Compositions apply left to right,
(f.g)(w) = g(f(w)).

>>> from starspecial.words import parse_exponent
>>> from starspecial.classify import *
>>> w = parse_exponent('x^2 y x z y^2 z^2', 3)
>>> w0 = parse_exponent('x^2 y^2 z^2 x z y', 3)
>>> str(replay(w, 'phi_x.phi_y;rot', w0).witness)
'phi_x.phi_y;rot 5'
>>> len(symmetry_group())
48
>>> sorted(str(u) for u in orbit(parse_exponent('x', 3)))
['X', 'Y', 'Z', 'x', 'y', 'z']
"""

__all__ = (
    'Move', 'Witness', 'EquivalenceClass', 'ReplayResult', 'TableCheck',
    'symmetry_group', 'generator_expressions', 'witness_parser',
    'orbit', 'partition', 'find_witness', 'replay',
    'verify_composition_table',
    )

import logging
from collections import deque, namedtuple
from itertools import permutations, product

from pyparsing import (Keyword, Optional, Regex, StringEnd, Suppress, Word,
                       ZeroOrMore, nums)

from starspecial import WITNESS_MAX_STEPS
from starspecial.catalog import composition_rows, relator_classes
from starspecial.words import (Letter, SignedPermutation, Word as FreeWord,
                               apply, identity, invert, is_cyclically_reduced,
                               phi, rho, rotate)
from starspecial.wordparser import cached

logger = logging.getLogger(__name__)


GENERATOR_MOVES = ' phi_x phi_y phi_z rho_x rho_y rho_z '

_GENERATOR_INDEX = {'x': 0, 'y': 1, 'z': 2}

def _generator_automorphism(name):
    kind, generator = name.split('_')
    return (phi if kind == 'phi' else rho)(_GENERATOR_INDEX[generator], 3)


class Move(namedtuple('Move', 'kind argument')):
    """One witness step: ('sigma', SignedPermutation), ('invert', None) or
    ('rotate', shift).  A rotation with shift None is unspecified.
    """
    def apply_to(self, word):
        if self.kind == 'sigma':
            return apply(self.argument, word)
        elif self.kind == 'invert':
            return invert(word)
        return rotate(word, self.argument)

    def __str__(self):
        if self.kind == 'sigma':
            expression = generator_expressions()[self.argument]
            return '.'.join(expression) if expression else 'id'
        elif self.kind == 'invert':
            return 'invert'
        elif self.argument is None:
            return 'rot'
        return 'rot %d' % self.argument

INVERT = Move('invert', None)


class Witness(tuple):
    "An ordered tuple of moves."
    def replay(self, word):
        for move in self:
            word = move.apply_to(word)
        return word

    def __str__(self):
        return ';'.join(str(move) for move in self)

    def __repr__(self):
        return 'Witness(%r)' % str(self)


class EquivalenceClass(namedtuple('EquivalenceClass', 'representative members witnesses')):
    "Members in sorted order, witnesses map each member to the representative."
    @property
    def size(self):
        return len(self.members)


def _all_signed_permutations(rank):
    for images, signs in product(permutations(range(rank)), product((1, -1), repeat=rank)):
        yield SignedPermutation(Letter(g, s) for g, s in zip(images, signs))

_expressions = {}

def generator_expressions():
    """Map every rank-3 signed permutation to a shortest expression in
    phi_t and rho_t, found by breadth-first closure from the identity.
    """
    if not _expressions:
        generators = [ (name, _generator_automorphism(name)) for name in GENERATOR_MOVES.split() ]
        expressions = {identity(3): ()}
        queue = deque([identity(3)])
        while queue:
            element = queue.popleft()
            for name, generator in generators:
                image = element.then(generator)
                if image not in expressions:
                    expressions[image] = expressions[element] + (name,)
                    queue.append(image)
        assert set(expressions) == set(_all_signed_permutations(3))
        _expressions.update(expressions)
    return _expressions

def symmetry_group():
    "The 48 signed permutations of x, y, z, identity first."
    expressions = generator_expressions()
    return sorted(expressions, key=lambda sigma: (len(expressions[sigma]), expressions[sigma]))


class WitnessParser(object):
    "Parses witness strings such as 'rho_x.rho_y.rho_z;invert;phi_z;rot 5'."
    def _parse_composition(self, s,p,t):
        sigma = identity(3)
        for name in t:
            if name != 'id':
                sigma = sigma.then(_generator_automorphism(name))
        return [ Move('sigma', sigma) ]

    def _parse_rotation(self, s,p,t):
        return [ Move('rotate', int(t[1]) if len(t) > 1 else None) ]

    @cached
    def p_composition(self):
        p_generator = Regex(r'(phi|rho)_[xyz]') | Keyword('id')
        p_composition = p_generator + ZeroOrMore( Suppress('.') + p_generator )
        p_composition.set_name('composition')
        p_composition.set_parse_action(self._parse_composition)
        return p_composition

    @cached
    def p_step(self):
        p_invert = Keyword('invert').set_parse_action(lambda: [INVERT])
        p_rotation = Keyword('rot') + Optional(Word(nums))
        p_rotation.set_parse_action(self._parse_rotation)
        return p_invert | p_rotation | self.p_composition()

    @cached
    def p_witness(self):
        p_step = self.p_step()
        return Optional( p_step + ZeroOrMore(Suppress(';') + p_step) ) + StringEnd()

    def parse(self, text):
        return Witness(self.p_witness().parse_string(text, parse_all=True))

witness_parser = WitnessParser()


def _move_tables(rank, length):
    "Moves acting on raw letter tuples, in search order."
    moves = []
    for sigma in symmetry_group()[1:]:
        table = tuple(sigma.image(column) for column in range(2*rank))
        moves.append( (Move('sigma', sigma),
                       lambda w, table=table: tuple(table[c] for c in w)) )
    moves.append( (INVERT, lambda w: tuple(c ^ 1 for c in reversed(w))) )
    for shift in range(1, length):
        moves.append( (Move('rotate', shift),
                       lambda w, shift=shift: w[shift:] + w[:shift]) )
    return moves

def _check_word(w):
    if w.rank != 3:
        raise ValueError("Equivalence is defined for rank 3, got rank %d" % w.rank)
    if not is_cyclically_reduced(w):
        raise ValueError("%s is not cyclically reduced" % (w,))

def orbit(w):
    "Closure of {w} under automorphisms, rotations and inversion."
    _check_word(w)
    start = tuple(w)
    seen = set([start])
    queue = deque([start])
    moves = [ move for _, move in _move_tables(3, min(len(w), 2)) ]
    while queue:
        word = queue.popleft()
        for move in moves:
            image = move(word)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return set( FreeWord(word, 3) for word in seen )

def find_witness(w, target, max_steps=WITNESS_MAX_STEPS):
    "Breadth-first search for a shortest step list mapping w to target."
    _check_word(w)
    _check_word(target)
    start, goal = tuple(w), tuple(target)
    if start == goal:
        return Witness()
    if len(start) != len(goal):
        return None
    moves = _move_tables(3, len(start))
    parents = {start: None}
    frontier = [start]
    for depth in range(max_steps):
        next_frontier = []
        for word in frontier:
            for step, move in moves:
                image = move(word)
                if image in parents:
                    continue
                parents[image] = (word, step)
                if image == goal:
                    steps = []
                    while parents[image] is not None:
                        image, step = parents[image]
                        steps.append(step)
                    return Witness(reversed(steps))
                next_frontier.append(image)
        frontier = next_frontier
    return None


def partition(ws):
    "Split the words into the intersections of their orbits with the input."
    words = sorted(ws)
    if len(set(words)) != len(words):
        duplicates = sorted(set(w for w in words if words.count(w) > 1))
        raise ValueError("Duplicate words: %s" % ', '.join(str(w) for w in duplicates))
    remaining = set(words)
    classes = []
    for w in words:
        if w not in remaining:
            continue
        members = sorted(orbit(w) & remaining)
        remaining.difference_update(members)
        representative = members[0]
        witnesses = dict( (member, find_witness(member, representative)) for member in members )
        classes.append(EquivalenceClass(representative, members, witnesses))
    logger.info("%d words fall into %d classes", len(words), len(classes))
    return classes


ReplayResult = namedtuple('ReplayResult', 'ok witness needs_inversion')

def _resolve(word, moves, chosen=()):
    "Yield (concrete moves, result) for every choice of unspecified shifts."
    if not moves:
        yield Witness(chosen), word
        return
    move, rest = moves[0], moves[1:]
    if move.kind == 'rotate' and move.argument is None:
        choices = [ Move('rotate', shift) for shift in range(max(len(word), 1)) ]
    else:
        choices = [ move ]
    for choice in choices:
        for result in _resolve(choice.apply_to(word), rest, chosen + (choice,)):
            yield result

def replay(word, witness, target):
    """Apply a witness (a Witness or its text) literally and compare with
    target.  Unspecified rotations are searched.  A composition that ends
    on a rotation of the inverse of target is completed by 'invert;rot s'
    and flagged as needing inversion.
    """
    if not isinstance(witness, Witness):
        witness = witness_parser.parse(witness)
    outcomes = list(_resolve(word, tuple(witness)))
    for concrete, result in outcomes:
        if result == target:
            return ReplayResult(True, concrete, False)
    for concrete, result in outcomes:
        inverse = invert(result)
        for shift in range(len(inverse)):
            if rotate(inverse, shift) == target:
                completed = Witness(tuple(concrete) + (INVERT, Move('rotate', shift)))
                return ReplayResult(True, completed, True)
    return ReplayResult(False, witness, False)


TableCheck = namedtuple('TableCheck',
                        'number member composition ok witness needs_inversion generated')

def verify_composition_table():
    """Replay every row of the builtin composition table, then generate a
    witness for each class member that has no row.
    """
    checks = []
    listed = {}
    for number, member, composition, w0 in composition_rows():
        result = replay(member, composition, w0)
        if not result.ok:
            logger.warning("class %d: %s does not map %s to %s", number, composition, member, w0)
        checks.append(TableCheck(number, member, composition, result.ok, result.witness,
                                 result.needs_inversion, False))
        listed.setdefault(number, (w0, set()))[1].add(member)
    for number, members in enumerate(relator_classes(), 1):
        w0, rows = listed[number]
        for member in members:
            if member == w0 or member in rows:
                continue
            witness = find_witness(member, w0)
            logger.info("class %d: %s has no table row, generated %s", number, member, witness)
            checks.append(TableCheck(number, member, None, witness is not None, witness,
                                     False, True))
    return checks
