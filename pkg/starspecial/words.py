# -*- coding: utf-8 -*-
__doc__ = """
Free-group words: letters, words and signed-permutation automorphisms.

A letter is a signed generator.  It is stored as its column number
2*generator + (1 if inverted), which is also the letter order used for all
canonical forms: x < x^-1 < y < y^-1 < z < z^-1 < ...

All words are immutable values; every operation returns a new word.

Usage examples:

>>> from starspecial.words import *
>>> w = parse_compact('xxyXzyZyz', 3)
>>> w
Word('xxyXzyZyz', rank=3)
>>> w == parse_exponent('x^2 y x^-1 z y z^-1 y z', 3)
True
>>> exponent_vector(w)
(1, 3, 1)
>>> free_reduce(parse_compact('xyYz', 3))
Word('xz', rank=3)
>>> cyclic_reduce(parse_compact('xyX', 3))
Word('y', rank=3)
>>> invert(parse_compact('xxy', 3))
Word('YXX', rank=3)
>>> canonical_cyclic(parse_compact('yx', 2))
Word('xy', rank=2)

Automorphisms compose left to right, (f.then(g))(w) = g(f(w)):

>>> apply(phi(0, 3), parse_compact('xxy', 3))
Word('xxz', rank=3)
>>> apply(rho(1, 3), parse_compact('xxy', 3))
Word('xxY', rank=3)
>>> rotate(apply(phi(0, 3).then(phi(1, 3)), parse_compact('xxyxzyyzz', 3)), 5)
Word('xxyyzzxzy', rank=3)
"""

__all__ = (
    'Letter', 'Word', 'SignedPermutation',
    'identity', 'phi', 'rho',
    'parse_compact', 'parse_exponent',
    'free_reduce', 'cyclic_reduce', 'is_cyclically_reduced', 'is_positive',
    'invert', 'rotate', 'rotations', 'apply', 'power', 'concat',
    'canonical_cyclic', 'exponent_vector',
    )


class Letter(int):
    """A signed generator.

    >>> Letter(1, -1)
    Letter(1, -1)
    >>> int(Letter(1, -1)), Letter(1, -1).inverse()
    (3, Letter(1, 1))
    """
    __slots__ = ()

    def __new__(cls, generator, sign=1):
        if sign not in (1, -1):
            raise ValueError("Letter sign must be +1 or -1, got %r" % (sign,))
        if generator < 0:
            raise ValueError("Generator index must be non-negative, got %r" % (generator,))
        return int.__new__(cls, 2*generator + (sign < 0))

    @classmethod
    def from_column(cls, column):
        return int.__new__(cls, column)

    def __getnewargs__(self):
        return (self.generator, self.sign)

    @property
    def generator(self):
        return int(self) >> 1

    @property
    def sign(self):
        return -1 if int(self) & 1 else 1

    def inverse(self):
        return int.__new__(Letter, int(self) ^ 1)

    def __repr__(self):
        return 'Letter(%d, %d)' % (self.generator, self.sign)


class Word(tuple):
    """A sequence of letters over the free group of the given rank.

    Words compare lexicographically by letter order.  Two words are equal
    iff their letters and their ranks are equal.
    """
    def __new__(cls, letters=(), rank=3):
        word = tuple.__new__(cls, [ letter if type(letter) is Letter
                                    else Letter.from_column(letter)
                                    for letter in letters ])
        bound = 2 * rank
        for letter in word:
            if not 0 <= letter < bound:
                raise ValueError("Letter %r outside the free group of rank %d" % (letter, rank))
        word.rank = rank
        return word

    def __getnewargs__(self):
        return (tuple(self), self.rank)

    def columns(self):
        "The letters as plain column numbers, the keys of the letter order."
        return tuple(int(letter) for letter in self)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(tuple.__getitem__(self, index), self.rank)
        return tuple.__getitem__(self, index)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.rank == other.rank and tuple.__eq__(self, other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((tuple(self), self.rank))

    def __str__(self):
        from starspecial.wordbuilder import word_formatters
        return word_formatters['compact'].build(self)

    def __repr__(self):
        return 'Word(%r, rank=%d)' % (str(self), self.rank)


class SignedPermutation(tuple):
    """Automorphism of the free group sending each generator to a signed
    generator.  Entry g is the image Letter of generator g.
    """
    def __new__(cls, images):
        images = tuple.__new__(cls, [ image if type(image) is Letter
                                      else Letter.from_column(image)
                                      for image in images ])
        if sorted(image.generator for image in images) != list(range(len(images))):
            raise ValueError("Generator images must form a bijection: %r" % (images,))
        return images

    @property
    def rank(self):
        return len(self)

    def image(self, letter):
        image = tuple.__getitem__(self, letter >> 1)
        return image.inverse() if letter & 1 else image

    def then(self, other):
        "Compose left to right: the result applies self first, then other."
        if other.rank != self.rank:
            raise ValueError("Cannot compose automorphisms of rank %d and %d"
                             % (self.rank, other.rank))
        return SignedPermutation(other.image(image) for image in self)

    def permute_vector(self, vector):
        "The action on abelianized exponent vectors."
        result = [0] * self.rank
        for exponent, image in zip(vector, self):
            result[image.generator] += image.sign * exponent
        return tuple(result)

    def __repr__(self):
        return 'SignedPermutation(%s)' % ', '.join(
            '%s%d' % ('-' if image.sign < 0 else '+', image.generator) for image in self)


def identity(rank):
    return SignedPermutation(Letter(g) for g in range(rank))

def phi(t, rank=3):
    "The automorphism fixing generator t and swapping the other two."
    if rank != 3:
        raise ValueError("phi is defined for rank 3 only")
    a, b = [ g for g in range(3) if g != t ]
    images = [ Letter(g) for g in range(3) ]
    images[a], images[b] = images[b], images[a]
    return SignedPermutation(images)

def rho(t, rank=3):
    "The automorphism inverting generator t."
    return SignedPermutation(Letter(g, -1 if g == t else 1) for g in range(rank))


def parse_compact(text, rank):
    from starspecial.wordparser import word_parsers
    return word_parsers['compact' if rank <= 3 else 'indexed'].parse(text, rank)

def parse_exponent(text, rank):
    from starspecial.wordparser import word_parsers
    return word_parsers['exponent'].parse(text, rank)


def _check_rank(*items):
    ranks = set(item.rank for item in items)
    if len(ranks) > 1:
        raise ValueError("Mixed ranks %s" % sorted(ranks))

def _reduce_columns(columns):
    stack = []
    for letter in columns:
        if stack and stack[-1] ^ 1 == letter:
            stack.pop()
        else:
            stack.append(letter)
    return stack

def _rank_of(w):
    rank = getattr(w, 'rank', None)
    if rank is None:
        rank = max([3] + [ int(letter) // 2 + 1 for letter in w ])
    return rank

def free_reduce(w, rank=None):
    """Cancel adjacent letter-inverse pairs.

    Plain column sequences get the rank of a Word, 3, or the least rank
    holding their letters.

    >>> free_reduce([0, 2, 3, 1, 4])
    Word('z', rank=3)
    """
    return Word(_reduce_columns(w), _rank_of(w) if rank is None else rank)

def cyclic_reduce(w):
    letters = _reduce_columns(w)
    start, end = 0, len(letters)
    while end - start > 1 and letters[start] ^ 1 == letters[end-1]:
        start += 1
        end   -= 1
    return Word(letters[start:end], _rank_of(w))

def is_cyclically_reduced(w):
    if len(_reduce_columns(w)) != len(w):
        return False
    return len(w) < 2 or w[0] ^ 1 != w[-1]

def is_positive(w):
    return all(letter.sign > 0 for letter in w)

def invert(w):
    return Word([ letter ^ 1 for letter in reversed(w) ], w.rank)

def rotate(w, shift):
    "The cyclic shift w[shift:] + w[:shift]."
    if not w:
        return w
    shift %= len(w)
    return Word(tuple(w[shift:]) + tuple(w[:shift]), w.rank)

def rotations(w):
    "All len(w) cyclic shifts of w in shift order, duplicates retained."
    return [ rotate(w, shift) for shift in range(len(w)) ]

def apply(sigma, w):
    "Letterwise image of w under sigma, freely reduced."
    _check_rank(sigma, w)
    image = sigma.image
    return Word(_reduce_columns([ image(letter) for letter in w ]), w.rank)

def power(w, n):
    if n < 1:
        raise ValueError("Power must be at least 1, got %r" % (n,))
    return Word(_reduce_columns(tuple(w) * n), w.rank)

def concat(u, v):
    _check_rank(u, v)
    return Word(_reduce_columns(tuple(u) + tuple(v)), u.rank)

def canonical_cyclic(w):
    """The least word among the rotations of w and of its inverse.

    Two cyclically reduced words have the same canonical form iff they are
    freely conjugate to each other or to each other's inverse.
    """
    w = cyclic_reduce(w)
    if not w:
        return w
    return min(rotations(w) + rotations(invert(w)))

def exponent_vector(w):
    vector = [0] * w.rank
    for letter in w:
        vector[letter >> 1] += -1 if letter & 1 else 1
    return tuple(vector)
