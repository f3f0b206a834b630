# -*- coding: utf-8 -*-
__doc__ = """
Parsers for the text formats of words.

Three formats are registered in 'word_parsers':

* 'compact': one character per letter, uppercase means inverse (rank <= 3)
* 'indexed': names x1, x2, ... with a trailing apostrophe for the inverse
* 'exponent': whitespace separated factors g, g^k, g^-k

Usage examples:

>>> from starspecial.wordparser import word_parsers
>>> word_parsers['compact'].parse('xxyXzyZyz', 3)
Word('xxyXzyZyz', rank=3)
>>> word_parsers['exponent'].parse('x^2 y x^-1 z y z^-1 y z', 3)
Word('xxyXzyZyz', rank=3)
>>> word_parsers['indexed'].parse("x1 x2 x2' x4", 4)
Word("x1 x2 x2' x4", rank=4)
>>> word_parsers['exponent'].parse('x1^2 x4^-1', 4)
Word("x1 x1 x4'", rank=4)
>>> try:
...     word_parsers['compact'].parse('xxw', 3)
... except ParseException:
...     print('rejected')
rejected
"""

__all__ = (
    'word_parsers', 'ConverterRegistry', 'cached',
    'GENERATOR_NAMES',
    'ParseException'   # from pyparsing
    )

from pyparsing import (Char, Combine, Optional, ParseException, Regex,
                       StringEnd, Suppress, Word, ZeroOrMore, nums, one_of)

from starspecial.words import Letter
from starspecial.words import Word as FreeWord


# Generator names of the compact format, in generator order.
GENERATOR_NAMES = ' x y z '


class cached(object):
    "Property decorator to only calculate the value of a function once."
    def __init__(self, function):
        self.function = function
        self.name = function.__name__
    def __get__(self, instance, owner):
        if instance is None:
            return self
        result = self.function(instance)
        def return_result():
            return result
        setattr(instance, self.name, return_result)
        return return_result


class WordTokenizer(object):
    """Defines the letter grammars for one rank.
    All letter tokens are converted to (generator, sign) pairs,
    exponent factors to (generator, exponent) pairs.
    """
    COMPACT_NAMES = ''.join(GENERATOR_NAMES.split())

    def __init__(self, rank):
        self.rank = rank

    def _parse_compact_name(self, s,p,t):
        name = t[0]
        return [ (self.COMPACT_NAMES.index(name.lower()), -1 if name.isupper() else 1) ]

    def _parse_indexed_name(self, s,p,t):
        name = t[0]
        index = int(name[1:].rstrip("'"))
        if not 1 <= index <= self.rank:
            raise ParseException(s, p, 'generator %s outside rank %d' % (name, self.rank))
        return [ (index - 1, -1 if name.endswith("'") else 1) ]

    def _parse_factor(self, s,p,t):
        (generator, sign) = t[0]
        exponent = int(t[1]) if len(t) > 1 else 1
        if exponent == 0:
            raise ParseException(s, p, 'zero exponent')
        return [ (generator, sign * exponent) ]

    @cached
    def p_compact_letter(self):
        names = self.COMPACT_NAMES[:self.rank]
        p_letter = Char(names + names.upper())
        p_letter.set_name('letter')
        p_letter.set_parse_action(self._parse_compact_name)
        return p_letter

    @cached
    def p_indexed_letter(self):
        p_letter = Regex(r"x[0-9]+'?")
        p_letter.set_name('indexed letter')
        p_letter.set_parse_action(self._parse_indexed_name)
        return p_letter

    @cached
    def p_indexed_name(self):
        p_name = Regex(r"x[0-9]+")
        p_name.set_name('generator')
        p_name.set_parse_action(self._parse_indexed_name)
        return p_name

    @cached
    def p_exponent(self):
        p_exponent = Combine( Optional(one_of('+ -')) + Word(nums) )
        p_exponent.leave_whitespace()
        p_exponent.set_name('exponent')
        return p_exponent

    @cached
    def p_factor(self):
        p_name = self.p_indexed_name()
        if self.rank <= len(self.COMPACT_NAMES):
            names = self.COMPACT_NAMES[:self.rank]
            p_compact = Char(names).set_parse_action(self._parse_compact_name)
            p_name = p_name | p_compact
        p_factor = p_name + Optional( Suppress('^') + self.p_exponent() )
        p_factor.set_name('factor')
        p_factor.set_parse_action(self._parse_factor)
        return p_factor

    @cached
    def p_compact_word(self):
        return ZeroOrMore(self.p_compact_letter()) + StringEnd()

    @cached
    def p_indexed_word(self):
        return ZeroOrMore(self.p_indexed_letter()) + StringEnd()

    @cached
    def p_exponent_word(self):
        return ZeroOrMore(self.p_factor()) + StringEnd()


class WordParser(object):
    "Parses one text format into words, building one grammar per rank."
    GRAMMAR = None

    def __init__(self):
        self._grammars = {}

    def grammar(self, rank):
        try:
            return self._grammars[rank]
        except KeyError:
            grammar = getattr(WordTokenizer(rank), self.GRAMMAR)()
            self._grammars[rank] = grammar
            return grammar

    def parse(self, text, rank):
        tokens = self.grammar(rank).parse_string(text, parse_all=True)
        return FreeWord(self._expand(tokens), rank)

    def _expand(self, tokens):
        return [ Letter(generator, sign) for generator, sign in tokens ]


class CompactWordParser(WordParser):
    GRAMMAR = 'p_compact_word'

    def grammar(self, rank):
        if rank > len(WordTokenizer.COMPACT_NAMES):
            raise ValueError("The compact format has no names for rank %d, use 'indexed'" % rank)
        return super(CompactWordParser, self).grammar(rank)


class IndexedWordParser(WordParser):
    GRAMMAR = 'p_indexed_word'


class ExponentWordParser(WordParser):
    GRAMMAR = 'p_exponent_word'

    def _expand(self, tokens):
        letters = []
        for generator, exponent in tokens:
            letters.extend( [Letter(generator, 1 if exponent > 0 else -1)] * abs(exponent) )
        return letters


class ConverterRegistry(object):
    """Objects of this class are used to reference the different converters.

    Subclasses must define an attribute _METHOD_NAME that names the
    conversion method that converters must provide
    """
    def __init__(self):
        self._converters  = {}

    def register_converter(self, converter_type, converter):
        "Register a converter for a converter type."
        if hasattr(self, '_METHOD_NAME') and not hasattr(converter, self._METHOD_NAME):
            raise TypeError("Converters must have a '%s' method." % self._METHOD_NAME)
        self._converters[converter_type] = converter

    def converter(self, converter_type):
        "Return the converter for the given type, ValueError if none is registered."
        try:
            return self._converters[converter_type]
        except KeyError:
            raise ValueError("Unknown type %r, expected one of %s"
                             % (converter_type, ', '.join(self.known_types())))

    __getitem__ = converter

    def known_types(self):
        "Return the currently registered converter types."
        return sorted(self._converters)


class WordParsing(ConverterRegistry):
    _METHOD_NAME = 'parse'

    def parse(self, text, rank, input_type):
        "Parse a text of the given input type into a word."
        return self.converter(input_type).parse(text, rank)


word_parsers = WordParsing()

word_parsers.register_converter('compact',  CompactWordParser())
word_parsers.register_converter('indexed',  IndexedWordParser())
word_parsers.register_converter('exponent', ExponentWordParser())
